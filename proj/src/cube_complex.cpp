#include "conftc/cube_complex.hpp"

#include <algorithm>
#include <queue>

namespace conftc {

int CubeComplex::cell_count(int dim) const {
    if (dim < 0 || dim > top_dim()) return 0;
    return static_cast<int>(cells_[static_cast<size_t>(dim)].size()) / std::max(k_, 1);
}

long CubeComplex::total_cells() const {
    long total = 0;
    for (int d = 0; d <= top_dim(); ++d) total += cell_count(d);
    return total;
}

const int* CubeComplex::cell(int dim, int idx) const {
    return cells_[static_cast<size_t>(dim)].data() + static_cast<size_t>(idx) * static_cast<size_t>(k_);
}

uint64_t CubeComplex::key_of(const int* coords) const {
    uint64_t key = 0;
    for (int i = 0; i < k_; ++i) key = key * code_base_ + static_cast<uint64_t>(coords[i]);
    return key;
}

std::optional<int> CubeComplex::cell_index(int dim, const std::vector<int>& coords) const {
    if (dim < 0 || dim > top_dim()) return std::nullopt;
    auto it = index_[static_cast<size_t>(dim)].find(key_of(coords.data()));
    if (it == index_[static_cast<size_t>(dim)].end()) return std::nullopt;
    return it->second;
}

const std::vector<Triplet>& CubeComplex::boundary(int dim) const {
    return boundary_.at(static_cast<size_t>(dim));
}

std::vector<int> CubeComplex::vertex_cell_neighbors(int idx) const {
    std::vector<int> out;
    if (top_dim() < 1) return out;
    for (const Triplet& t : boundary_[1]) {
        if (t.row != idx) continue;
        for (const Triplet& s : boundary_[1])
            if (s.col == t.col && s.row != idx) out.push_back(s.row);
    }
    return out;
}

int CubeComplex::skeleton_component_count() const {
    const int n0 = cell_count(0);
    if (n0 == 0) return 0;
    // adjacency from 1-cells
    std::vector<std::vector<int>> adj(static_cast<size_t>(n0));
    if (top_dim() >= 1) {
        std::unordered_map<int, std::vector<int>> ends;  // 1-cell -> its two 0-cells
        for (const Triplet& t : boundary_[1]) ends[t.col].push_back(t.row);
        for (auto& [e, vs] : ends) {
            if (vs.size() == 2 && vs[0] != vs[1]) {
                adj[static_cast<size_t>(vs[0])].push_back(vs[1]);
                adj[static_cast<size_t>(vs[1])].push_back(vs[0]);
            }
        }
    }
    std::vector<bool> seen(static_cast<size_t>(n0), false);
    int comps = 0;
    for (int s = 0; s < n0; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++comps;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = true;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    q.push(w);
                }
        }
    }
    return comps;
}

CubeComplex CubeComplex::build(const Graph& g, int k, long max_cells) {
    if (k < 1) throw PreconditionError("configuration spaces need k >= 1 particles");
    if (g.has_loops())
        throw PreconditionError("cube complex enumeration expects a loop-free multigraph");

    CubeComplex c;
    c.k_ = k;
    c.graph_ = g;
    const int ncodes = 2 * std::max(g.vertex_count(), g.edge_count());
    c.code_base_ = static_cast<uint64_t>(std::max(ncodes, 2));

    // closure of each cell code as vertex indices
    const int total_codes = 2 * std::max(g.vertex_count(), g.edge_count());
    std::vector<std::vector<int>> closure(static_cast<size_t>(total_codes));
    std::vector<int> all_codes;
    for (int v = 0; v < g.vertex_count(); ++v) {
        closure[static_cast<size_t>(vertex_code(v))] = {v};
        all_codes.push_back(vertex_code(v));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        closure[static_cast<size_t>(edge_code(e))] = {g.edge(e).u, g.edge(e).v};
        all_codes.push_back(edge_code(e));
    }
    std::sort(all_codes.begin(), all_codes.end());

    const int max_dim = std::min(k, g.edge_count());
    c.cells_.resize(static_cast<size_t>(max_dim) + 1);
    c.index_.resize(static_cast<size_t>(max_dim) + 1);

    std::vector<bool> blocked(static_cast<size_t>(g.vertex_count()), false);
    std::vector<int> tuple(static_cast<size_t>(k));
    long produced = 0;

    auto emit = [&](int dim) {
        if (++produced > max_cells)
            throw ResourceLimitError("cell count exceeds the configured ceiling of " +
                                     std::to_string(max_cells));
        auto& flat = c.cells_[static_cast<size_t>(dim)];
        const int idx = static_cast<int>(flat.size()) / k;
        flat.insert(flat.end(), tuple.begin(), tuple.end());
        c.index_[static_cast<size_t>(dim)].emplace(c.key_of(tuple.data()), idx);
    };

    // depth-first enumeration in code order gives lexicographically sorted
    // cells within each dimension
    auto recurse = [&](auto&& self, int slot, int dim) -> void {
        if (slot == k) {
            emit(dim);
            return;
        }
        for (int code : all_codes) {
            const auto& cl = closure[static_cast<size_t>(code)];
            bool ok = true;
            for (int v : cl)
                if (blocked[static_cast<size_t>(v)]) { ok = false; break; }
            if (!ok) continue;
            for (int v : cl) blocked[static_cast<size_t>(v)] = true;
            tuple[static_cast<size_t>(slot)] = code;
            self(self, slot + 1, dim + (code_is_edge(code) ? 1 : 0));
            for (int v : cl) blocked[static_cast<size_t>(v)] = false;
        }
    };
    recurse(recurse, 0, 0);

    // trim empty top dimensions
    while (!c.cells_.empty() && c.cells_.back().empty()) {
        c.cells_.pop_back();
        c.index_.pop_back();
    }

    // cubical boundary: the i-th edge coordinate (in slot order) carries sign
    // (-1)^(i-1), and the edge is replaced by head minus tail
    c.boundary_.resize(c.cells_.size());
    for (int dim = 1; dim <= c.top_dim(); ++dim) {
        auto& tris = c.boundary_[static_cast<size_t>(dim)];
        const int n = c.cell_count(dim);
        std::vector<int> face(static_cast<size_t>(k));
        for (int idx = 0; idx < n; ++idx) {
            const int* coords = c.cell(dim, idx);
            int edge_no = 0;
            for (int slot = 0; slot < k; ++slot) {
                if (!code_is_edge(coords[slot])) continue;
                const int sign = (edge_no % 2 == 0) ? 1 : -1;
                ++edge_no;
                const int e = code_index(coords[slot]);
                for (int end = 0; end < 2; ++end) {
                    std::copy(coords, coords + k, face.begin());
                    face[static_cast<size_t>(slot)] = vertex_code(g.endpoint(e, end));
                    const auto fidx = c.cell_index(dim - 1, face);
                    if (!fidx)
                        throw InvalidInputError("boundary face missing from enumeration");
                    // end 1 is the head (+), end 0 the tail (-)
                    tris.push_back({*fidx, idx, end == 1 ? sign : -sign});
                }
            }
        }
    }
    return c;
}

int SubdivisionCertificate::subdivided_vertex(int v) const {
    return map.vertex_map[static_cast<size_t>(loop_map.vertex_map[static_cast<size_t>(v)])];
}

std::vector<int> SubdivisionCertificate::subdivided_chain(int e) const {
    std::vector<int> out;
    for (int mid : loop_map.chains[static_cast<size_t>(e)].edges) {
        const EdgeChain& ch = map.chains[static_cast<size_t>(mid)];
        out.insert(out.end(), ch.edges.begin(), ch.edges.end());
    }
    return out;
}

std::vector<int> SubdivisionCertificate::chain_inner_vertices(int e) const {
    std::vector<int> out;
    const auto& loop_chain = loop_map.chains[static_cast<size_t>(e)];
    for (size_t i = 0; i < loop_chain.edges.size(); ++i) {
        const EdgeChain& ch = map.chains[static_cast<size_t>(loop_chain.edges[i])];
        out.insert(out.end(), ch.inner_vertices.begin(), ch.inner_vertices.end());
        if (i + 1 < loop_chain.edges.size())
            out.push_back(map.vertex_map[static_cast<size_t>(loop_chain.inner_vertices[i])]);
    }
    return out;
}

Discretization discretize(const Graph& g, int k, long max_cells) {
    if (!g.is_connected()) throw PreconditionError("discretize requires a connected graph");
    if (k < 1) throw PreconditionError("discretize requires k >= 1");
    const int parts = k + 1;
    Discretization d;
    d.certificate.parts = parts;
    d.certificate.k = k;
    d.certificate.loop_free = subdivide_loops(g, &d.certificate.loop_map);
    d.certificate.subdivided = subdivide(d.certificate.loop_free, parts, &d.certificate.map);
    d.complex = CubeComplex::build(d.certificate.subdivided, k, max_cells);
    return d;
}

SparseChain cycle_from_motion(const CubeComplex& c, const std::vector<int>& start,
                              const std::vector<Move>& moves) {
    const Graph& g = c.graph();
    if (static_cast<int>(start.size()) != c.k())
        throw InvalidInputError("start configuration must place all k particles");

    std::vector<int> at = start;  // vertex per particle
    auto check_distinct = [&]() {
        for (size_t i = 0; i < at.size(); ++i)
            for (size_t j = i + 1; j < at.size(); ++j)
                if (at[i] == at[j]) throw InvalidInputError("particles share a vertex");
    };
    check_distinct();

    SparseChain chain;
    std::vector<int> coords(static_cast<size_t>(c.k()));
    for (const Move& mv : moves) {
        if (mv.particle < 0 || mv.particle >= c.k()) throw InvalidInputError("bad particle index");
        const auto& ed = g.edge(mv.edge);
        const int from = mv.forward ? ed.u : ed.v;
        const int to = mv.forward ? ed.v : ed.u;
        if (at[static_cast<size_t>(mv.particle)] != from)
            throw InvalidInputError("move does not start at the particle's vertex");
        for (int p = 0; p < c.k(); ++p) {
            if (p == mv.particle) continue;
            if (at[static_cast<size_t>(p)] == ed.u || at[static_cast<size_t>(p)] == ed.v)
                throw InvalidInputError("move slides across an edge whose closure is occupied");
        }
        for (int p = 0; p < c.k(); ++p)
            coords[static_cast<size_t>(p)] = p == mv.particle
                                                 ? CubeComplex::edge_code(mv.edge)
                                                 : CubeComplex::vertex_code(at[static_cast<size_t>(p)]);
        const auto idx = c.cell_index(1, coords);
        if (!idx) throw InvalidInputError("traversed 1-cell is not present in the complex");
        Int& coefficient = chain[*idx];
        coefficient += mv.forward ? 1 : -1;
        if (coefficient == 0) chain.erase(*idx);
        at[static_cast<size_t>(mv.particle)] = to;
    }
    if (at != start) throw InvalidInputError("motion does not return to its start configuration");
    return chain;
}

}  // namespace conftc
