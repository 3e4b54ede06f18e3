#include "conftc/planarity.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace conftc {

namespace {

struct DirEdge {
    int e;
    int dir;  // 0: u->v, 1: v->u
};

int head_of(const Graph& g, const DirEdge& d) { return d.dir == 0 ? g.edge(d.e).v : g.edge(d.e).u; }
int tail_of(const Graph& g, const DirEdge& d) { return d.dir == 0 ? g.edge(d.e).u : g.edge(d.e).v; }

using Face = std::vector<DirEdge>;

/// Incremental planar embedding of one simple biconnected block: start from
/// a cycle, repeatedly route a path of some bridge through an admissible
/// face. Fails exactly when a bridge has no admissible face.
class BlockEmbedder {
public:
    explicit BlockEmbedder(const Graph& g, const std::vector<int>& block_edges)
        : g_(g), in_block_(static_cast<size_t>(g.edge_count()), false) {
        for (int e : block_edges) in_block_[static_cast<size_t>(e)] = true;
        block_edges_ = block_edges;
    }

    bool run();

    /// Rotation successor pairs extracted from the final faces:
    /// arriving half-edge -> departing half-edge, per vertex.
    std::map<std::pair<int, int>, std::pair<int, int>> successor_map() const;

private:
    const Graph& g_;
    std::vector<bool> in_block_;
    std::vector<int> block_edges_;
    std::vector<bool> emb_edge_ = {};
    std::vector<bool> emb_vertex_ = {};
    std::vector<Face> faces_;

    std::vector<int> find_cycle() const;

    struct Bridge {
        std::vector<int> att;       // attachment vertices (embedded), sorted
        std::vector<int> interior;  // unembedded vertices
        int single_edge = -1;       // set for one-edge bridges
    };
    std::vector<Bridge> bridges() const;
    std::vector<int> face_vertices(const Face& f) const;
    /// Path between two attachments through the bridge: vertex sequence.
    std::vector<int> bridge_path(const Bridge& b) const;
    void embed_path(const std::vector<int>& path, size_t face_idx);
};

std::vector<int> BlockEmbedder::find_cycle() const {
    // DFS cycle in the block
    std::vector<int> parent_vertex(static_cast<size_t>(g_.vertex_count()), -2);
    std::vector<int> parent_edge(static_cast<size_t>(g_.vertex_count()), -1);
    int start = g_.edge(block_edges_.front()).u;
    std::vector<int> stack{start};
    parent_vertex[static_cast<size_t>(start)] = -1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const HalfEdge& h : g_.incident(v)) {
            if (!in_block_[static_cast<size_t>(h.edge)]) continue;
            if (h.edge == parent_edge[static_cast<size_t>(v)]) continue;
            const int w = g_.other_endpoint(h.edge, v);
            if (parent_vertex[static_cast<size_t>(w)] == -2) {
                parent_vertex[static_cast<size_t>(w)] = v;
                parent_edge[static_cast<size_t>(w)] = h.edge;
                stack.push_back(w);
            } else {
                // back edge: w already seen; close the cycle v ... w
                std::vector<int> path_v{v};
                int x = v;
                while (x != -1) {
                    x = parent_vertex[static_cast<size_t>(x)];
                    if (x != -1) path_v.push_back(x);
                }
                auto it = std::find(path_v.begin(), path_v.end(), w);
                if (it != path_v.end()) {
                    std::vector<int> cycle(path_v.begin(), it + 1);
                    std::reverse(cycle.begin(), cycle.end());  // w ... v
                    return cycle;
                }
            }
        }
    }
    return {};
}

std::vector<int> BlockEmbedder::face_vertices(const Face& f) const {
    std::vector<int> vs;
    vs.reserve(f.size());
    for (const DirEdge& d : f) vs.push_back(head_of(g_, d));
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::vector<BlockEmbedder::Bridge> BlockEmbedder::bridges() const {
    std::vector<Bridge> out;
    // single unembedded edges between embedded vertices
    for (int e : block_edges_) {
        if (emb_edge_[static_cast<size_t>(e)]) continue;
        const auto& ed = g_.edge(e);
        if (emb_vertex_[static_cast<size_t>(ed.u)] && emb_vertex_[static_cast<size_t>(ed.v)]) {
            Bridge b;
            b.att = {std::min(ed.u, ed.v), std::max(ed.u, ed.v)};
            b.single_edge = e;
            out.push_back(std::move(b));
        }
    }
    // components of unembedded vertices plus their attachment edges
    std::vector<int> comp(static_cast<size_t>(g_.vertex_count()), -1);
    int nc = 0;
    for (int s = 0; s < g_.vertex_count(); ++s) {
        if (emb_vertex_[static_cast<size_t>(s)] || comp[static_cast<size_t>(s)] != -1) continue;
        bool touches_block = false;
        std::queue<int> q;
        q.push(s);
        comp[static_cast<size_t>(s)] = nc;
        std::vector<int> interior{s};
        std::set<int> att;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const HalfEdge& h : g_.incident(v)) {
                if (!in_block_[static_cast<size_t>(h.edge)]) continue;
                touches_block = true;
                const int w = g_.other_endpoint(h.edge, v);
                if (emb_vertex_[static_cast<size_t>(w)]) {
                    att.insert(w);
                } else if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = nc;
                    interior.push_back(w);
                    q.push(w);
                }
            }
        }
        if (!touches_block) continue;
        Bridge b;
        b.att.assign(att.begin(), att.end());
        b.interior = std::move(interior);
        out.push_back(std::move(b));
        ++nc;
    }
    return out;
}

std::vector<int> BlockEmbedder::bridge_path(const Bridge& b) const {
    if (b.single_edge != -1) {
        const auto& ed = g_.edge(b.single_edge);
        return {ed.u, ed.v};
    }
    const int a = b.att.at(0);
    const int target = b.att.at(1);
    // BFS from a through the bridge interior to the target
    std::map<int, int> parent;  // vertex -> predecessor
    std::set<int> interior(b.interior.begin(), b.interior.end());
    std::queue<int> q;
    q.push(a);
    parent[a] = -1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (const HalfEdge& h : g_.incident(v)) {
            if (!in_block_[static_cast<size_t>(h.edge)] || emb_edge_[static_cast<size_t>(h.edge)]) continue;
            const int w = g_.other_endpoint(h.edge, v);
            if (v == a && !interior.count(w)) continue;  // leave a into the bridge only
            if (parent.count(w)) continue;
            if (w == target) {
                std::vector<int> path{w, v};
                int x = v;
                while (parent[x] != -1) {
                    x = parent[x];
                    path.push_back(x);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (!interior.count(w)) continue;
            parent[w] = v;
            q.push(w);
        }
    }
    throw InvalidInputError("bridge attachments are not connected through the bridge");
}

void BlockEmbedder::embed_path(const std::vector<int>& path, size_t face_idx) {
    const Face face = faces_[face_idx];
    const int a = path.front();
    const int b = path.back();
    int ia = -1, ib = -1;
    for (size_t i = 0; i < face.size(); ++i) {
        const int h = head_of(g_, face[i]);
        if (h == a) ia = static_cast<int>(i);
        if (h == b) ib = static_cast<int>(i);
    }
    if (ia < 0 || ib < 0) throw InvalidInputError("face does not contain the path endpoints");

    // directed edges of the path, a -> b
    std::vector<DirEdge> forward;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        int edge = -1, dir = 0;
        for (const HalfEdge& h : g_.incident(path[i])) {
            if (!in_block_[static_cast<size_t>(h.edge)] || emb_edge_[static_cast<size_t>(h.edge)]) continue;
            if (g_.other_endpoint(h.edge, path[i]) == path[i + 1]) {
                edge = h.edge;
                dir = g_.edge(h.edge).u == path[i] ? 0 : 1;
                break;
            }
        }
        if (edge == -1) throw InvalidInputError("path step without an unembedded edge");
        forward.push_back({edge, dir});
        emb_edge_[static_cast<size_t>(edge)] = true;
    }
    for (int v : path) emb_vertex_[static_cast<size_t>(v)] = true;

    std::vector<DirEdge> backward(forward.rbegin(), forward.rend());
    for (DirEdge& d : backward) d.dir ^= 1;

    const auto arc = [&](int from, int to) {
        std::vector<DirEdge> out;
        size_t i = (static_cast<size_t>(from) + 1) % face.size();
        while (true) {
            out.push_back(face[i]);
            if (static_cast<int>(i) == to) break;
            i = (i + 1) % face.size();
        }
        return out;
    };

    Face f1 = arc(ia, ib);  // boundary a -> b
    f1.insert(f1.end(), backward.begin(), backward.end());
    Face f2 = arc(ib, ia);  // boundary b -> a
    f2.insert(f2.end(), forward.begin(), forward.end());

    faces_[face_idx] = std::move(f1);
    faces_.push_back(std::move(f2));
}

bool BlockEmbedder::run() {
    emb_edge_.assign(static_cast<size_t>(g_.edge_count()), false);
    emb_vertex_.assign(static_cast<size_t>(g_.vertex_count()), false);
    faces_.clear();

    const std::vector<int> cycle = find_cycle();
    if (cycle.empty()) throw InvalidInputError("block embedder expects a cyclic block");
    Face fwd;
    for (size_t i = 0; i < cycle.size(); ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % cycle.size()];
        int edge = -1, dir = 0;
        for (const HalfEdge& h : g_.incident(u)) {
            if (!in_block_[static_cast<size_t>(h.edge)]) continue;
            if (g_.other_endpoint(h.edge, u) == v && !emb_edge_[static_cast<size_t>(h.edge)]) {
                edge = h.edge;
                dir = g_.edge(h.edge).u == u ? 0 : 1;
                break;
            }
        }
        if (edge == -1) throw InvalidInputError("cycle step without an edge");
        fwd.push_back({edge, dir});
        emb_edge_[static_cast<size_t>(edge)] = true;
        emb_vertex_[static_cast<size_t>(u)] = true;
    }
    Face bwd(fwd.rbegin(), fwd.rend());
    for (DirEdge& d : bwd) d.dir ^= 1;
    faces_.push_back(std::move(fwd));
    faces_.push_back(std::move(bwd));

    while (true) {
        const std::vector<Bridge> bs = bridges();
        if (bs.empty()) break;
        // admissible faces per bridge
        std::vector<std::vector<size_t>> admissible(bs.size());
        for (size_t bi = 0; bi < bs.size(); ++bi) {
            for (size_t fi = 0; fi < faces_.size(); ++fi) {
                const std::vector<int> fv = face_vertices(faces_[fi]);
                bool ok = true;
                for (int v : bs[bi].att)
                    if (!std::binary_search(fv.begin(), fv.end(), v)) { ok = false; break; }
                if (ok) admissible[bi].push_back(fi);
            }
            if (admissible[bi].empty()) return false;  // no admissible face: non-planar
        }
        size_t pick = 0;
        for (size_t bi = 1; bi < bs.size(); ++bi)
            if (admissible[bi].size() < admissible[pick].size()) pick = bi;
        if (bs[pick].att.size() < 2)
            throw InvalidInputError("bridge with a single attachment in a biconnected block");
        embed_path(bridge_path(bs[pick]), admissible[pick].front());
    }
    return true;
}

std::map<std::pair<int, int>, std::pair<int, int>> BlockEmbedder::successor_map() const {
    std::map<std::pair<int, int>, std::pair<int, int>> succ;
    for (const Face& f : faces_) {
        for (size_t i = 0; i < f.size(); ++i) {
            const DirEdge& d = f[i];
            const DirEdge& d2 = f[(i + 1) % f.size()];
            const int w = head_of(g_, d);
            // arriving half-edge of d at w, departing half-edge of d2 at w
            const int end_in = d.dir == 0 ? 1 : 0;
            const int end_out = d2.dir == 0 ? 0 : 1;
            succ[{d.e, end_in}] = {d2.e, end_out};
            (void)w;
        }
    }
    return succ;
}

// ---------------------------------------------------------------------------
// blocks (biconnected components) of a simple graph
// ---------------------------------------------------------------------------

void block_dfs(const Graph& g, int u, int parent_edge, int& timer, std::vector<int>& disc,
               std::vector<int>& low, std::vector<int>& stack, std::vector<std::vector<int>>& blocks) {
    disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = ++timer;
    for (const HalfEdge& h : g.incident(u)) {
        if (h.edge == parent_edge) continue;
        const int w = g.other_endpoint(h.edge, u);
        if (disc[static_cast<size_t>(w)] == 0) {
            stack.push_back(h.edge);
            block_dfs(g, w, h.edge, timer, disc, low, stack, blocks);
            low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(w)]);
            if (low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(u)]) {
                std::vector<int> block;
                while (true) {
                    const int e = stack.back();
                    stack.pop_back();
                    block.push_back(e);
                    if (e == h.edge) break;
                }
                blocks.push_back(std::move(block));
            }
        } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(u)]) {
            stack.push_back(h.edge);
            low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
        }
    }
}

std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
    std::vector<int> disc(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> low(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (disc[static_cast<size_t>(v)] == 0)
            block_dfs(g, v, -1, timer, disc, low, stack, blocks);
    return blocks;
}

// ---------------------------------------------------------------------------
// Kuratowski subdivision search
// ---------------------------------------------------------------------------

struct PathSearch {
    const Graph& g;
    std::vector<bool> used;  // vertices claimed as path interiors or branch vertices
    long budget = 4'000'000;

    explicit PathSearch(const Graph& gr)
        : g(gr), used(static_cast<size_t>(gr.vertex_count()), false) {}
};

}  // namespace

Graph KuratowskiWitness::subgraph(const Graph& g) const {
    Graph out;
    std::set<int> vs;
    for (int e : edges) {
        vs.insert(g.edge(e).u);
        vs.insert(g.edge(e).v);
    }
    for (int v : vs) out.add_vertex(g.vertex_name(v));
    for (int e : edges)
        out.add_edge(g.edge(e).name, g.vertex_name(g.edge(e).u), g.vertex_name(g.edge(e).v));
    return out;
}

namespace {

/// Try to realize a K5 or K3,3 subdivision with the given branch vertices;
/// `pairs` lists the branch pairs to connect by internally-disjoint paths.
bool realize_subdivision(const Graph& g, const std::vector<int>& branches,
                         const std::vector<std::pair<int, int>>& pairs,
                         std::vector<std::vector<int>>& out_paths,
                         std::vector<std::vector<int>>& out_path_edges) {
    PathSearch ps(g);
    for (int b : branches) ps.used[static_cast<size_t>(b)] = true;

    std::vector<std::vector<int>> paths(pairs.size());
    std::vector<std::vector<int>> path_edges(pairs.size());

    // recursive lambda over the pair list
    auto attempt = [&](auto&& self, size_t idx) -> bool {
        if (idx == pairs.size()) return true;
        const auto [x, y] = pairs[idx];

        std::vector<int> vpath{x};
        // local recursive DFS over simple paths from x to y
        auto dfs = [&](auto&& dself, int v) -> bool {
            if (--ps.budget < 0)
                throw ResourceLimitError("Kuratowski search exceeded its budget");
            for (const HalfEdge& h : ps.g.incident(v)) {
                const int w = ps.g.other_endpoint(h.edge, v);
                if (w == y) {
                    // complete this path; claim interiors, recurse to next pair
                    std::vector<int> interior(vpath.begin() + 1, vpath.end());
                    std::vector<int> edges;
                    int prev = x;
                    for (size_t i = 1; i < vpath.size(); ++i) {
                        for (const HalfEdge& hh : ps.g.incident(prev))
                            if (ps.g.other_endpoint(hh.edge, prev) == vpath[i]) {
                                edges.push_back(hh.edge);
                                break;
                            }
                        prev = vpath[i];
                    }
                    edges.push_back(h.edge);
                    paths[idx] = vpath;
                    paths[idx].push_back(y);
                    path_edges[idx] = edges;
                    if (self(self, idx + 1)) return true;
                    continue;
                }
                if (ps.used[static_cast<size_t>(w)]) continue;
                ps.used[static_cast<size_t>(w)] = true;
                vpath.push_back(w);
                if (dself(dself, w)) return true;
                vpath.pop_back();
                ps.used[static_cast<size_t>(w)] = false;
            }
            return false;
        };
        return dfs(dfs, x);
    };

    if (!attempt(attempt, 0)) return false;
    out_paths = std::move(paths);
    out_path_edges = std::move(path_edges);
    return true;
}

std::optional<KuratowskiWitness> find_kuratowski(const Graph& g) {
    std::vector<int> deg4, deg3;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.valence(v);
        if (d >= 4) deg4.push_back(v);
        if (d >= 3) deg3.push_back(v);
    }

    auto build_witness = [&](KuratowskiWitness::Type type, const std::vector<int>& branches,
                             const std::vector<std::vector<int>>& path_edges) {
        KuratowskiWitness w;
        w.type = type;
        w.branch_vertices = branches;
        std::set<int> edges;
        for (const auto& pe : path_edges) edges.insert(pe.begin(), pe.end());
        w.edges.assign(edges.begin(), edges.end());
        return w;
    };

    // K5: five branch vertices, ten internally-disjoint paths
    if (g.edge_count() >= 10 && deg4.size() >= 5) {
        const int n = static_cast<int>(deg4.size());
        std::vector<int> idx(5);
        auto choose = [&](auto&& self, int start, int depth) -> std::optional<KuratowskiWitness> {
            if (depth == 5) {
                std::vector<int> branches;
                for (int i : idx) branches.push_back(deg4[static_cast<size_t>(i)]);
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j) pairs.push_back({branches[static_cast<size_t>(i)], branches[static_cast<size_t>(j)]});
                std::vector<std::vector<int>> paths, path_edges;
                if (realize_subdivision(g, branches, pairs, paths, path_edges))
                    return build_witness(KuratowskiWitness::Type::K5, branches, path_edges);
                return std::nullopt;
            }
            for (int i = start; i < n; ++i) {
                idx[static_cast<size_t>(depth)] = i;
                if (auto w = self(self, i + 1, depth + 1)) return w;
            }
            return std::nullopt;
        };
        if (auto w = choose(choose, 0, 0)) return w;
    }

    // K3,3: three plus three branch vertices, nine paths
    if (g.edge_count() >= 9 && deg3.size() >= 6) {
        const int n = static_cast<int>(deg3.size());
        std::vector<int> a(3), b(3);
        auto choose_b = [&](auto&& self, int start, int depth, const std::vector<int>& aset,
                            const std::vector<int>& rest) -> std::optional<KuratowskiWitness> {
            if (depth == 3) {
                std::vector<int> branches = aset;
                for (int i : b) branches.push_back(rest[static_cast<size_t>(i)]);
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        pairs.push_back({aset[static_cast<size_t>(i)], rest[static_cast<size_t>(b[static_cast<size_t>(j)])]});
                std::vector<std::vector<int>> paths, path_edges;
                if (realize_subdivision(g, branches, pairs, paths, path_edges))
                    return build_witness(KuratowskiWitness::Type::K33, branches, path_edges);
                return std::nullopt;
            }
            for (int i = start; i < static_cast<int>(rest.size()); ++i) {
                b[static_cast<size_t>(depth)] = i;
                if (auto w = self(self, i + 1, depth + 1, aset, rest)) return w;
            }
            return std::nullopt;
        };
        auto choose_a = [&](auto&& self, int start, int depth) -> std::optional<KuratowskiWitness> {
            if (depth == 3) {
                std::vector<int> aset;
                for (int i : a) aset.push_back(deg3[static_cast<size_t>(i)]);
                std::vector<int> rest;
                for (int i = 0; i < n; ++i)
                    if (std::find(a.begin(), a.end(), i) == a.end()) rest.push_back(deg3[static_cast<size_t>(i)]);
                return choose_b(choose_b, 0, 0, aset, rest);
            }
            for (int i = start; i < n; ++i) {
                a[static_cast<size_t>(depth)] = i;
                if (auto w = self(self, i + 1, depth + 1)) return w;
            }
            return std::nullopt;
        };
        if (auto w = choose_a(choose_a, 0, 0)) return w;
    }
    return std::nullopt;
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult res;

    // loops never obstruct planarity; subdivide them away and pull the
    // rotation back at the end
    SubdivisionMap loop_map;
    const Graph g1 = subdivide_loops(g, &loop_map);

    // parallel edges reduce to a single representative; siblings are
    // reinserted beside it afterwards
    std::map<std::pair<int, int>, std::vector<int>> parallel_groups;
    for (int e = 0; e < g1.edge_count(); ++e) {
        const auto& ed = g1.edge(e);
        parallel_groups[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
    }
    Graph simple;
    std::vector<int> simple_to_g1;
    for (int v = 0; v < g1.vertex_count(); ++v) simple.add_vertex(g1.vertex_name(v));
    for (auto& [uv, group] : parallel_groups) {
        const auto& ed = g1.edge(group.front());
        simple.add_edge(ed.name, ed.u, ed.v);
        simple_to_g1.push_back(group.front());
    }

    // embed block by block
    std::vector<std::vector<HalfEdge>> rot_simple(static_cast<size_t>(simple.vertex_count()));
    const auto blocks = biconnected_blocks(simple);
    for (const auto& block : blocks) {
        if (block.size() == 1) {
            const int e = block.front();
            rot_simple[static_cast<size_t>(simple.edge(e).u)].push_back({e, 0});
            rot_simple[static_cast<size_t>(simple.edge(e).v)].push_back({e, 1});
            continue;
        }
        BlockEmbedder be(simple, block);
        if (!be.run()) {
            // non-planar: extract a Kuratowski subdivision from this block
            Graph bg;
            std::vector<int> bg_to_simple_edge;
            std::map<int, int> vmap;
            for (int e : block) {
                for (int w : {simple.edge(e).u, simple.edge(e).v})
                    if (!vmap.count(w)) {
                        vmap[w] = bg.add_vertex(simple.vertex_name(w));
                    }
            }
            for (int e : block) {
                bg.add_edge(simple.edge(e).name, vmap[simple.edge(e).u], vmap[simple.edge(e).v]);
                bg_to_simple_edge.push_back(e);
            }
            auto w = find_kuratowski(bg);
            if (!w)
                throw InvalidInputError(
                    "embedding failed but no Kuratowski subdivision was found");
            // map indices back: block graph -> simple -> g1 -> g
            KuratowskiWitness out;
            out.type = w->type;
            for (int bv : w->branch_vertices)
                out.branch_vertices.push_back(g.vertex_index(bg.vertex_name(bv)));
            for (int be2 : w->edges) {
                const int se = bg_to_simple_edge[static_cast<size_t>(be2)];
                const int g1e = simple_to_g1[static_cast<size_t>(se)];
                out.edges.push_back(g.edge_index(g1.edge(g1e).name));
            }
            res.planar = false;
            res.witness = std::move(out);
            return res;
        }
        // splice this block's rotation cycles into the accumulating rotation
        const auto succ = be.successor_map();
        std::map<int, std::vector<HalfEdge>> block_inc;
        for (int e : block) {
            block_inc[simple.edge(e).u].push_back({e, 0});
            block_inc[simple.edge(e).v].push_back({e, 1});
        }
        for (auto& [v, hes] : block_inc) {
            // follow the successor map to lay out the cyclic order at v
            std::vector<HalfEdge> cyc;
            std::pair<int, int> cur{hes.front().edge, hes.front().end};
            for (size_t step = 0; step < hes.size(); ++step) {
                cyc.push_back({cur.first, cur.second});
                auto it = succ.find(cur);
                if (it == succ.end())
                    throw InvalidInputError("incomplete face structure at a vertex");
                cur = it->second;
            }
            if (!(cur.first == hes.front().edge && cur.second == hes.front().end))
                throw InvalidInputError("face structure does not close into a rotation");
            auto& dst = rot_simple[static_cast<size_t>(v)];
            dst.insert(dst.end(), cyc.begin(), cyc.end());
        }
    }

    // reinsert parallel siblings: nested directly beside their representative
    std::vector<std::vector<HalfEdge>> rot_g1(static_cast<size_t>(g1.vertex_count()));
    for (int v = 0; v < g1.vertex_count(); ++v) {
        for (const HalfEdge& h : rot_simple[static_cast<size_t>(v)]) {
            const auto& ed = simple.edge(h.edge);
            const auto key = std::make_pair(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
            const auto& group = parallel_groups[key];
            std::vector<HalfEdge> expanded;
            for (int ge : group) {
                const int end = g1.edge(ge).u == v ? 0 : 1;
                expanded.push_back({ge, end});
            }
            // at the lower endpoint keep group order, at the upper reverse it,
            // so each adjacent pair bounds a bigon
            if (v == key.second) std::reverse(expanded.begin(), expanded.end());
            auto& dst = rot_g1[static_cast<size_t>(v)];
            dst.insert(dst.end(), expanded.begin(), expanded.end());
        }
    }

    // pull back across the loop subdivision
    std::vector<std::vector<HalfEdge>> rot_g(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int v1 = loop_map.vertex_map[static_cast<size_t>(v)];
        for (const HalfEdge& h : rot_g1[static_cast<size_t>(v1)]) {
            // find the original edge whose chain contains h.edge
            int oe = -1, oend = 0;
            for (int e = 0; e < g.edge_count(); ++e) {
                const EdgeChain& ch = loop_map.chains[static_cast<size_t>(e)];
                if (ch.edges.front() == h.edge && g1.edge(h.edge).u == v1 && h.end == 0) {
                    oe = e;
                    oend = 0;
                    break;
                }
                if (ch.edges.back() == h.edge && g1.edge(h.edge).v == v1 && h.end == 1) {
                    oe = e;
                    oend = 1;
                    break;
                }
            }
            if (oe == -1) throw InvalidInputError("rotation pull-back failed");
            rot_g[static_cast<size_t>(v)].push_back({oe, oend});
        }
    }

    res.planar = true;
    res.rotation = RotationSystem(std::move(rot_g));
    return res;
}

}  // namespace conftc
