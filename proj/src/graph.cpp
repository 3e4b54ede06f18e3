#include "conftc/graph.hpp"

#include <algorithm>
#include <queue>

namespace conftc {

int Graph::add_vertex(const std::string& name) {
    if (vertex_by_name_.count(name)) throw InvalidInputError("duplicate vertex id: " + name);
    const int idx = vertex_count();
    vertex_names_.push_back(name);
    vertex_by_name_.emplace(name, idx);
    return idx;
}

int Graph::add_edge(const std::string& name, const std::string& u, const std::string& v) {
    return add_edge(name, vertex_index(u), vertex_index(v));
}

int Graph::add_edge(const std::string& name, int u, int v) {
    if (edge_by_name_.count(name)) throw InvalidInputError("duplicate edge id: " + name);
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        throw InvalidInputError("edge endpoint is not a declared vertex: " + name);
    const int idx = edge_count();
    edges_.push_back(Edge{name, u, v});
    edge_by_name_.emplace(name, idx);
    return idx;
}

int Graph::vertex_index(const std::string& name) const {
    auto it = vertex_by_name_.find(name);
    if (it == vertex_by_name_.end()) throw InvalidInputError("unknown vertex id: " + name);
    return it->second;
}

int Graph::edge_index(const std::string& name) const {
    auto it = edge_by_name_.find(name);
    if (it == edge_by_name_.end()) throw InvalidInputError("unknown edge id: " + name);
    return it->second;
}

std::optional<int> Graph::find_vertex(const std::string& name) const {
    auto it = vertex_by_name_.find(name);
    if (it == vertex_by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Graph::find_edge(const std::string& name) const {
    auto it = edge_by_name_.find(name);
    if (it == edge_by_name_.end()) return std::nullopt;
    return it->second;
}

std::vector<HalfEdge> Graph::incident(int v) const {
    std::vector<HalfEdge> out;
    for (int e = 0; e < edge_count(); ++e) {
        if (edges_[static_cast<size_t>(e)].u == v) out.push_back({e, 0});
        if (edges_[static_cast<size_t>(e)].v == v) out.push_back({e, 1});
    }
    return out;
}

int Graph::valence(int v) const { return static_cast<int>(incident(v).size()); }

int Graph::other_endpoint(int e, int w) const {
    const Edge& ed = edge(e);
    return ed.u == w ? ed.v : ed.u;
}

bool Graph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(static_cast<size_t>(vertex_count()), -1);
    int next = 0;
    for (int s = 0; s < vertex_count(); ++s) {
        if (label[static_cast<size_t>(s)] != -1) continue;
        label[static_cast<size_t>(s)] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const HalfEdge& h : incident(v)) {
                const int w = other_endpoint(h.edge, v);
                if (label[static_cast<size_t>(w)] == -1) {
                    label[static_cast<size_t>(w)] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    return label;
}

int Graph::component_count() const {
    const auto labels = component_labels();
    int mx = -1;
    for (int l : labels) mx = std::max(mx, l);
    return mx + 1;
}

bool Graph::is_connected() const { return vertex_count() <= 1 || component_count() == 1; }

bool Graph::operator==(const Graph& o) const {
    if (vertex_names_ != o.vertex_names_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].name != o.edges_[i].name || edges_[i].u != o.edges_[i].u ||
            edges_[i].v != o.edges_[i].v)
            return false;
    }
    return true;
}

std::vector<int> essential_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.valence(v) >= 3) out.push_back(v);
    return out;
}

int essential_vertex_count(const Graph& g) {
    return static_cast<int>(essential_vertices(g).size());
}

Graph subdivide(const Graph& g, int parts, SubdivisionMap* map) {
    if (parts < 1) throw PreconditionError("subdivide requires parts >= 1");
    Graph out;
    SubdivisionMap local;
    local.uniform_parts = parts;
    for (int v = 0; v < g.vertex_count(); ++v) {
        local.vertex_map.push_back(out.add_vertex(g.vertex_name(v)));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        EdgeChain chain;
        int prev = local.vertex_map[static_cast<size_t>(ed.u)];
        for (int p = 1; p < parts; ++p) {
            const int mid = out.add_vertex(ed.name + "#" + std::to_string(p));
            chain.inner_vertices.push_back(mid);
            chain.edges.push_back(out.add_edge(ed.name + "." + std::to_string(p - 1), prev, mid));
            prev = mid;
        }
        chain.edges.push_back(parts == 1
                                  ? out.add_edge(ed.name, prev,
                                                 local.vertex_map[static_cast<size_t>(ed.v)])
                                  : out.add_edge(ed.name + "." + std::to_string(parts - 1), prev,
                                                 local.vertex_map[static_cast<size_t>(ed.v)]));
        local.chains.push_back(std::move(chain));
    }
    if (map) *map = std::move(local);
    return out;
}

Graph subdivide_loops(const Graph& g, SubdivisionMap* map) {
    Graph out;
    SubdivisionMap local;
    local.uniform_parts = 1;
    for (int v = 0; v < g.vertex_count(); ++v) local.vertex_map.push_back(out.add_vertex(g.vertex_name(v)));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        EdgeChain chain;
        if (ed.is_loop()) {
            const int mid = out.add_vertex(ed.name + "#1");
            chain.inner_vertices.push_back(mid);
            chain.edges.push_back(out.add_edge(ed.name + ".0", local.vertex_map[static_cast<size_t>(ed.u)], mid));
            chain.edges.push_back(out.add_edge(ed.name + ".1", mid, local.vertex_map[static_cast<size_t>(ed.v)]));
        } else {
            chain.edges.push_back(out.add_edge(ed.name, local.vertex_map[static_cast<size_t>(ed.u)],
                                               local.vertex_map[static_cast<size_t>(ed.v)]));
        }
        local.chains.push_back(std::move(chain));
    }
    if (map) *map = std::move(local);
    return out;
}

bool RotationSystem::is_valid_for(const Graph& g) const {
    if (static_cast<int>(order_.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto want = g.incident(v);
        auto have = order_[static_cast<size_t>(v)];
        if (want.size() != have.size()) return false;
        auto key = [](const HalfEdge& h) { return h.edge * 2 + h.end; };
        std::sort(want.begin(), want.end(), [&](auto a, auto b) { return key(a) < key(b); });
        std::sort(have.begin(), have.end(), [&](auto a, auto b) { return key(a) < key(b); });
        for (size_t i = 0; i < want.size(); ++i)
            if (!(want[i] == have[i])) return false;
    }
    return true;
}

HalfEdge RotationSystem::successor(int v, const HalfEdge& h) const {
    const auto& cyc = order_.at(static_cast<size_t>(v));
    for (size_t i = 0; i < cyc.size(); ++i)
        if (cyc[i] == h) return cyc[(i + 1) % cyc.size()];
    throw InvalidInputError("half-edge not present in rotation at vertex");
}

int RotationSystem::face_count(const Graph& g) const {
    // Directed edge (e, dir): dir 0 runs u->v, dir 1 runs v->u. Entering w
    // along (e, dir) means arriving at the half-edge (e, end) with end = the
    // w side; the walk leaves along that half-edge's rotation successor.
    std::vector<bool> used(static_cast<size_t>(g.edge_count()) * 2, false);
    int faces = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int dir = 0; dir < 2; ++dir) {
            if (used[static_cast<size_t>(e * 2 + dir)]) continue;
            ++faces;
            int ce = e, cdir = dir;
            while (!used[static_cast<size_t>(ce * 2 + cdir)]) {
                used[static_cast<size_t>(ce * 2 + cdir)] = true;
                const int head_end = cdir == 0 ? 1 : 0;
                const int w = g.endpoint(ce, head_end);
                const HalfEdge arrived{ce, head_end};
                const HalfEdge leave = successor(w, arrived);
                ce = leave.edge;
                cdir = leave.end == 0 ? 0 : 1;  // leaving along (e,end) runs away from w
            }
        }
    }
    return faces;
}

bool euler_face_check(const Graph& g, const RotationSystem& rot) {
    if (!g.is_connected()) throw PreconditionError("euler_face_check requires a connected graph");
    if (!rot.is_valid_for(g)) return false;
    if (g.edge_count() == 0) return g.vertex_count() == 1;  // V=1, F=1
    const int f = rot.face_count(g);
    return g.vertex_count() - g.edge_count() + f == 2;
}

}  // namespace conftc
