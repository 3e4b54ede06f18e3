#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "conftc/common.hpp"

namespace conftc {

/// One attachment of an edge to a vertex. A loop at v owns two half-edges
/// there, (e,0) and (e,1).
struct HalfEdge {
    int edge = -1;
    int end = 0;  // 0: the u side, 1: the v side

    bool operator==(const HalfEdge& o) const { return edge == o.edge && end == o.end; }
};

/// Finite multigraph. Loops and parallel edges are permitted; vertex and edge
/// ids are unique strings, mapped to dense indices in declaration order.
class Graph {
public:
    struct Edge {
        std::string name;
        int u = -1;
        int v = -1;
        bool is_loop() const { return u == v; }
    };

    int add_vertex(const std::string& name);
    int add_edge(const std::string& name, const std::string& u, const std::string& v);
    int add_edge(const std::string& name, int u, int v);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_name(int v) const { return vertex_names_.at(static_cast<size_t>(v)); }
    const Edge& edge(int e) const { return edges_.at(static_cast<size_t>(e)); }
    const std::vector<Edge>& edges() const { return edges_; }

    int vertex_index(const std::string& name) const;
    int edge_index(const std::string& name) const;
    std::optional<int> find_vertex(const std::string& name) const;
    std::optional<int> find_edge(const std::string& name) const;

    /// Half-edges attached to v, in edge-index order. A loop contributes two.
    std::vector<HalfEdge> incident(int v) const;

    /// Valence of v; a loop at v counts twice.
    int valence(int v) const;

    /// The endpoint of e on the given side.
    int endpoint(int e, int end) const { return end == 0 ? edge(e).u : edge(e).v; }
    /// The endpoint of e other than w (loop: w itself).
    int other_endpoint(int e, int w) const;

    bool has_loops() const;
    bool is_connected() const;
    int component_count() const;
    /// Component label per vertex, labels 0..count-1 in first-seen order.
    std::vector<int> component_labels() const;

    bool operator==(const Graph& o) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, int> vertex_by_name_;
    std::unordered_map<std::string, int> edge_by_name_;
};

/// Vertices of valence >= 3. m(graph) is the size of this set.
std::vector<int> essential_vertices(const Graph& g);
int essential_vertex_count(const Graph& g);

/// How an edge of the original graph decomposes after subdivision.
struct EdgeChain {
    std::vector<int> edges;           // sub-edges ordered from u to v, each oriented forward
    std::vector<int> inner_vertices;  // parts-1 interior vertices, ordered from u to v
};

struct SubdivisionMap {
    std::vector<int> vertex_map;   // original vertex index -> subdivided vertex index
    std::vector<EdgeChain> chains; // per original edge
    int uniform_parts = 1;
};

/// Replace each edge by a path of `parts` edges. Interior vertices and
/// sub-edges get names derived from the edge name, so repeated runs are
/// deterministic.
Graph subdivide(const Graph& g, int parts, SubdivisionMap* map = nullptr);

/// Subdivide only loops, once each, so downstream code can assume loop-free
/// multigraphs without changing the homeomorphism type.
Graph subdivide_loops(const Graph& g, SubdivisionMap* map = nullptr);

/// Cyclic order of the incident half-edges at every vertex.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(std::vector<std::vector<HalfEdge>> order) : order_(std::move(order)) {}

    const std::vector<HalfEdge>& at(int v) const { return order_.at(static_cast<size_t>(v)); }
    std::vector<std::vector<HalfEdge>>& order() { return order_; }
    const std::vector<std::vector<HalfEdge>>& order() const { return order_; }

    /// Every half-edge of g appears exactly once, at its own vertex.
    bool is_valid_for(const Graph& g) const;

    /// Half-edge following h in the cyclic order at v.
    HalfEdge successor(int v, const HalfEdge& h) const;

    /// Number of face orbits traced by the rule: enter v along h, leave along
    /// the successor of h at v.
    int face_count(const Graph& g) const;

private:
    std::vector<std::vector<HalfEdge>> order_;
};

/// Euler check V - E + F == 2 for a connected graph under the given rotation.
bool euler_face_check(const Graph& g, const RotationSystem& rot);

}  // namespace conftc
