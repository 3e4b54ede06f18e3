#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "conftc/graph.hpp"
#include "conftc/int_matrix.hpp"

namespace conftc {

/// Sparse integer chain, keyed by cell index within a fixed dimension.
using SparseChain = std::map<int, Int>;

/// Cube complex modeling the ordered configuration space of k points on a
/// graph: cells are ordered k-tuples of pairwise closure-disjoint closed
/// cells (vertices and edges) of the graph; the cube dimension is the number
/// of edge coordinates. Coordinates are encoded as 2*vertex or 2*edge+1.
class CubeComplex {
public:
    static int vertex_code(int v) { return 2 * v; }
    static int edge_code(int e) { return 2 * e + 1; }
    static bool code_is_edge(int code) { return code & 1; }
    static int code_index(int code) { return code >> 1; }

    int k() const { return k_; }
    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    const Graph& graph() const { return graph_; }

    int cell_count(int dim) const;
    long total_cells() const;
    /// Coordinates of one cell (k codes).
    const int* cell(int dim, int idx) const;
    std::optional<int> cell_index(int dim, const std::vector<int>& coords) const;

    /// Boundary operator from dimension dim to dim-1, as signed triplets
    /// (row: cell in dim-1, col: cell in dim).
    const std::vector<Triplet>& boundary(int dim) const;

    /// All 0-cells adjacent to the given 0-cell through a 1-cell.
    std::vector<int> vertex_cell_neighbors(int idx) const;

    /// Connected components of the 1-skeleton by direct graph search.
    int skeleton_component_count() const;

    static CubeComplex build(const Graph& g, int k, long max_cells);

private:
    int k_ = 0;
    Graph graph_;
    std::vector<std::vector<int>> cells_;  // per dim, flat arrays of k codes
    std::vector<std::unordered_map<uint64_t, int>> index_;
    std::vector<std::vector<Triplet>> boundary_;
    uint64_t code_base_ = 1;

    uint64_t key_of(const int* coords) const;
    friend CubeComplex build_cube_complex_impl(const Graph&, int, long);
};

/// Record of the subdivision backing a discretized configuration space.
struct SubdivisionCertificate {
    int parts = 0;  // parts per edge, at least k+1
    int k = 0;
    Graph loop_free;         // input with loops split once
    Graph subdivided;        // loop_free with every edge in `parts` pieces
    SubdivisionMap loop_map; // input -> loop_free
    SubdivisionMap map;      // loop_free -> subdivided

    /// Final vertex of an input vertex.
    int subdivided_vertex(int v) const;
    /// Ordered chain of final edges of an input edge, oriented u to v.
    std::vector<int> subdivided_chain(int e) const;
    /// Interior final vertices of an input edge, ordered u to v.
    std::vector<int> chain_inner_vertices(int e) const;
};

struct Discretization {
    CubeComplex complex;
    SubdivisionCertificate certificate;
};

/// Discretize the ordered configuration space of k points on g: subdivide
/// every edge into k+1 parts (loops are split first), then enumerate the
/// cube complex. `max_cells` aborts oversized enumerations.
Discretization discretize(const Graph& g, int k, long max_cells = 5'000'000);

/// One particle sliding across one edge while the rest sit on vertices.
struct Move {
    int particle = 0;
    int edge = 0;         // edge of the complex's graph
    bool forward = true;  // true: from edge.u to edge.v
};

/// The signed sum of 1-cells traversed by a closed sequence of elementary
/// moves starting from the configuration `start` (vertex per particle).
/// Throws if a move violates closure-disjointness or the motion fails to
/// return to its start.
SparseChain cycle_from_motion(const CubeComplex& c, const std::vector<int>& start,
                              const std::vector<Move>& moves);

}  // namespace conftc
