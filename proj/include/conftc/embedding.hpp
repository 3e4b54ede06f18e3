#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conftc/common.hpp"
#include "conftc/graph.hpp"

namespace conftc {

/// Piecewise-linear plane embedding of a graph: one rational point per vertex,
/// one rational polyline per edge. Straight edges may omit bend points.
struct PLEmbedding {
    std::vector<Point> vertex_pos;   // indexed by vertex
    std::vector<Polyline> edge_poly; // indexed by edge

    const Point& pos(int v) const { return vertex_pos.at(static_cast<size_t>(v)); }
    const Polyline& poly(int e) const { return edge_poly.at(static_cast<size_t>(e)); }
};

struct ValidationReport {
    bool ok = true;
    std::string violation;  // first violating pair, empty when ok

    explicit operator bool() const { return ok; }
};

/// Exact check of the embedding invariants: distinct vertex positions,
/// polyline endpoints matching incident vertices, injective polylines, and
/// distinct edge images meeting only at shared endpoints.
ValidationReport validate_embedding(const Graph& g, const PLEmbedding& emb);

/// Geometry for a subdivided graph: interior vertices sit at uniform
/// parameters along the original polyline, sub-edges carry the slices.
PLEmbedding subdivide_embedding(const Graph& original, const PLEmbedding& emb,
                                const Graph& subdivided, const SubdivisionMap& map);

/// Restriction of an embedding to a subgraph given by (kept vertex, kept edge)
/// index lists; the subgraph must have been built with the same local order.
PLEmbedding restrict_embedding(const PLEmbedding& emb, const std::vector<int>& vertices,
                               const std::vector<int>& edges);

// ---------------------------------------------------------------------------
// Line-based graph text format, used by the CLI for every module:
//   v <id>
//   e <id> <u> <v>
//   rot <v> <half-edge> ...      half-edge = edge id, or id:0 / id:1 for loops
//   pos <v> <x> <y>              rational literals p/q
//   poly <e> <x1> <y1> <x2> <y2> ...
// ---------------------------------------------------------------------------

struct GraphBundle {
    Graph graph;
    std::optional<PLEmbedding> embedding;
    std::optional<RotationSystem> rotation;
};

GraphBundle parse_graph_text(const std::string& text);
GraphBundle load_graph_file(const std::string& path);

/// Canonical serialization: declaration order, one datum per line. Fixed
/// input gives byte-identical output.
std::string serialize_graph_text(const GraphBundle& bundle);

/// FNV-1a over the canonical serialization, as 16 hex digits.
std::string graph_hash(const GraphBundle& bundle);

}  // namespace conftc
