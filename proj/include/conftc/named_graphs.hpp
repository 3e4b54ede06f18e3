#pragma once

#include <optional>
#include <string>

#include "conftc/embedding.hpp"
#include "conftc/graph.hpp"

namespace conftc {

/// Canonical construction of the graphs the library's statements are tested
/// on. Planar constructors carry a rational embedding and the rotation
/// system it induces; non-planar ones carry combinatorics only.

/// 3-star: center c, leaves l1..l3 at counterclockwise angles.
GraphBundle star3();

/// Two vertices joined by three parallel edges (left, middle, right).
GraphBundle theta();

/// Cycle of two arcs through the essential vertex, plus a pendant edge.
GraphBundle lollipop();

/// Path a-b-c with two extra leaves at each of a, b, c (three essential
/// vertices).
GraphBundle tree3();

GraphBundle complete_k5();
GraphBundle complete_k33();

GraphBundle path_graph(int n);
GraphBundle cycle_graph(int n);

/// Lookup by name: s3, theta, lollipop, tree3, k5, k33, path<n>, cycle<n>.
std::optional<GraphBundle> named_graph(const std::string& name);

/// Counterclockwise rotation system induced by an embedding: half-edges at
/// each vertex sorted by the exact angle of their initial direction.
RotationSystem rotation_from_embedding(const Graph& g, const PLEmbedding& emb);

}  // namespace conftc
