#pragma once

#include <optional>
#include <vector>

#include "conftc/graph.hpp"

namespace conftc {

/// A subgraph homeomorphic to K5 or K3,3, witnessing non-planarity.
struct KuratowskiWitness {
    enum class Type { K5, K33 };
    Type type = Type::K5;
    std::vector<int> branch_vertices;  // indices in the tested graph
    std::vector<int> edges;            // edge indices of the subdivision

    /// The witness as a standalone graph (names inherited).
    Graph subgraph(const Graph& g) const;
};

struct PlanarityResult {
    bool planar = false;
    std::optional<RotationSystem> rotation;    // planar case; passes the Euler check
    std::optional<KuratowskiWitness> witness;  // non-planar case

    explicit operator bool() const { return planar; }
};

/// Planarity with witnesses. Planar inputs get a rotation system built by
/// incremental face splitting (blocks embedded separately, merged at cut
/// vertices); non-planar inputs get a Kuratowski subdivision found by
/// branch-and-bound over branch-vertex images. Disconnected inputs are
/// tested per component.
PlanarityResult is_planar(const Graph& g);

}  // namespace conftc
