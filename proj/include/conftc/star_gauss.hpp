#pragma once

#include <array>
#include <utility>
#include <vector>

#include "conftc/common.hpp"
#include "conftc/embedding.hpp"

namespace conftc {

/// Point of the 3-star: the center, or a position t in (0,1] along one of
/// the arms 1..3.
struct StarPoint {
    int arm = 0;  // 0 encodes the center
    Rat t = 0;

    static StarPoint center() { return {}; }
    static StarPoint on_arm(int arm, Rat t);
    bool is_center() const { return arm == 0; }
    bool operator==(const StarPoint& o) const {
        return (is_center() && o.is_center()) || (arm == o.arm && t == o.t);
    }
};

/// One sixth of the hexagonal loop: both particles traverse one full arm,
/// forward (center to leaf) or backward.
struct HexSegment {
    int arm1;
    bool fwd1;
    int arm2;
    bool fwd2;
};

/// The sixfold concatenated exchange loop in Conf_2 of the 3-star:
/// (e1,~e2)(~e1,e3)(e2,~e3)(~e2,e1)(e3,~e1)(~e3,e2), constant speed on six
/// equal subintervals.
const std::array<HexSegment, 6>& hex_loop_segments();

/// Configuration of the two particles at time t in [0,1]; the points are
/// always distinct, and the loop closes at t=1.
std::pair<StarPoint, StarPoint> eps_eval(const Rat& t);

/// Plane embedding of the 3-star: arms as polylines leaving the center.
struct StarEmbedding {
    Point center;
    std::array<Polyline, 3> arms;

    Point at(const StarPoint& p) const;
    bool is_straight() const;
};

/// Check injectivity and pairwise interior-disjointness exactly.
ValidationReport validate_star(const StarEmbedding& emb);

enum class OrientationClass { Preserving, Reversing };

/// Compare the counterclockwise cyclic order of the three initial arm
/// directions at the center with the canonical order (1,2,3).
OrientationClass orientation_class(const StarEmbedding& emb);

/// Straight-line, orientation preserving, leaf vectors pairwise linearly
/// independent.
bool is_standard(const StarEmbedding& emb);

struct WindingOptions {
    long max_refinements = 200000;
};

/// Winding number of a closed polygonal path of nonzero direction vectors
/// around the origin: adaptive bisection until every step turns by less than
/// a quarter turn (exact dot-product test), then certified angle summation.
int winding_number(std::vector<Point> directions, const WindingOptions& opts = {});

/// Winding number of t -> direction from particle 1 to particle 2 along the
/// hexagonal loop, under the given embedding. Exactly +1 for orientation
/// preserving embeddings, -1 for reversing ones.
int gauss_winding(const StarEmbedding& emb, const WindingOptions& opts = {});

/// Interpret a parsed graph bundle as a star embedding: the graph must be a
/// 3-star with geometry; arms are ordered by edge declaration.
StarEmbedding star_from_bundle(const GraphBundle& bundle);

}  // namespace conftc
