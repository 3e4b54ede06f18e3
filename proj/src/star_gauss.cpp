#include "conftc/star_gauss.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace conftc {

StarPoint StarPoint::on_arm(int arm, Rat t) {
    if (arm < 1 || arm > 3) throw InvalidInputError("star arms are numbered 1..3");
    if (t < 0 || t > 1) throw InvalidInputError("arm parameter out of [0,1]");
    if (t == 0) return center();
    return {arm, std::move(t)};
}

const std::array<HexSegment, 6>& hex_loop_segments() {
    static const std::array<HexSegment, 6> segs = {{
        {1, true, 2, false},   // (e1, ~e2)
        {1, false, 3, true},   // (~e1, e3)
        {2, true, 3, false},   // (e2, ~e3)
        {2, false, 1, true},   // (~e2, e1)
        {3, true, 1, false},   // (e3, ~e1)
        {3, false, 2, true},   // (~e3, e2)
    }};
    return segs;
}

std::pair<StarPoint, StarPoint> eps_eval(const Rat& t) {
    if (t < 0 || t > 1) throw InvalidInputError("loop parameter out of [0,1]");
    Rat scaled = t * 6;
    long seg = static_cast<long>(mpz_class(scaled.get_num() / scaled.get_den()).get_si());
    if (seg > 5) seg = 5;
    const Rat u = scaled - Rat(seg);
    const HexSegment& s = hex_loop_segments()[static_cast<size_t>(seg)];
    const Rat u1 = s.fwd1 ? u : Rat(1) - u;
    const Rat u2 = s.fwd2 ? u : Rat(1) - u;
    return {StarPoint::on_arm(s.arm1, u1), StarPoint::on_arm(s.arm2, u2)};
}

Point StarEmbedding::at(const StarPoint& p) const {
    if (p.is_center()) return center;
    return arms[static_cast<size_t>(p.arm) - 1].at(p.t);
}

bool StarEmbedding::is_straight() const {
    return arms[0].pts.size() == 2 && arms[1].pts.size() == 2 && arms[2].pts.size() == 2;
}

ValidationReport validate_star(const StarEmbedding& emb) {
    Graph g;
    g.add_vertex("c");
    g.add_vertex("l1");
    g.add_vertex("l2");
    g.add_vertex("l3");
    g.add_edge("a1", "c", "l1");
    g.add_edge("a2", "c", "l2");
    g.add_edge("a3", "c", "l3");
    PLEmbedding pe;
    pe.vertex_pos = {emb.center, emb.arms[0].back(), emb.arms[1].back(), emb.arms[2].back()};
    pe.edge_poly = {emb.arms[0], emb.arms[1], emb.arms[2]};
    for (const Polyline& arm : emb.arms) {
        if (arm.pts.size() < 2) {
            ValidationReport rep;
            rep.ok = false;
            rep.violation = "arm polyline is degenerate";
            return rep;
        }
        if (arm.front() != emb.center) {
            ValidationReport rep;
            rep.ok = false;
            rep.violation = "arm polyline does not start at the center";
            return rep;
        }
    }
    return validate_embedding(g, pe);
}

namespace {

// theta-class of x relative to base b: 0 for the open counterclockwise
// half-turn, 1 for the opposite ray, 2 for the clockwise half-turn
int halfplane_class(const Point& base, const Point& x) {
    const Rat cr = cross(base, x);
    if (cr > 0) return 0;
    if (cr < 0) return 2;
    if (dot(base, x) < 0) return 1;
    throw InvalidInputError(
        "two arm directions coincide; the star is not embedded near the center");
}

}  // namespace

OrientationClass orientation_class(const StarEmbedding& emb) {
    Point d[3];
    for (int i = 0; i < 3; ++i) {
        const Polyline& arm = emb.arms[static_cast<size_t>(i)];
        if (arm.pts.size() < 2 || arm.front() != emb.center)
            throw InvalidInputError("arm polyline must leave the center");
        d[i] = arm.pts[1] - emb.center;
    }
    // counterclockwise angles of d2, d3 measured from d1
    const int c2 = halfplane_class(d[0], d[1]);
    const int c3 = halfplane_class(d[0], d[2]);
    bool two_before_three;
    if (c2 != c3) {
        two_before_three = c2 < c3;
    } else if (c2 == 1) {
        throw InvalidInputError(
            "two arm directions coincide; the star is not embedded near the center");
    } else {
        const Rat cr = cross(d[1], d[2]);
        if (cr == 0)
            throw InvalidInputError(
                "two arm directions coincide; the star is not embedded near the center");
        two_before_three = cr > 0;
    }
    return two_before_three ? OrientationClass::Preserving : OrientationClass::Reversing;
}

bool is_standard(const StarEmbedding& emb) {
    if (!emb.is_straight())
        throw InvalidInputError("the standard-form test applies to straight-line stars");
    if (orientation_class(emb) != OrientationClass::Preserving) return false;
    const Point l1 = emb.arms[0].back() - emb.center;
    const Point l2 = emb.arms[1].back() - emb.center;
    const Point l3 = emb.arms[2].back() - emb.center;
    return cross(l1, l2) != 0 && cross(l2, l3) != 0 && cross(l1, l3) != 0;
}

namespace {

// scale a nonzero vector by an exact power of two into unit magnitude;
// angle-preserving, so winding is unchanged while later double conversions
// stay in range
Point normalize_pow2(const Point& p) {
    const Rat ax = abs(p.x);
    const Rat ay = abs(p.y);
    const Rat m = ax > ay ? ax : ay;
    const long nb = static_cast<long>(mpz_sizeinbase(m.get_num().get_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(m.get_den().get_mpz_t(), 2));
    const long e = nb - db;
    Rat scale;
    if (e >= 0)
        scale = Rat(1, Int(1) << e);
    else
        scale = Rat(Int(1) << (-e), 1);
    return {p.x * scale, p.y * scale};
}

}  // namespace

int winding_number(std::vector<Point> directions, const WindingOptions& opts) {
    const size_t n = directions.size();
    if (n < 2) throw InvalidInputError("winding needs a closed direction path");
    for (Point& p : directions) {
        if (p.x == 0 && p.y == 0)
            throw InvalidInputError("direction vector vanishes; the two points collide");
        p = normalize_pow2(p);
    }
    for (size_t i = 0; i < n; ++i) {
        const Point& u = directions[i];
        const Point& v = directions[(i + 1) % n];
        if (cross(u, v) == 0 && dot(u, v) < 0)
            throw InvalidInputError("direction path passes through the origin");
    }

    // refine cyclically until every step satisfies dot > 0 (turn < pi/2);
    // the check is exact, so rounding below is certified
    std::deque<Point> path(directions.begin(), directions.end());
    long refinements = 0;
    size_t i = 0;
    while (i < path.size()) {
        const Point& u = path[i];
        const Point& v = path[(i + 1) % path.size()];
        if (dot(u, v) > 0) {
            ++i;
            continue;
        }
        if (++refinements > opts.max_refinements)
            throw ResourceLimitError("winding refinement exceeded its iteration budget");
        const Point mid{(u.x + v.x) / 2, (u.y + v.y) / 2};
        path.insert(path.begin() + static_cast<long>(i) + 1, mid);
    }

    long double total = 0;
    for (size_t j = 0; j < path.size(); ++j) {
        const Point& u = path[j];
        const Point& v = path[(j + 1) % path.size()];
        const long double cr = mpq_get_d(cross(u, v).get_mpq_t());
        const long double dt = mpq_get_d(dot(u, v).get_mpq_t());
        total += atan2l(cr, dt);
    }
    const long double turns = total / (2.0L * 3.14159265358979323846264338327950288L);
    const long double rounded = roundl(turns);
    if (fabsl(turns - rounded) > 0.1L)
        throw ResourceLimitError("winding angle sum failed to certify an integer");
    return static_cast<int>(rounded);
}

int gauss_winding(const StarEmbedding& emb, const WindingOptions& opts) {
    const ValidationReport rep = validate_star(emb);
    if (!rep.ok) throw InvalidInputError("invalid star embedding: " + rep.violation);

    std::vector<Point> directions;
    for (int seg = 0; seg < 6; ++seg) {
        const HexSegment& s = hex_loop_segments()[static_cast<size_t>(seg)];
        // breakpoints where either particle crosses a polyline vertex
        std::set<Rat> params{Rat(0)};
        const auto add_arm_breaks = [&](int arm) {
            const size_t m = emb.arms[static_cast<size_t>(arm) - 1].segments();
            for (size_t j = 1; j < m; ++j) params.insert(Rat(static_cast<long>(j)) / Rat(static_cast<long>(m)));
        };
        add_arm_breaks(s.arm1);
        add_arm_breaks(s.arm2);
        for (const Rat& u : params) {
            const Rat u1 = s.fwd1 ? u : Rat(1) - u;
            const Rat u2 = s.fwd2 ? u : Rat(1) - u;
            const Point p1 = emb.arms[static_cast<size_t>(s.arm1) - 1].at(u1);
            const Point p2 = emb.arms[static_cast<size_t>(s.arm2) - 1].at(u2);
            directions.push_back(p2 - p1);
        }
    }
    return winding_number(std::move(directions), opts);
}

StarEmbedding star_from_bundle(const GraphBundle& bundle) {
    const Graph& g = bundle.graph;
    if (!bundle.embedding) throw InvalidInputError("star file carries no geometry");
    if (g.vertex_count() != 4 || g.edge_count() != 3)
        throw InvalidInputError("a star file must have 4 vertices and 3 edges");
    int center = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.valence(v) == 3) center = v;
    if (center == -1) throw InvalidInputError("star file has no valence-3 center");

    StarEmbedding emb;
    emb.center = bundle.embedding->pos(center);
    for (int e = 0; e < 3; ++e) {
        Polyline p = bundle.embedding->poly(e);
        if (g.edge(e).v == center) p = p.reversed();
        emb.arms[static_cast<size_t>(e)] = std::move(p);
    }
    return emb;
}

}  // namespace conftc
