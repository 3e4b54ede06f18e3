#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace conftc {

using Rat = mpq_class;
using Int = mpz_class;

/// Violated hypothesis of one of the certified statements (CLI exit 2).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Configured ceiling exceeded (CLI exit 3).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Exact planar geometry. All predicates are decided in rational arithmetic;
// nothing here ever rounds.
// ---------------------------------------------------------------------------

struct Point {
    Rat x;
    Rat y;

    Point() = default;
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const Rat& s) const { return {x * s, y * s}; }
};

inline Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rat norm2(const Point& a) { return dot(a, a); }

/// Sign of the signed area of triangle (a,b,c): +1 left turn, -1 right, 0 collinear.
inline int orient(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b - a, c - a));
}

/// Does q lie on the closed segment [a,b]? (a==b allowed.)
bool point_on_segment(const Point& q, const Point& a, const Point& b);

/// Do closed segments [a,b] and [c,d] share at least one point?
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Squared distance from point q to the closed segment [a,b].
Rat segment_distance2(const Point& q, const Point& a, const Point& b);

/// Point at parameter t in [0,1] along [a,b].
inline Point lerp(const Point& a, const Point& b, const Rat& t) {
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

/// A polyline with rational vertices. Geometrically the concatenation of the
/// segments between consecutive vertices; parametrized uniformly per segment.
struct Polyline {
    std::vector<Point> pts;

    size_t segments() const { return pts.empty() ? 0 : pts.size() - 1; }
    const Point& front() const { return pts.front(); }
    const Point& back() const { return pts.back(); }

    /// Position at parameter t in [0,1] (uniform parameter per segment).
    Point at(const Rat& t) const;

    /// The sub-polyline between parameters t0 <= t1.
    Polyline slice(const Rat& t0, const Rat& t1) const;

    Polyline reversed() const;

    /// True if no vertex repeats and no two non-adjacent segments meet.
    bool is_simple() const;
};

/// Largest rational r = a/2^k with r^2 <= s and r within a factor 2 of sqrt(s).
/// Used to pick concrete disk radii below an exact squared-distance bound.
Rat rational_sqrt_lower(const Rat& s);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace conftc
