#include "conftc/common.hpp"

namespace conftc {

bool point_on_segment(const Point& q, const Point& a, const Point& b) {
    if (orient(a, b, q) != 0) return false;
    return dot(q - a, q - b) <= 0;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && point_on_segment(c, a, b)) return true;
    if (o2 == 0 && point_on_segment(d, a, b)) return true;
    if (o3 == 0 && point_on_segment(a, c, d)) return true;
    if (o4 == 0 && point_on_segment(b, c, d)) return true;
    return false;
}

Rat segment_distance2(const Point& q, const Point& a, const Point& b) {
    const Point ab = b - a;
    const Rat len2 = norm2(ab);
    if (len2 == 0) return norm2(q - a);
    Rat t = dot(q - a, ab) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return norm2(q - lerp(a, b, t));
}

Point Polyline::at(const Rat& t) const {
    if (pts.size() == 1) return pts.front();
    const Rat scaled = t * Rat(static_cast<long>(segments()));
    long seg = static_cast<long>(mpz_class(scaled.get_num() / scaled.get_den()).get_si());
    if (seg >= static_cast<long>(segments())) seg = static_cast<long>(segments()) - 1;
    if (seg < 0) seg = 0;
    const Rat local = scaled - Rat(seg);
    return lerp(pts[static_cast<size_t>(seg)], pts[static_cast<size_t>(seg) + 1], local);
}

Polyline Polyline::slice(const Rat& t0, const Rat& t1) const {
    Polyline out;
    out.pts.push_back(at(t0));
    const Rat n(static_cast<long>(segments()));
    for (size_t i = 1; i < pts.size() - 1; ++i) {
        const Rat ti = Rat(static_cast<long>(i)) / n;
        if (ti > t0 && ti < t1) out.pts.push_back(pts[i]);
    }
    const Point end = at(t1);
    if (end != out.pts.back()) out.pts.push_back(end);
    return out;
}

Polyline Polyline::reversed() const {
    Polyline out;
    out.pts.assign(pts.rbegin(), pts.rend());
    return out;
}

bool Polyline::is_simple() const {
    if (pts.size() < 2) return false;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return false;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        for (size_t j = i + 2; j + 1 < pts.size(); ++j) {
            // adjacent segments share a vertex by construction; skip them
            if (j == i + 1) continue;
            if (segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1])) return false;
        }
    }
    return true;
}

Rat rational_sqrt_lower(const Rat& s) {
    if (s <= 0) return Rat(0);
    // integer sqrt of floor(s * 4^k) over 2^k, with k chosen so the result
    // carries a few bits below the true square root
    const int k = 16;
    mpz_class scaled = (s.get_num() << (2 * k)) / s.get_den();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Rat r(root, mpz_class(1) << k);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw InvalidInputError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace conftc
