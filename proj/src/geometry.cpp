#include "geodesy/geometry.hpp"

#include <stdexcept>

#include "geodesy/errors.hpp"

namespace geodesy {

namespace mp = boost::multiprecision;

std::string rational_to_string(const Rational& r) {
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Rational rational_from_string(const std::string& text) {
    const auto bad = [&] {
        return Error(ErrorCode::Parse, "malformed rational '" + text + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(mp::cpp_int(text));
        const mp::cpp_int num(text.substr(0, slash));
        const mp::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    const Rational v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment_closed(const Point2& p, const Point2& a, const Point2& b) {
    if (orientation(a, b, p) != 0) return false;
    return dot(p - a, p - b) <= 0;
}

bool on_segment_open(const Point2& p, const Point2& a, const Point2& b) {
    if (orientation(a, b, p) != 0) return false;
    return dot(p - a, p - b) < 0;
}

std::optional<SegmentCrossing> proper_crossing(const Point2& a, const Point2& b,
                                               const Point2& c, const Point2& d) {
    const Vec2 r = b - a;
    const Vec2 s = d - c;
    const Rational denom = cross(r, s);
    if (denom == 0) return std::nullopt; // parallel or collinear
    const Vec2 ca = c - a;
    const Rational t = cross(ca, s) / denom;
    const Rational u = cross(ca, r) / denom;
    if (t <= 0 || t >= 1 || u <= 0 || u >= 1) return std::nullopt;
    return SegmentCrossing{Point2{a.x + t * r.x, a.y + t * r.y}, t, u};
}

bool collinear_overlap(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const Vec2 r = b - a;
    if (cross(r, d - c) != 0) return false;
    if (cross(r, c - a) != 0) return false; // parallel but on different lines
    // project onto the dominant axis of r
    const bool use_x = r.x != 0;
    const auto coord = [&](const Point2& p) { return use_x ? p.x : p.y; };
    Rational lo1 = coord(a), hi1 = coord(b);
    if (lo1 > hi1) std::swap(lo1, hi1);
    Rational lo2 = coord(c), hi2 = coord(d);
    if (lo2 > hi2) std::swap(lo2, hi2);
    const Rational lo = std::max(lo1, lo2);
    const Rational hi = std::min(hi1, hi2);
    return lo < hi;
}

SegmentMeet closed_segment_meet(const Point2& a, const Point2& b, const Point2& c,
                                const Point2& d) {
    SegmentMeet meet;
    const Vec2 r = b - a;
    const Vec2 s = d - c;
    const Rational denom = cross(r, s);
    if (denom != 0) {
        const Vec2 ca = c - a;
        const Rational t = cross(ca, s) / denom;
        const Rational u = cross(ca, r) / denom;
        if (t < 0 || t > 1 || u < 0 || u > 1) return meet;
        meet.kind = SegmentMeet::Kind::Point;
        meet.p = Point2{a.x + t * r.x, a.y + t * r.y};
        return meet;
    }
    if (cross(r, c - a) != 0) return meet; // parallel, distinct lines
    const bool use_x = (r.x != 0) || (s.x != 0);
    const auto coord = [&](const Point2& p) { return use_x ? p.x : p.y; };
    Point2 lo1 = a, hi1 = b;
    if (coord(lo1) > coord(hi1)) std::swap(lo1, hi1);
    Point2 lo2 = c, hi2 = d;
    if (coord(lo2) > coord(hi2)) std::swap(lo2, hi2);
    const Point2 lo = coord(lo1) >= coord(lo2) ? lo1 : lo2;
    const Point2 hi = coord(hi1) <= coord(hi2) ? hi1 : hi2;
    if (coord(lo) > coord(hi)) return meet;
    if (lo == hi) {
        meet.kind = SegmentMeet::Kind::Point;
        meet.p = lo;
        return meet;
    }
    meet.kind = SegmentMeet::Kind::Overlap;
    meet.p = lo;
    meet.q = hi;
    return meet;
}

namespace {

// Half-plane index for the ccw-from-positive-x order: 0 for angles in
// [0, pi), 1 for [pi, 2*pi).
int ccw_half(const Vec2& v) {
    if (v.y > 0) return 0;
    if (v.y < 0) return 1;
    return v.x > 0 ? 0 : 1;
}

} // namespace

bool ccw_direction_less(const Vec2& a, const Vec2& b) {
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorCode::Internal, "direction comparison on zero vector");
    const int ha = ccw_half(a);
    const int hb = ccw_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

bool cw_from_reference_less(const Vec2& ref, const Vec2& a, const Vec2& b) {
    if (ref.is_zero() || a.is_zero() || b.is_zero())
        throw Error(ErrorCode::Internal, "direction comparison on zero vector");
    // group 0: strictly clockwise of ref (angle in (0, pi));
    // group 1: exactly opposite ref (angle pi);
    // group 2: strictly counterclockwise of ref (angle in (pi, 2*pi)).
    // A direction equal to ref (angle 2*pi, i.e. 0) would mean two overlapping
    // segments from one point, which valid drawings exclude; order it last.
    const auto group = [&](const Vec2& v) {
        const Rational c = cross(ref, v);
        if (c < 0) return 0;
        if (c > 0) return 2;
        return dot(ref, v) < 0 ? 1 : 3;
    };
    const int ga = group(a);
    const int gb = group(b);
    if (ga != gb) return ga < gb;
    if (ga == 1 || ga == 3) return false; // equivalent
    return cross(a, b) < 0;
}

} // namespace geodesy
