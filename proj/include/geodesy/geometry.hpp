#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "geodesy/errors.hpp"

namespace geodesy {

/// Exact rational scalar, always in canonical reduced form with a positive
/// denominator. All geometric predicates in this project are decided on
/// these, never on floating point.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "numerator/denominator" rendering, e.g. "3/4", "-1/2", "5/1".
std::string rational_to_string(const Rational& r);

/// Parses "p/q" or a bare integer "p"; rejects zero denominators.
Rational rational_from_string(const std::string& text);

double rational_to_double(const Rational& r);

struct Point2 {
    Rational x;
    Rational y;

    bool operator==(const Point2&) const = default;
    bool operator<(const Point2& o) const { return x < o.x || (x == o.x && y < o.y); }
};

struct Vec2 {
    Rational x;
    Rational y;

    bool is_zero() const { return x == 0 && y == 0; }
};

inline Vec2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }

Rational cross(const Vec2& a, const Vec2& b);
Rational dot(const Vec2& a, const Vec2& b);

/// Sign of the signed area of triangle (a, b, c): positive for a left turn.
int orientation(const Point2& a, const Point2& b, const Point2& c);

/// True iff p lies on the closed segment [a, b].
bool on_segment_closed(const Point2& p, const Point2& a, const Point2& b);

/// True iff p lies on segment (a, b) excluding its endpoints.
bool on_segment_open(const Point2& p, const Point2& a, const Point2& b);

struct SegmentCrossing {
    Point2 point;
    Rational t_first;  // parameter along the first segment, in (0,1)
    Rational t_second; // parameter along the second segment, in (0,1)
};

/// Proper crossing of segments (a,b) and (c,d): a single intersection point
/// interior to both. Collinear or touching configurations yield nullopt.
std::optional<SegmentCrossing> proper_crossing(const Point2& a, const Point2& b,
                                               const Point2& c, const Point2& d);

/// True iff the two closed segments share more than one point (collinear
/// overlap of positive length).
bool collinear_overlap(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Intersection of two closed segments as either nothing, one point, or an
/// overlap segment. Used by the test-side geometric oracle and the validity
/// checker.
struct SegmentMeet {
    enum class Kind { Empty, Point, Overlap } kind = Kind::Empty;
    Point2 p; // Point: the point; Overlap: one overlap endpoint
    Point2 q; // Overlap: the other endpoint
};
SegmentMeet closed_segment_meet(const Point2& a, const Point2& b, const Point2& c,
                                const Point2& d);

/// Strict-weak order of nonzero directions by counterclockwise angle from
/// the positive x axis, exact. Equal directions compare equivalent.
bool ccw_direction_less(const Vec2& a, const Vec2& b);

/// Strict-weak order by clockwise angle measured from reference direction
/// `ref`, angles taken in (0, 2*pi]; used for ordering curve germs around a
/// contracted component end.
bool cw_from_reference_less(const Vec2& ref, const Vec2& a, const Vec2& b);

} // namespace geodesy
