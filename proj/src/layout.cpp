#include "geodesy/layout.hpp"

#include <algorithm>
#include <vector>

namespace geodesy {

namespace {

Point2 along(const Point2& a, const Point2& b, const Rational& t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

} // namespace

Drawing clustered_convex_layout(const Graph& g) {
    const KstParams params = kst::params_of(g);
    if (params.t % 2 != 0)
        throw Error(ErrorCode::Param, "layout requires an even subdivision count");
    const int s = params.s;
    const int t = params.t;
    const int half = t / 2;

    Drawing drawing;
    for (int i = 0; i < s; ++i)
        drawing.positions[i] = Point2{Rational(i), Rational(i) * i};

    std::vector<Edge> branch_edges;
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) branch_edges.emplace_back(u, v);

    for (const Edge& e : branch_edges) {
        const Point2& pa = drawing.positions[e.a];
        const Point2& pb = drawing.positions[e.b];

        // chord parameters of crossings with chords of independent edges
        Rational lo(1, 2), hi(1, 2);
        bool any = false;
        for (const Edge& f : branch_edges) {
            if (f.a == e.a || f.a == e.b || f.b == e.a || f.b == e.b) continue;
            const auto crossing = proper_crossing(pa, pb, drawing.positions[f.a],
                                                  drawing.positions[f.b]);
            if (!crossing) continue;
            if (!any) {
                lo = hi = crossing->t_first;
                any = true;
            } else {
                lo = std::min(lo, crossing->t_first);
                hi = std::max(hi, crossing->t_first);
            }
        }

        // cluster parameters: positions 1..t/2 inside (0, lo), positions
        // t/2+1..t inside (hi, 1), mirrored
        for (int pos = 1; pos <= t; ++pos) {
            Rational param;
            if (pos <= half)
                param = Rational(pos) * lo / (half + 1);
            else
                param = 1 - Rational(t + 1 - pos) * (1 - hi) / (half + 1);
            drawing.positions[kst::subdivision_vertex(g, e, pos)] = along(pa, pb, param);
        }
    }

    const ValidityReport report = validate_drawing(g, drawing);
    if (!report.valid)
        throw Error(ErrorCode::Internal,
                    "layout produced an invalid drawing (" +
                        std::to_string(report.violations.size()) + " violations)");
    return drawing;
}

} // namespace geodesy
