#include "geodesy/drawing.hpp"

#include <algorithm>
#include <string>

namespace geodesy {

const Point2& Drawing::at(VertexId v) const {
    const auto it = positions.find(v);
    if (it == positions.end())
        throw Error(ErrorCode::Param, "drawing has no position for vertex " + std::to_string(v));
    return it->second;
}

bool Drawing::covers(const Graph& g) const {
    for (VertexId v = 0; v < g.n; ++v)
        if (!positions.count(v)) return false;
    return true;
}

ValidityReport validate_drawing(const Graph& g, const Drawing& d) {
    for (VertexId v = 0; v < g.n; ++v)
        if (!d.positions.count(v))
            throw Error(ErrorCode::Param,
                        "drawing has no position for vertex " + std::to_string(v));

    ValidityReport report;
    const auto flag = [&](Violation v) {
        report.valid = false;
        report.violations.push_back(std::move(v));
    };

    // (a) pairwise distinct vertex positions
    std::vector<std::pair<Point2, VertexId>> by_pos;
    by_pos.reserve(g.n);
    for (VertexId v = 0; v < g.n; ++v) by_pos.emplace_back(d.at(v), v);
    std::sort(by_pos.begin(), by_pos.end(),
              [](const auto& l, const auto& r) {
                  return l.first < r.first || (l.first == r.first && l.second < r.second);
              });
    for (std::size_t i = 1; i < by_pos.size(); ++i)
        if (by_pos[i].first == by_pos[i - 1].first)
            flag({Violation::Kind::CoincidentVertices,
                  {by_pos[i - 1].second, by_pos[i].second},
                  {}});

    // (b) no vertex on a non-incident segment (closed: endpoints count,
    // though an endpoint hit implies coincident vertices already)
    for (const Edge& e : g.edges) {
        const Point2& pa = d.at(e.a);
        const Point2& pb = d.at(e.b);
        for (VertexId v = 0; v < g.n; ++v) {
            if (v == e.a || v == e.b) continue;
            if (on_segment_closed(d.at(v), pa, pb))
                flag({Violation::Kind::VertexOnEdge, {v}, {e}});
        }
    }

    // (c) no collinear overlap between distinct segments
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
            const Edge& f = g.edges[j];
            if (collinear_overlap(d.at(e.a), d.at(e.b), d.at(f.a), d.at(f.b)))
                flag({Violation::Kind::CollinearOverlap, {}, {e, f}});
        }
    }
    return report;
}

SegmentRef central_segment(const Graph& g, Edge branch_edge) {
    const KstParams params = kst::params_of(g);
    if (params.t % 2 != 0)
        throw Error(ErrorCode::Param, "odd t: no single central segment exists");
    if (g.roles[branch_edge.a].kind != RoleKind::Branch ||
        g.roles[branch_edge.b].kind != RoleKind::Branch)
        throw Error(ErrorCode::Param, "not a branch edge");
    if (params.t == 0) return {branch_edge, true};
    const VertexId lo = kst::subdivision_vertex(g, branch_edge, params.t / 2);
    const VertexId hi = kst::subdivision_vertex(g, branch_edge, params.t / 2 + 1);
    return {Edge(lo, hi), true};
}

bool is_central_segment(const Graph& g, Edge graph_edge) {
    const KstParams params = kst::params_of(g);
    if (params.t % 2 != 0)
        throw Error(ErrorCode::Param, "odd t: no single central segment exists");
    const kst::SegmentLocation loc = kst::locate_segment(g, graph_edge);
    return loc.index == params.t / 2 + 1;
}

PolylineDrawing induced_complete_drawing(const Graph& g, const Drawing& d) {
    const KstParams params = kst::params_of(g);
    PolylineDrawing induced;
    for (int u = 0; u < params.s; ++u) {
        if (g.roles[u].kind != RoleKind::Branch)
            throw Error(ErrorCode::Param, "branch role metadata missing");
        induced.branch_positions[u] = d.at(u);
    }
    for (int u = 0; u < params.s; ++u)
        for (int v = u + 1; v < params.s; ++v) {
            const Edge be(u, v);
            std::vector<Point2> polyline;
            for (VertexId w : kst::edge_path(g, be).vertices) polyline.push_back(d.at(w));
            induced.polylines[be] = std::move(polyline);
        }
    return induced;
}

} // namespace geodesy
