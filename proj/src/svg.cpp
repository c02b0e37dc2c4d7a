#include "geodesy/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace geodesy {

namespace {

struct Viewport {
    double scale = 1.0;
    double x_off = 0.0;
    double y_off = 0.0;

    // y axis flipped so larger y is up
    std::pair<double, double> map(const Point2& p) const {
        return {x_off + rational_to_double(p.x) * scale,
                1000.0 - (y_off + rational_to_double(p.y) * scale)};
    }
};

Viewport fit(const Graph& g, const Drawing& d) {
    Rational min_x, max_x, min_y, max_y;
    bool first = true;
    for (VertexId v = 0; v < g.n; ++v) {
        const Point2& p = d.at(v);
        if (first) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            first = false;
        } else {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double margin = 20.0;
    const double span = 1000.0 - 2 * margin;
    const double width = rational_to_double(max_x - min_x);
    const double height = rational_to_double(max_y - min_y);
    Viewport vp;
    vp.scale = std::max(width, height) > 0 ? span / std::max(width, height) : 1.0;
    // center the smaller extent
    vp.x_off = margin + (span - width * vp.scale) / 2 - rational_to_double(min_x) * vp.scale;
    vp.y_off = margin + (span - height * vp.scale) / 2 - rational_to_double(min_y) * vp.scale;
    return vp;
}

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

} // namespace

std::string export_svg(const Graph& g, const Drawing& d,
                       const std::optional<std::pair<Path, Path>>& highlight) {
    for (VertexId v = 0; v < g.n; ++v) d.at(v); // position coverage check

    const Viewport vp = fit(g, d);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
    out += "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    const auto line = [&](const Point2& a, const Point2& b, const std::string& style) {
        const auto [x1, y1] = vp.map(a);
        const auto [x2, y2] = vp.map(b);
        out += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
               "\" y2=\"" + fmt(y2) + "\" " + style + "/>\n";
    };

    for (const Edge& e : g.edges)
        line(d.at(e.a), d.at(e.b), "stroke=\"#777777\" stroke-width=\"1\"");

    if (highlight) {
        for (const Path* path : {&highlight->first, &highlight->second})
            for (std::size_t i = 0; i + 1 < path->vertices.size(); ++i)
                line(d.at(path->vertices[i]), d.at(path->vertices[i + 1]),
                     "stroke=\"#e67e22\" stroke-width=\"4\" stroke-linecap=\"round\"");
    }

    for (VertexId v = 0; v < g.n; ++v) {
        const auto [cx, cy] = vp.map(d.at(v));
        const RoleKind kind = g.roles[v].kind;
        const bool filled = kind == RoleKind::Branch || kind == RoleKind::Point ||
                            kind == RoleKind::Plain;
        if (filled)
            out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                   "\" r=\"6\" fill=\"#222222\"/>\n";
        else
            out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                   "\" r=\"4\" fill=\"white\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace geodesy
