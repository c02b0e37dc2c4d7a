#pragma once

#include <map>
#include <vector>

#include "geodesy/generators.hpp"
#include "geodesy/geometry.hpp"
#include "geodesy/graph.hpp"

namespace geodesy {

/// Straight-line drawing: one exact position per vertex; every graph edge is
/// the segment between its endpoint positions.
struct Drawing {
    std::map<VertexId, Point2> positions;

    const Point2& at(VertexId v) const;
    bool covers(const Graph& g) const;
};

struct Violation {
    enum class Kind { CoincidentVertices, VertexOnEdge, CollinearOverlap } kind;
    std::vector<VertexId> vertices; // offending vertex ids
    std::vector<Edge> edges;        // offending edges
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks that (a) vertices are pairwise distinct, (b) no vertex lies on a
/// non-incident segment, and (c) no two distinct segments overlap in more
/// than a point. Three or more segments through one interior point are
/// allowed. Throws Param when a position is missing.
ValidityReport validate_drawing(const Graph& g, const Drawing& d);

/// Reference to one drawn segment of a subdivided edge.
struct SegmentRef {
    Edge edge;           // the actual graph edge forming this segment
    bool central = false;
};

/// The middle segment of branch edge [uv]: between subdivision positions
/// t/2 and t/2+1. Requires even t; for t == 0 the edge itself is central.
SegmentRef central_segment(const Graph& g, Edge branch_edge);

/// True iff the graph edge is the central segment of its branch edge.
bool is_central_segment(const Graph& g, Edge graph_edge);

/// The drawing of K_s induced by a drawing of K(s,t): branch positions plus
/// one polyline per branch edge visiting the subdivision positions in path
/// order.
struct PolylineDrawing {
    std::map<VertexId, Point2> branch_positions;
    std::map<Edge, std::vector<Point2>> polylines; // keyed by branch edge
};

PolylineDrawing induced_complete_drawing(const Graph& g, const Drawing& d);

} // namespace geodesy
