#pragma once

#include <optional>

#include "geodesy/affine_plane.hpp"
#include "geodesy/graph.hpp"

namespace geodesy {

/// Parameters of the uniformly subdivided complete graph K(s,t).
/// Odd t is allowed; it produces the non-geodetic family.
struct KstParams {
    int s = 0; // branch vertices, >= 2
    int t = 0; // subdivisions per edge, >= 0
};

/// K_s with every edge subdivided t times. Ids: branches 0..s-1, then
/// subdivision vertices grouped by parent edge in lexicographic edge order
/// and by position 1..t counted from the smaller branch id.
Graph subdivided_complete(const KstParams& params);

/// Scapellato graph G_k of an affine plane: vertices are points then lines
/// (lines grouped by parallel class), edges join parallel lines and
/// incident point-line pairs. No point-point edges.
Graph scapellato_graph(const AffinePlane& plane);

/// Same vertex set, point-line edges only.
Graph bipartite_incidence_subgraph(const Graph& gk);

// ---- K(s,t) structure helpers -------------------------------------------

namespace kst {

/// Construction parameters of a K(s,t) graph; throws Param if the graph
/// does not carry kst metadata.
KstParams params_of(const Graph& g);

int branch_count(const Graph& g);

/// Vertex id of the subdivision vertex at `position` (1..t, counted from the
/// smaller branch id) on branch edge {u, v}; for t == 0 there are none.
VertexId subdivision_vertex(const Graph& g, Edge branch_edge, int position);

/// The full path of branch edge {u, v}: u, its t subdivision vertices, v,
/// oriented from the smaller branch id.
Path edge_path(const Graph& g, Edge branch_edge);

/// Endpoint of the central segment of [uv] on the side away from
/// `near_branch` (which must be u or v). Even t >= 2 required.
VertexId far_central_endpoint(const Graph& g, Edge branch_edge, VertexId near_branch);

/// Parent branch edge and 1-based segment index of a drawn graph edge.
/// Segment i of [uv] joins path vertices i-1 and i counted from the smaller
/// branch id; a branch-branch edge (t = 0) is segment 1.
struct SegmentLocation {
    Edge branch_edge;
    int index = 0;
};
SegmentLocation locate_segment(const Graph& g, Edge graph_edge);

} // namespace kst

} // namespace geodesy
