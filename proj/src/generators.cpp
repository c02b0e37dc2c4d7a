#include "geodesy/generators.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace geodesy {

Graph subdivided_complete(const KstParams& params) {
    const int s = params.s;
    const int t = params.t;
    if (s < 2) throw Error(ErrorCode::Param, "K(s,t) needs at least 2 branch vertices");
    if (t < 0) throw Error(ErrorCode::Param, "subdivision count must be non-negative");

    std::vector<Edge> branch_edges;
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) branch_edges.emplace_back(u, v);

    const int n = s + t * static_cast<int>(branch_edges.size());
    std::vector<Edge> edges;
    std::map<VertexId, VertexRole> roles;
    for (int u = 0; u < s; ++u) roles[u] = VertexRole::branch();

    int next = s;
    for (const Edge& be : branch_edges) {
        VertexId prev = be.a;
        for (int pos = 1; pos <= t; ++pos) {
            const VertexId sub = next++;
            roles[sub] = VertexRole::subdivision(be, pos);
            edges.emplace_back(prev, sub);
            prev = sub;
        }
        edges.emplace_back(prev, be.b);
    }

    ConstructionMeta meta;
    meta.family = ConstructionMeta::Family::Kst;
    meta.s = s;
    meta.t = t;
    return build_graph(n, edges, roles, meta);
}

Graph scapellato_graph(const AffinePlane& plane) {
    const int k = plane.order;
    const int points = plane.point_count();
    const int n = points + plane.line_count();

    std::vector<Edge> edges;
    std::map<VertexId, VertexRole> roles;
    for (int pt = 0; pt < points; ++pt) roles[pt] = VertexRole::point();

    // line vertex ids follow class grouping: class 0 lines, class 1 lines, ...
    std::vector<VertexId> line_vertex(plane.line_count());
    int next = points;
    for (int cls = 0; cls < static_cast<int>(plane.classes.size()); ++cls)
        for (int line_id : plane.classes[cls]) {
            line_vertex[line_id] = next;
            roles[next] = VertexRole::line(cls);
            ++next;
        }

    for (int cls = 0; cls < static_cast<int>(plane.classes.size()); ++cls) {
        const auto& lines = plane.classes[cls];
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j)
                edges.emplace_back(line_vertex[lines[i]], line_vertex[lines[j]]);
    }
    for (int line_id = 0; line_id < plane.line_count(); ++line_id)
        for (int pt : plane.lines[line_id]) edges.emplace_back(pt, line_vertex[line_id]);

    ConstructionMeta meta;
    meta.family = ConstructionMeta::Family::Gk;
    meta.k = k;

    Graph g = build_graph(n, edges, roles, meta);

    // post-conditions of the construction
    const long expect_incidence = static_cast<long>(k) * k * (k + 1);
    const long expect_parallel = static_cast<long>(k + 1) * k * (k - 1) / 2;
    if (g.n != 2 * k * k + k ||
        static_cast<long>(g.edge_count()) != expect_incidence + expect_parallel)
        throw Error(ErrorCode::Internal, "G_k counts do not match the closed forms");
    for (int pt = 0; pt < points; ++pt)
        if (g.degree(pt) != k + 1)
            throw Error(ErrorCode::Internal, "point vertex with wrong degree");
    for (int v = points; v < n; ++v)
        if (g.degree(v) != 2 * k - 1)
            throw Error(ErrorCode::Internal, "line vertex with wrong degree");
    return g;
}

Graph bipartite_incidence_subgraph(const Graph& gk) {
    bool has_roles = false;
    for (const auto& role : gk.roles)
        if (role.kind == RoleKind::Point || role.kind == RoleKind::Line) {
            has_roles = true;
            break;
        }
    if (!has_roles)
        throw Error(ErrorCode::Param, "graph carries no point/line roles");

    std::vector<Edge> edges;
    std::map<VertexId, VertexRole> roles;
    for (VertexId v = 0; v < gk.n; ++v) roles[v] = gk.roles[v];
    for (const Edge& e : gk.edges) {
        const RoleKind ka = gk.roles[e.a].kind;
        const RoleKind kb = gk.roles[e.b].kind;
        if ((ka == RoleKind::Point && kb == RoleKind::Line) ||
            (ka == RoleKind::Line && kb == RoleKind::Point))
            edges.push_back(e);
    }
    return build_graph(gk.n, edges, roles, gk.meta);
}

namespace kst {

KstParams params_of(const Graph& g) {
    if (!g.meta || g.meta->family != ConstructionMeta::Family::Kst)
        throw Error(ErrorCode::Param, "graph does not carry K(s,t) construction metadata");
    return {g.meta->s, g.meta->t};
}

int branch_count(const Graph& g) { return params_of(g).s; }

namespace {

int edge_rank(int s, Edge e) {
    // lexicographic rank of (a,b), a < b, among the C(s,2) branch edges
    int rank = 0;
    for (int u = 0; u < e.a; ++u) rank += s - u - 1;
    return rank + (e.b - e.a - 1);
}

} // namespace

VertexId subdivision_vertex(const Graph& g, Edge branch_edge, int position) {
    const KstParams params = params_of(g);
    if (position < 1 || position > params.t)
        throw Error(ErrorCode::Param, "subdivision position out of range");
    const VertexId id =
        params.s + edge_rank(params.s, branch_edge) * params.t + (position - 1);
    const VertexRole& role = g.roles[id];
    if (role.kind != RoleKind::Subdivision || role.parent != branch_edge ||
        role.position != position)
        throw Error(ErrorCode::Internal, "subdivision id scheme mismatch");
    return id;
}

Path edge_path(const Graph& g, Edge branch_edge) {
    const KstParams params = params_of(g);
    Path path;
    path.vertices.push_back(branch_edge.a);
    for (int pos = 1; pos <= params.t; ++pos)
        path.vertices.push_back(subdivision_vertex(g, branch_edge, pos));
    path.vertices.push_back(branch_edge.b);
    return path;
}

VertexId far_central_endpoint(const Graph& g, Edge branch_edge, VertexId near_branch) {
    const KstParams params = params_of(g);
    if (params.t < 2 || params.t % 2 != 0)
        throw Error(ErrorCode::Param, "central endpoints require even t >= 2");
    if (near_branch != branch_edge.a && near_branch != branch_edge.b)
        throw Error(ErrorCode::Param, "vertex is not an endpoint of the branch edge");
    const int position = near_branch == branch_edge.a ? params.t / 2 + 1 : params.t / 2;
    return subdivision_vertex(g, branch_edge, position);
}

SegmentLocation locate_segment(const Graph& g, Edge graph_edge) {
    const KstParams params = params_of(g);
    const VertexRole& ra = g.roles[graph_edge.a];
    const VertexRole& rb = g.roles[graph_edge.b];
    const auto bad = [&] {
        return Error(ErrorCode::Param,
                     "edge (" + std::to_string(graph_edge.a) + "," +
                         std::to_string(graph_edge.b) + ") is not a K(s,t) path segment");
    };

    if (ra.kind == RoleKind::Branch && rb.kind == RoleKind::Branch) {
        if (params.t != 0) throw bad();
        return {graph_edge, 1};
    }
    if (ra.kind == RoleKind::Branch || rb.kind == RoleKind::Branch) {
        const VertexId branch = ra.kind == RoleKind::Branch ? graph_edge.a : graph_edge.b;
        const VertexRole& sub = ra.kind == RoleKind::Branch ? rb : ra;
        if (sub.kind != RoleKind::Subdivision) throw bad();
        if (branch == sub.parent.a && sub.position == 1) return {sub.parent, 1};
        if (branch == sub.parent.b && sub.position == params.t)
            return {sub.parent, params.t + 1};
        throw bad();
    }
    if (ra.kind != RoleKind::Subdivision || rb.kind != RoleKind::Subdivision ||
        ra.parent != rb.parent)
        throw bad();
    const int lo = std::min(ra.position, rb.position);
    const int hi = std::max(ra.position, rb.position);
    if (hi != lo + 1) throw bad();
    return {ra.parent, lo + 1};
}

} // namespace kst

} // namespace geodesy
