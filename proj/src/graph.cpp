#include "geodesy/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace geodesy {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Param: return "param";
        case ErrorCode::Io: return "io";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::InvalidGraph: return "invalid-graph";
        case ErrorCode::Disconnected: return "disconnected";
        case ErrorCode::InvalidDrawing: return "invalid-drawing";
        case ErrorCode::NotGeodetic: return "not-geodetic";
        case ErrorCode::Ambiguous: return "ambiguous";
        case ErrorCode::Contract: return "contract";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Path Path::reversed() const {
    Path r = *this;
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

std::vector<Edge> Path::edge_list() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        out.emplace_back(vertices[i], vertices[i + 1]);
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges,
                  const std::map<VertexId, VertexRole>& roles,
                  std::optional<ConstructionMeta> meta) {
    if (n < 0) throw Error(ErrorCode::InvalidGraph, "vertex count must be non-negative");

    Graph g;
    g.n = n;
    g.roles.assign(n, VertexRole::plain());
    g.adj.assign(n, {});

    std::set<Edge> seen;
    for (const Edge& raw : edges) {
        const Edge e(raw.a, raw.b);
        if (e.a == e.b)
            throw Error(ErrorCode::InvalidGraph,
                        "loop edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")");
        if (e.a < 0 || e.b >= n)
            throw Error(ErrorCode::InvalidGraph,
                        "edge (" + std::to_string(raw.a) + "," + std::to_string(raw.b) +
                            ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (!seen.insert(e).second)
            throw Error(ErrorCode::InvalidGraph,
                        "duplicate edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")");
    }
    g.edges.assign(seen.begin(), seen.end());

    for (const auto& [id, role] : roles) {
        if (id < 0 || id >= n)
            throw Error(ErrorCode::InvalidGraph,
                        "role assigned to out-of-range vertex " + std::to_string(id));
        if (role.kind == RoleKind::Subdivision && role.position < 1)
            throw Error(ErrorCode::InvalidGraph,
                        "subdivision vertex " + std::to_string(id) + " has position < 1");
        if (role.kind == RoleKind::Line && role.parallel_class < 0)
            throw Error(ErrorCode::InvalidGraph,
                        "line vertex " + std::to_string(id) + " has negative class id");
        g.roles[id] = role;
    }

    for (const Edge& e : g.edges) {
        g.adj[e.a].push_back(e.b);
        g.adj[e.b].push_back(e.a);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

    g.meta = std::move(meta);
    return g;
}

bool is_path_in(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    std::unordered_set<VertexId> seen;
    for (VertexId v : p.vertices) {
        if (v < 0 || v >= g.n) return false;
        if (!seen.insert(v).second) return false;
    }
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
    return true;
}

} // namespace geodesy
