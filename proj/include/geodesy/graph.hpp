#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geodesy/errors.hpp"

namespace geodesy {

/// Dense vertex index, contiguous 0..n-1 within one Graph.
using VertexId = int;

/// Unordered vertex pair, stored normalized with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    Edge() = default;
    Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

    auto operator<=>(const Edge&) const = default;
};

enum class RoleKind {
    Plain,
    Branch,      // original vertex of the underlying complete graph
    Subdivision, // degree-2 vertex created by subdividing a branch edge
    Point,       // affine-plane point
    Line,        // affine-plane line
};

/// Per-vertex role. Field validity depends on kind: subdivisions carry the
/// parent branch edge and a 1-based position along its path; lines carry
/// their parallel-class id.
struct VertexRole {
    RoleKind kind = RoleKind::Plain;
    Edge parent{};         // Subdivision only
    int position = 0;      // Subdivision only, 1..t counted from parent.a
    int parallel_class = 0; // Line only

    static VertexRole plain() { return {}; }
    static VertexRole branch() { return {RoleKind::Branch, {}, 0, 0}; }
    static VertexRole subdivision(Edge parent, int position) {
        return {RoleKind::Subdivision, parent, position, 0};
    }
    static VertexRole point() { return {RoleKind::Point, {}, 0, 0}; }
    static VertexRole line(int parallel_class) {
        return {RoleKind::Line, {}, 0, parallel_class};
    }

    bool operator==(const VertexRole&) const = default;
};

/// Construction metadata attached to generated graphs.
struct ConstructionMeta {
    enum class Family { Kst, Gk } family = Family::Kst;
    int s = 0, t = 0;          // Kst
    int k = 0, p = 0, m = 0;   // Gk (plane order, field characteristic, degree)
    std::vector<int> modulus;  // Gk field modulus coefficients, constant first; empty for m == 1

    bool operator==(const ConstructionMeta&) const = default;
};

/// Simple undirected graph with contiguous vertex ids.
/// Edges are kept normalized (a < b) and sorted; an adjacency table with
/// sorted neighbor lists is built on construction.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<VertexRole> roles;
    std::optional<ConstructionMeta> meta;
    std::vector<std::vector<VertexId>> adj;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(VertexId u, VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(adj[v].size()); }
    const VertexRole& role(VertexId v) const { return roles[v]; }
};

/// Vertex sequence; consecutive vertices must be adjacent in the host graph
/// and no vertex repeats. A single vertex is the zero-length path.
struct Path {
    std::vector<VertexId> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    Path reversed() const;
    /// Edges traversed, in order, each normalized.
    std::vector<Edge> edge_list() const;

    auto operator<=>(const Path&) const = default;
};

/// Validates and normalizes: endpoints in range, no loops, no duplicate
/// edges. Roles default to Plain for ids missing from the map.
Graph build_graph(int n, const std::vector<Edge>& edges,
                  const std::map<VertexId, VertexRole>& roles = {},
                  std::optional<ConstructionMeta> meta = std::nullopt);

/// True iff p is a simple path of g (adjacent consecutive vertices, no repeats).
bool is_path_in(const Graph& g, const Path& p);

} // namespace geodesy
