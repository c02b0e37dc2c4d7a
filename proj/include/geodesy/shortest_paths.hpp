#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "geodesy/graph.hpp"

namespace geodesy {

using BigInt = boost::multiprecision::cpp_int;

/// All-pairs BFS data: hop distances, shortest-path multiplicities and
/// per-source predecessor sets. Multiplicities are arbitrary-precision;
/// they can grow exponentially with n on dense graphs.
struct ShortestPathTable {
    int n = 0;
    std::vector<std::vector<int>> dist;
    std::vector<std::vector<BigInt>> count;
    // preds[s][v]: sorted neighbors w of v with dist[s][w] + 1 == dist[s][v]
    std::vector<std::vector<std::vector<VertexId>>> preds;

    int diameter() const;
};

struct GeodeticWitness {
    VertexId u = 0;
    VertexId v = 0;
    Path path_a;
    Path path_b;
};

struct GeodeticReport {
    bool is_geodetic = false;
    int diameter = 0;
    std::optional<GeodeticWitness> witness; // present iff not geodetic
};

/// BFS from every source. Throws Disconnected naming a vertex pair in
/// different components when g is not connected.
ShortestPathTable all_pairs_shortest(const Graph& g);

/// Geodetic iff every off-diagonal multiplicity is 1. The witness is the
/// lexicographically smallest offending pair with its two lexicographically
/// smallest shortest paths.
GeodeticReport is_geodetic(const Graph& g);
GeodeticReport is_geodetic(const Graph& g, const ShortestPathTable& table);

/// The unique shortest u-v path, oriented u to v, endpoints inclusive.
/// Throws AmbiguousPathError carrying two distinct shortest paths when
/// count[u][v] > 1.
Path unique_shortest_path(const ShortestPathTable& table, VertexId u, VertexId v);

/// Thrown by unique_shortest_path; carries the two offending paths.
class AmbiguousPathError : public Error {
public:
    AmbiguousPathError(VertexId u, VertexId v, Path first, Path second);
    const Path& first_path() const { return first_; }
    const Path& second_path() const { return second_; }

private:
    Path first_, second_;
};

/// The common subpath of two shortest paths of a geodetic host, oriented
/// along p, or nullopt when vertex-disjoint. Throws Contract when the
/// vertex intersection is not a contiguous subpath of both (which signals
/// a non-geodetic host or non-shortest inputs).
std::optional<Path> shared_subpath(const Path& p, const Path& q);

/// Brute-force enumeration of all shortest u-v paths, lexicographically
/// sorted. Independent of the counting in all_pairs_shortest; used as the
/// oracle for it.
std::vector<Path> enumerate_shortest_paths(const Graph& g, VertexId u, VertexId v);

} // namespace geodesy
