#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "geodesy/drawing.hpp"
#include "geodesy/shortest_paths.hpp"

namespace geodesy {

/// One proper interior crossing between the drawn segments of two
/// non-adjacent graph edges.
struct CrossingRecord {
    Edge first;  // first < second
    Edge second;
    Point2 point;
    Rational param_first;  // position along `first` from first.a, in (0,1)
    Rational param_second;

    bool operator<(const CrossingRecord& o) const {
        return first < o.first || (first == o.first && second < o.second);
    }
};

/// All proper crossings between segments of non-adjacent edges, exact, in
/// edge-pair order. Throws InvalidDrawing when the drawing fails validation.
std::vector<CrossingRecord> segment_intersections(const Graph& g, const Drawing& d);

enum class MeetKind { SharedSubpath, VertexTouch, ProperCrossing };

/// One connected component of the intersection of two drawn path images.
struct Meet {
    MeetKind kind = MeetKind::ProperCrossing;
    std::vector<VertexId> vertices; // component vertices; empty for a crossing
    std::optional<Point2> point;    // crossing point
    bool is_crossing = false;       // no path endpoint involved and transversal
};

struct MeetReport {
    Path first;
    Path second;
    std::vector<Meet> meets;

    int meet_count() const { return static_cast<int>(meets.size()); }
};

/// Meets of two distinct drawn paths: one meet per maximal shared subpath
/// or touch vertex, plus one per distinct proper crossing point between
/// their segments (crossing points falling onto a shared segment are
/// absorbed by that component). The caller guarantees a valid drawing.
MeetReport count_meets(const Drawing& d, const Path& p, const Path& q);

/// Thrown when an operation needs a geodetic host; carries the witness.
class NotGeodeticError : public Error {
public:
    explicit NotGeodeticError(GeodeticReport report);
    const GeodeticReport& report() const { return report_; }

private:
    GeodeticReport report_;
};

struct PhilogeodeticReport {
    int max_meets = 0;
    bool philogeodetic = false;
    std::map<int, long long> histogram;          // meet count -> number of pairs
    std::vector<std::array<Path, 2>> worst_pairs; // all pairs attaining max_meets
};

/// Evaluates count_meets over all unordered pairs of distinct unique
/// shortest paths. Pairs are pruned through a precomputed crossing index,
/// so only segments that cross anything are ever tested. Deterministic for
/// every thread count.
PhilogeodeticReport certify_philogeodetic(const Graph& g, const Drawing& d,
                                          const ShortestPathTable& table, int threads = 1);

/// Crossings of a K(s,t) drawing charged to branch vertices: a crossing on
/// segment i of [uv] (1..t+1 from u) is charged to u when i < t/2+1, to v
/// when i > t/2+1, and to both on the central segment. Both involved edges
/// contribute charges. Requires even t.
struct ChargeMap {
    std::vector<CrossingRecord> crossings;
    std::vector<std::vector<VertexId>> charged;     // per crossing, sorted branch ids
    std::map<VertexId, std::vector<int>> by_vertex; // branch id -> crossing indices
};

ChargeMap charge_crossings(const Graph& g, const Drawing& d);
ChargeMap charge_crossings(const Graph& g, const std::vector<CrossingRecord>& crossings);

/// Bipartite graph X for an anchor pair (u, v): vertices are the branch
/// edges at u and at v other than uv; (e, f) is an edge when some crossing
/// of e and f is charged to both u and v and e, f are independent.
struct BipartiteCrossingGraph {
    VertexId u = 0;
    VertexId v = 0;
    std::vector<Edge> left;  // E_u minus uv, sorted
    std::vector<Edge> right; // E_v minus uv, sorted
    std::set<std::pair<int, int>> adjacency; // (left index, right index)

    bool adjacent(int left_idx, int right_idx) const {
        return adjacency.count({left_idx, right_idx}) > 0;
    }
};

BipartiteCrossingGraph build_crossing_graph(const Graph& g, const ChargeMap& charges,
                                            VertexId u, VertexId v);

/// Four-cycle in X, as left and right index pairs, lexicographically
/// smallest; nullopt when X is C4-free.
std::optional<std::array<int, 4>> find_four_cycle(const BipartiteCrossingGraph& x);

/// Two pairs of mutually crossing edges around an anchor pair, with the
/// shortest paths between the far central-segment endpoints and their
/// re-verified meet count.
struct WitnessPair {
    VertexId u = 0;
    VertexId v = 0;
    std::array<Edge, 2> c_u;
    std::array<Edge, 2> c_v;
    VertexId x_prime = 0, y_prime = 0; // far central endpoints along c_u
    VertexId a_prime = 0, b_prime = 0; // along c_v
    Path path_u; // shortest x'-y' path, passes through u
    Path path_v; // shortest a'-b' path, passes through v
    int verified_meets = 0;            // >= 4, re-verified geometrically
};

/// Scans anchor pairs by descending mutual charge (ties by id), finds a
/// 4-cycle in the crossing graph and extracts the witness. The returned
/// pair is re-verified with count_meets; a result below four meets raises
/// Internal instead of being returned. Requires even t >= 2.
std::optional<WitnessPair> find_witness_pair(const Graph& g, const Drawing& d);

/// m^3 / (64 n^2), exact. Requires m > 4n.
Rational crossing_lemma_bound(long n, long m);

/// True iff (2k^2 + k - 1)/2 < k^3/128, exact: the crossing load forced on
/// some vertex of the order-k incidence graph exceeds what one matching of
/// crossing edges can carry, so no drawing keeps all shortest-path pairs
/// to a single meet. First holds at k = 129.
bool diameter_two_obstruction(int k);

/// Proper crossings between polylines of independent branch edges in an
/// induced drawing of K_s, counted per crossing segment pair.
long count_polyline_crossings(const PolylineDrawing& induced);

} // namespace geodesy
