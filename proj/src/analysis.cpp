#include "geodesy/analysis.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace geodesy {

namespace {

struct EdgePairHash {
    std::size_t operator()(const std::pair<Edge, Edge>& p) const {
        const auto mix = [](std::size_t h, int v) {
            return h * 1000003u + static_cast<std::size_t>(v) + 0x9e3779b9u;
        };
        std::size_t h = 0;
        h = mix(h, p.first.a);
        h = mix(h, p.first.b);
        h = mix(h, p.second.a);
        h = mix(h, p.second.b);
        return h;
    }
};

// crossing point between two specific edges, keyed with first < second
using CrossingIndex =
    std::unordered_map<std::pair<Edge, Edge>, Point2, EdgePairHash>;

struct Germ {
    int owner = 0; // 0 = first path, 1 = second path
    Vec2 dir;
};

bool owners_alternate(const std::vector<Germ>& germs) {
    if (germs.size() != 4) return false;
    return germs[0].owner != germs[1].owner && germs[1].owner != germs[2].owner;
}

// Positions of each vertex inside a path, for O(1) neighbor lookups.
std::unordered_map<VertexId, int> index_of(const Path& p) {
    std::unordered_map<VertexId, int> idx;
    idx.reserve(p.vertices.size());
    for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) idx[p.vertices[i]] = i;
    return idx;
}

// Assembles the meet list from shared combinatorics plus a list of crossing
// points between the two paths' segments. `crossings` may contain duplicate
// points (concurrent segments); they are merged here.
std::vector<Meet> assemble_meets(const Drawing& d, const Path& p, const Path& q,
                                 std::vector<Point2> crossings) {
    const auto p_idx = index_of(p);
    const auto q_idx = index_of(q);

    std::set<Edge> q_edges;
    for (const Edge& e : q.edge_list()) q_edges.insert(e);
    std::vector<Edge> shared_edges;
    for (const Edge& e : p.edge_list())
        if (q_edges.count(e)) shared_edges.push_back(e);

    // components of the shared-vertex / shared-edge graph, walked along p;
    // a connected union of shared edges is a contiguous subpath of both
    const int plen = static_cast<int>(p.vertices.size());
    std::vector<char> shared_vertex(plen, 0);
    for (int i = 0; i < plen; ++i)
        if (q_idx.count(p.vertices[i])) shared_vertex[i] = 1;
    std::set<Edge> shared_set(shared_edges.begin(), shared_edges.end());

    std::vector<std::pair<int, int>> components; // [first, last] position ranges in p
    for (int i = 0; i < plen; ++i) {
        if (!shared_vertex[i]) continue;
        int j = i;
        while (j + 1 < plen && shared_vertex[j + 1] &&
               shared_set.count(Edge(p.vertices[j], p.vertices[j + 1])))
            ++j;
        components.emplace_back(i, j);
        i = j;
    }

    const auto endpoint_inside = [&](int lo, int hi) {
        if (lo == 0 || hi == plen - 1) return true;
        for (int i = lo; i <= hi; ++i) {
            const VertexId w = p.vertices[i];
            if (w == q.front() || w == q.back()) return true;
        }
        return false;
    };

    const auto germ_sort_ccw = [](std::vector<Germ>& germs) {
        std::sort(germs.begin(), germs.end(),
                  [](const Germ& a, const Germ& b) { return ccw_direction_less(a.dir, b.dir); });
    };

    std::vector<Meet> meets;

    for (const auto& [lo, hi] : components) {
        Meet meet;
        for (int i = lo; i <= hi; ++i) meet.vertices.push_back(p.vertices[i]);
        if (meet.vertices.size() == 1) {
            meet.kind = MeetKind::VertexTouch;
            const VertexId w = meet.vertices.front();
            if (!endpoint_inside(lo, hi)) {
                const int pi = p_idx.at(w);
                const int qi = q_idx.at(w);
                std::vector<Germ> germs;
                const Point2& at = d.at(w);
                germs.push_back({0, d.at(p.vertices[pi - 1]) - at});
                germs.push_back({0, d.at(p.vertices[pi + 1]) - at});
                germs.push_back({1, d.at(q.vertices[qi - 1]) - at});
                germs.push_back({1, d.at(q.vertices[qi + 1]) - at});
                germ_sort_ccw(germs);
                meet.is_crossing = owners_alternate(germs);
            }
        } else {
            meet.kind = MeetKind::SharedSubpath;
            if (!endpoint_inside(lo, hi)) {
                // contract the component and order the four outgoing germs
                // around it: germs at the far end first (clockwise from the
                // inward direction), then germs at the near end
                const VertexId va = p.vertices[lo];
                const VertexId vb = p.vertices[hi];
                const Point2& pa = d.at(va);
                const Point2& pb = d.at(vb);
                const Vec2 in_a = d.at(p.vertices[lo + 1]) - pa;
                const Vec2 in_b = d.at(p.vertices[hi - 1]) - pb;

                const auto q_out_dir = [&](VertexId w) {
                    const int qi = q_idx.at(w);
                    const auto in_comp = [&](int idx) {
                        if (idx < 0 || idx >= static_cast<int>(q.vertices.size())) return false;
                        const auto it = p_idx.find(q.vertices[idx]);
                        return it != p_idx.end() && it->second >= lo && it->second <= hi;
                    };
                    const int out_idx = in_comp(qi - 1) ? qi + 1 : qi - 1;
                    return d.at(q.vertices[out_idx]) - d.at(w);
                };

                std::vector<Germ> at_b{{0, d.at(p.vertices[hi + 1]) - pb}, {1, q_out_dir(vb)}};
                std::vector<Germ> at_a{{0, d.at(p.vertices[lo - 1]) - pa}, {1, q_out_dir(va)}};
                if (cw_from_reference_less(in_b, at_b[1].dir, at_b[0].dir))
                    std::swap(at_b[0], at_b[1]);
                if (cw_from_reference_less(in_a, at_a[1].dir, at_a[0].dir))
                    std::swap(at_a[0], at_a[1]);
                std::vector<Germ> germs{at_b[0], at_b[1], at_a[0], at_a[1]};
                meet.is_crossing = owners_alternate(germs);
            }
        }
        meets.push_back(std::move(meet));
    }

    // merge duplicate crossing points, drop points absorbed by a shared segment
    std::sort(crossings.begin(), crossings.end());
    crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
    for (const Point2& z : crossings) {
        bool absorbed = false;
        for (const Edge& e : shared_edges)
            if (on_segment_closed(z, d.at(e.a), d.at(e.b))) {
                absorbed = true;
                break;
            }
        if (absorbed) continue;
        Meet meet;
        meet.kind = MeetKind::ProperCrossing;
        meet.point = z;
        meet.is_crossing = true;
        meets.push_back(std::move(meet));
    }

    // canonical component orientation, then a canonical order over the
    // meets, so that reports are symmetric in the path arguments
    for (Meet& meet : meets)
        if (meet.vertices.size() > 1 && meet.vertices.front() > meet.vertices.back())
            std::reverse(meet.vertices.begin(), meet.vertices.end());
    std::sort(meets.begin(), meets.end(), [](const Meet& a, const Meet& b) {
        const int ka = a.kind == MeetKind::ProperCrossing ? 1 : 0;
        const int kb = b.kind == MeetKind::ProperCrossing ? 1 : 0;
        if (ka != kb) return ka < kb;
        if (ka == 0) return a.vertices < b.vertices;
        return *a.point < *b.point;
    });
    return meets;
}

} // namespace

std::vector<CrossingRecord> segment_intersections(const Graph& g, const Drawing& d) {
    const ValidityReport validity = validate_drawing(g, d);
    if (!validity.valid)
        throw Error(ErrorCode::InvalidDrawing,
                    "drawing fails validation with " +
                        std::to_string(validity.violations.size()) + " violation(s)");

    std::vector<CrossingRecord> records;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        const Point2& ea = d.at(e.a);
        const Point2& eb = d.at(e.b);
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
            const Edge& f = g.edges[j];
            if (f.a == e.a || f.a == e.b || f.b == e.a || f.b == e.b) continue;
            const auto hit = proper_crossing(ea, eb, d.at(f.a), d.at(f.b));
            if (!hit) continue;
            records.push_back({e, f, hit->point, hit->t_first, hit->t_second});
        }
    }
    return records; // edge enumeration order is already (first, second) sorted
}

MeetReport count_meets(const Drawing& d, const Path& p, const Path& q) {
    if (p == q) throw Error(ErrorCode::Param, "count_meets needs two distinct paths");

    std::vector<Point2> crossings;
    const auto p_edges = p.edge_list();
    const auto q_edges = q.edge_list();
    for (const Edge& e : p_edges) {
        const Point2& ea = d.at(e.a);
        const Point2& eb = d.at(e.b);
        for (const Edge& f : q_edges) {
            if (e == f) continue;
            const auto hit = proper_crossing(ea, eb, d.at(f.a), d.at(f.b));
            if (hit) crossings.push_back(hit->point);
        }
    }

    MeetReport report;
    report.first = p;
    report.second = q;
    report.meets = assemble_meets(d, p, q, std::move(crossings));
    return report;
}

NotGeodeticError::NotGeodeticError(GeodeticReport report)
    : Error(ErrorCode::NotGeodetic,
            report.witness
                ? "graph is not geodetic: vertices " + std::to_string(report.witness->u) +
                      " and " + std::to_string(report.witness->v) +
                      " have multiple shortest paths"
                : "graph is not geodetic"),
      report_(std::move(report)) {}

namespace {

// Precomputed per-path data for the pairwise sweep: vertex bitmask for the
// disjointness test and the subset of edges that cross anything at all.
struct PathInfo {
    Path path;
    std::vector<Edge> edges;
    std::vector<Edge> crossing_edges;
    std::vector<std::uint64_t> mask;
};

bool masks_intersect(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

MeetReport indexed_meets(const Drawing& d, const CrossingIndex& index, const PathInfo& pi,
                         const PathInfo& qi) {
    std::vector<Point2> crossings;
    for (const Edge& e : pi.crossing_edges)
        for (const Edge& f : qi.crossing_edges) {
            if (e == f) continue;
            const auto it = index.find(e < f ? std::make_pair(e, f) : std::make_pair(f, e));
            if (it != index.end()) crossings.push_back(it->second);
        }
    MeetReport report;
    report.first = pi.path;
    report.second = qi.path;
    report.meets = assemble_meets(d, pi.path, qi.path, std::move(crossings));
    return report;
}

} // namespace

PhilogeodeticReport certify_philogeodetic(const Graph& g, const Drawing& d,
                                          const ShortestPathTable& table, int threads) {
    for (VertexId u = 0; u < table.n; ++u)
        for (VertexId v = u + 1; v < table.n; ++v)
            if (table.count[u][v] != 1) throw NotGeodeticError(is_geodetic(g, table));

    const std::vector<CrossingRecord> records = segment_intersections(g, d); // validates

    CrossingIndex index;
    std::set<Edge> crossing_edge_set;
    for (const CrossingRecord& r : records) {
        index.emplace(std::make_pair(r.first, r.second), r.point);
        crossing_edge_set.insert(r.first);
        crossing_edge_set.insert(r.second);
    }

    const std::size_t words = (static_cast<std::size_t>(g.n) + 63) / 64;
    std::vector<PathInfo> paths;
    paths.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
    for (VertexId u = 0; u < g.n; ++u)
        for (VertexId v = u + 1; v < g.n; ++v) {
            PathInfo info;
            info.path = unique_shortest_path(table, u, v);
            info.edges = info.path.edge_list();
            info.mask.assign(words, 0);
            for (VertexId w : info.path.vertices)
                info.mask[static_cast<std::size_t>(w) / 64] |= std::uint64_t(1) << (w % 64);
            for (const Edge& e : info.edges)
                if (crossing_edge_set.count(e)) info.crossing_edges.push_back(e);
            paths.push_back(std::move(info));
        }

    const long long path_count = static_cast<long long>(paths.size());
    const long long pair_count = path_count * (path_count - 1) / 2;

    struct ChunkResult {
        std::map<int, long long> histogram;
        int max_meets = 0;
        std::vector<std::pair<int, int>> worst; // path index pairs at chunk max
    };

    const int workers = std::max(1, threads);
    std::vector<ChunkResult> results(workers);

    const auto run_chunk = [&](long long begin, long long end, ChunkResult& out) {
        // linear pair index k -> (i, j), i < j
        long long k = 0;
        int i = 0;
        long long row = path_count - 1;
        while (i < path_count && k + row <= begin) {
            k += row;
            ++i;
            row = path_count - 1 - i;
        }
        int j = static_cast<int>(begin - k) + i + 1;
        for (long long cur = begin; cur < end; ++cur) {
            const PathInfo& pi = paths[i];
            const PathInfo& qi = paths[j];

            int meets;
            const bool disjoint = !masks_intersect(pi.mask, qi.mask);
            if (disjoint && (pi.crossing_edges.empty() || qi.crossing_edges.empty())) {
                meets = 0;
            } else {
                meets = indexed_meets(d, index, pi, qi).meet_count();
            }

            ++out.histogram[meets];
            if (meets > out.max_meets) {
                out.max_meets = meets;
                out.worst.clear();
            }
            if (meets == out.max_meets) out.worst.emplace_back(i, j);

            ++j;
            if (j >= path_count) {
                ++i;
                j = i + 1;
            }
        }
    };

    if (workers == 1) {
        run_chunk(0, pair_count, results[0]);
    } else {
        std::vector<std::thread> pool;
        const long long step = (pair_count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long long begin = std::min<long long>(pair_count, w * step);
            const long long end = std::min<long long>(pair_count, begin + step);
            pool.emplace_back(run_chunk, begin, end, std::ref(results[w]));
        }
        for (auto& th : pool) th.join();
    }

    PhilogeodeticReport report;
    for (const ChunkResult& r : results) {
        for (const auto& [meets, pairs] : r.histogram) report.histogram[meets] += pairs;
        report.max_meets = std::max(report.max_meets, r.max_meets);
    }
    std::vector<std::pair<int, int>> worst;
    for (const ChunkResult& r : results)
        if (r.max_meets == report.max_meets)
            worst.insert(worst.end(), r.worst.begin(), r.worst.end());
    std::sort(worst.begin(), worst.end());
    for (const auto& [i, j] : worst)
        report.worst_pairs.push_back({paths[i].path, paths[j].path});
    report.philogeodetic = report.max_meets <= 1;
    return report;
}

ChargeMap charge_crossings(const Graph& g, const Drawing& d) {
    return charge_crossings(g, segment_intersections(g, d));
}

ChargeMap charge_crossings(const Graph& g, const std::vector<CrossingRecord>& crossings) {
    const KstParams params = kst::params_of(g);
    if (params.t % 2 != 0)
        throw Error(ErrorCode::Param, "charging requires an even subdivision count");
    const int central = params.t / 2 + 1;

    ChargeMap map;
    map.crossings = crossings;
    for (int idx = 0; idx < static_cast<int>(crossings.size()); ++idx) {
        const CrossingRecord& record = crossings[idx];
        std::set<VertexId> charged;
        for (const Edge& seg : {record.first, record.second}) {
            const kst::SegmentLocation loc = kst::locate_segment(g, seg);
            if (loc.index < central) charged.insert(loc.branch_edge.a);
            else if (loc.index > central) charged.insert(loc.branch_edge.b);
            else {
                charged.insert(loc.branch_edge.a);
                charged.insert(loc.branch_edge.b);
            }
        }
        map.charged.emplace_back(charged.begin(), charged.end());
        for (VertexId w : charged) map.by_vertex[w].push_back(idx);
    }
    return map;
}

BipartiteCrossingGraph build_crossing_graph(const Graph& g, const ChargeMap& charges,
                                            VertexId u, VertexId v) {
    if (u == v) throw Error(ErrorCode::Param, "anchor vertices must be distinct");
    for (VertexId w : {u, v})
        if (w < 0 || w >= g.n || g.roles[w].kind != RoleKind::Branch)
            throw Error(ErrorCode::Param,
                        "anchor " + std::to_string(w) + " is not a branch vertex");

    const int s = kst::branch_count(g);
    BipartiteCrossingGraph x;
    x.u = u;
    x.v = v;
    for (int w = 0; w < s; ++w) {
        if (w != u && w != v) {
            x.left.emplace_back(u, w);
            x.right.emplace_back(v, w);
        }
    }
    std::sort(x.left.begin(), x.left.end());
    std::sort(x.right.begin(), x.right.end());

    const auto find_in = [](const std::vector<Edge>& list, const Edge& e) {
        const auto it = std::lower_bound(list.begin(), list.end(), e);
        return it != list.end() && *it == e ? static_cast<int>(it - list.begin()) : -1;
    };

    for (std::size_t idx = 0; idx < charges.crossings.size(); ++idx) {
        const auto& charged = charges.charged[idx];
        if (!std::binary_search(charged.begin(), charged.end(), u) ||
            !std::binary_search(charged.begin(), charged.end(), v))
            continue;
        const CrossingRecord& record = charges.crossings[idx];
        const Edge pe = kst::locate_segment(g, record.first).branch_edge;
        const Edge qe = kst::locate_segment(g, record.second).branch_edge;
        if (pe.a == qe.a || pe.a == qe.b || pe.b == qe.a || pe.b == qe.b)
            continue; // only independent edge pairs enter X
        for (const auto& [e, f] : {std::make_pair(pe, qe), std::make_pair(qe, pe)}) {
            const int li = find_in(x.left, e);
            const int ri = find_in(x.right, f);
            if (li >= 0 && ri >= 0) x.adjacency.insert({li, ri});
        }
    }
    return x;
}

std::optional<std::array<int, 4>> find_four_cycle(const BipartiteCrossingGraph& x) {
    const int rights = static_cast<int>(x.right.size());
    const int lefts = static_cast<int>(x.left.size());
    for (int j1 = 0; j1 < rights; ++j1)
        for (int j2 = j1 + 1; j2 < rights; ++j2) {
            int first = -1;
            for (int i = 0; i < lefts; ++i) {
                if (!x.adjacent(i, j1) || !x.adjacent(i, j2)) continue;
                if (first < 0) first = i;
                else return std::array<int, 4>{first, i, j1, j2};
            }
        }
    return std::nullopt;
}

std::optional<WitnessPair> find_witness_pair(const Graph& g, const Drawing& d) {
    const KstParams params = kst::params_of(g);
    if (params.t < 2 || params.t % 2 != 0)
        throw Error(ErrorCode::Param, "witness extraction requires even t >= 2");

    const ChargeMap charges = charge_crossings(g, d);

    std::map<std::pair<VertexId, VertexId>, int> mutual;
    for (const auto& charged : charges.charged)
        for (std::size_t i = 0; i < charged.size(); ++i)
            for (std::size_t j = i + 1; j < charged.size(); ++j)
                ++mutual[{charged[i], charged[j]}];

    std::vector<std::pair<int, std::pair<VertexId, VertexId>>> anchors;
    for (const auto& [pair, charge] : mutual) anchors.push_back({charge, pair});
    std::sort(anchors.begin(), anchors.end(), [](const auto& a, const auto& b) {
        return a.first > b.first || (a.first == b.first && a.second < b.second);
    });

    for (const auto& [charge, anchor] : anchors) {
        const BipartiteCrossingGraph x = build_crossing_graph(g, charges, anchor.first, anchor.second);
        const auto cycle = find_four_cycle(x);
        if (!cycle) continue;

        WitnessPair witness;
        witness.u = anchor.first;
        witness.v = anchor.second;
        witness.c_u = {x.left[(*cycle)[0]], x.left[(*cycle)[1]]};
        witness.c_v = {x.right[(*cycle)[2]], x.right[(*cycle)[3]]};
        witness.x_prime = kst::far_central_endpoint(g, witness.c_u[0], witness.u);
        witness.y_prime = kst::far_central_endpoint(g, witness.c_u[1], witness.u);
        witness.a_prime = kst::far_central_endpoint(g, witness.c_v[0], witness.v);
        witness.b_prime = kst::far_central_endpoint(g, witness.c_v[1], witness.v);

        const ShortestPathTable table = all_pairs_shortest(g);
        witness.path_u = unique_shortest_path(table, witness.x_prime, witness.y_prime);
        witness.path_v = unique_shortest_path(table, witness.a_prime, witness.b_prime);

        const auto passes_through = [](const Path& path, VertexId w) {
            return std::find(path.vertices.begin(), path.vertices.end(), w) !=
                   path.vertices.end();
        };
        if (witness.path_u.length() != params.t + 2 || !passes_through(witness.path_u, witness.u) ||
            witness.path_v.length() != params.t + 2 || !passes_through(witness.path_v, witness.v))
            throw Error(ErrorCode::Internal, "witness paths violate the length-through-anchor form");

        witness.verified_meets = count_meets(d, witness.path_u, witness.path_v).meet_count();
        if (witness.verified_meets < 4)
            throw Error(ErrorCode::Internal,
                        "witness re-verification found only " +
                            std::to_string(witness.verified_meets) + " meets");
        return witness;
    }
    return std::nullopt;
}

Rational crossing_lemma_bound(long n, long m) {
    if (m <= 4 * n)
        throw Error(ErrorCode::Param,
                    "crossing lemma requires m > 4n, got m = " + std::to_string(m) +
                        ", 4n = " + std::to_string(4 * n));
    const Rational mm(m);
    const Rational nn(n);
    return mm * mm * mm / (64 * nn * nn);
}

bool diameter_two_obstruction(int k) {
    if (k < 2) throw Error(ErrorCode::Param, "plane order must be at least 2");
    const BigInt kk(k);
    // (2k^2 + k - 1)/2 < k^3/128  <=>  64*(2k^2 + k - 1) < k^3
    return 64 * (2 * kk * kk + kk - 1) < kk * kk * kk;
}

long count_polyline_crossings(const PolylineDrawing& induced) {
    long total = 0;
    for (auto it = induced.polylines.begin(); it != induced.polylines.end(); ++it) {
        for (auto jt = std::next(it); jt != induced.polylines.end(); ++jt) {
            const Edge& e = it->first;
            const Edge& f = jt->first;
            if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
            const auto& pa = it->second;
            const auto& pb = jt->second;
            for (std::size_t i = 0; i + 1 < pa.size(); ++i)
                for (std::size_t j = 0; j + 1 < pb.size(); ++j)
                    if (proper_crossing(pa[i], pa[i + 1], pb[j], pb[j + 1])) ++total;
        }
    }
    return total;
}

} // namespace geodesy
