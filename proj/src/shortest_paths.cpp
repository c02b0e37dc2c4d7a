#include "geodesy/shortest_paths.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace geodesy {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Single-source BFS layering with multiplicity accumulation.
void bfs_source(const Graph& g, VertexId s, std::vector<int>& dist,
                std::vector<BigInt>& count, std::vector<std::vector<VertexId>>& preds) {
    dist.assign(g.n, kUnreached);
    count.assign(g.n, BigInt(0));
    preds.assign(g.n, {});
    dist[s] = 0;
    count[s] = 1;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.adj[v]) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if (dist[w] == dist[v] + 1) {
                count[w] += count[v];
                preds[w].push_back(v); // adj is sorted, so preds stays sorted
            }
        }
    }
}

// Depth-first enumeration of shortest s->v paths following predecessor sets,
// emitted in lexicographic order, stopping after `limit` paths.
void paths_via_preds(const ShortestPathTable& table, VertexId s, VertexId v,
                     std::size_t limit, std::vector<Path>& out) {
    // preds walk from v yields reversed paths; enumerate forward instead:
    // succ[w] lists x with w in preds[s][x], i.e. the shortest-path DAG edges.
    std::vector<std::vector<VertexId>> succ(table.n);
    for (VertexId x = 0; x < table.n; ++x)
        for (VertexId w : table.preds[s][x]) succ[w].push_back(x);
    for (auto& list : succ) std::sort(list.begin(), list.end());

    // restrict the walk to ancestors of v in the DAG
    std::vector<char> on_dag(table.n, 0);
    std::deque<VertexId> back{v};
    on_dag[v] = 1;
    while (!back.empty()) {
        VertexId x = back.front();
        back.pop_front();
        for (VertexId w : table.preds[s][x])
            if (!on_dag[w]) {
                on_dag[w] = 1;
                back.push_back(w);
            }
    }

    std::vector<VertexId> cur{s};
    std::function<void(VertexId)> walk = [&](VertexId w) {
        if (out.size() >= limit) return;
        if (w == v) {
            out.push_back(Path{cur});
            return;
        }
        for (VertexId x : succ[w]) {
            if (!on_dag[x]) continue;
            cur.push_back(x);
            walk(x);
            cur.pop_back();
            if (out.size() >= limit) return;
        }
    };
    walk(s);
}

} // namespace

int ShortestPathTable::diameter() const {
    int d = 0;
    for (const auto& row : dist)
        for (int x : row) d = std::max(d, x);
    return d;
}

ShortestPathTable all_pairs_shortest(const Graph& g) {
    if (g.n == 0) throw Error(ErrorCode::InvalidGraph, "empty graph");
    ShortestPathTable table;
    table.n = g.n;
    table.dist.resize(g.n);
    table.count.resize(g.n);
    table.preds.resize(g.n);
    for (VertexId s = 0; s < g.n; ++s)
        bfs_source(g, s, table.dist[s], table.count[s], table.preds[s]);

    for (VertexId v = 0; v < g.n; ++v)
        if (table.dist[0][v] == kUnreached)
            throw Error(ErrorCode::Disconnected,
                        "graph is disconnected: no path between 0 and " + std::to_string(v));
    return table;
}

GeodeticReport is_geodetic(const Graph& g) { return is_geodetic(g, all_pairs_shortest(g)); }

GeodeticReport is_geodetic(const Graph& g, const ShortestPathTable& table) {
    (void)g;
    GeodeticReport report;
    report.diameter = table.diameter();
    for (VertexId u = 0; u < table.n; ++u) {
        for (VertexId v = u + 1; v < table.n; ++v) {
            if (table.count[u][v] == 1) continue;
            std::vector<Path> two;
            paths_via_preds(table, u, v, 2, two);
            report.is_geodetic = false;
            report.witness = GeodeticWitness{u, v, two[0], two[1]};
            return report;
        }
    }
    report.is_geodetic = true;
    return report;
}

AmbiguousPathError::AmbiguousPathError(VertexId u, VertexId v, Path first, Path second)
    : Error(ErrorCode::Ambiguous, "shortest path between " + std::to_string(u) + " and " +
                                      std::to_string(v) + " is not unique"),
      first_(std::move(first)),
      second_(std::move(second)) {}

Path unique_shortest_path(const ShortestPathTable& table, VertexId u, VertexId v) {
    if (u < 0 || u >= table.n || v < 0 || v >= table.n)
        throw Error(ErrorCode::Param, "vertex id out of range");
    if (table.count[u][v] != 1) {
        std::vector<Path> two;
        paths_via_preds(table, u, v, 2, two);
        throw AmbiguousPathError(u, v, two[0], two[1]);
    }
    // count == 1 forces a unique predecessor chain from v back to u
    std::vector<VertexId> rev{v};
    VertexId cur = v;
    while (cur != u) {
        cur = table.preds[u][cur].front();
        rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return Path{rev};
}

std::optional<Path> shared_subpath(const Path& p, const Path& q) {
    std::vector<int> pos_in_q(q.vertices.size());
    std::vector<VertexId> q_sorted = q.vertices;
    std::sort(q_sorted.begin(), q_sorted.end());

    // indices of p's vertices that also lie on q
    std::vector<int> hits;
    for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i)
        if (std::binary_search(q_sorted.begin(), q_sorted.end(), p.vertices[i]))
            hits.push_back(i);
    if (hits.empty()) return std::nullopt;

    const auto contract_error = [&] {
        return Error(ErrorCode::Contract,
                     "path intersection is not a contiguous subpath; host is not geodetic "
                     "or inputs are not shortest paths");
    };

    for (std::size_t i = 1; i < hits.size(); ++i)
        if (hits[i] != hits[i - 1] + 1) throw contract_error();

    Path shared;
    for (int i : hits) shared.vertices.push_back(p.vertices[i]);

    // the same vertices must form a contiguous run of q, in order or reversed
    std::vector<int> q_hits;
    std::vector<VertexId> shared_sorted = shared.vertices;
    std::sort(shared_sorted.begin(), shared_sorted.end());
    for (int j = 0; j < static_cast<int>(q.vertices.size()); ++j)
        if (std::binary_search(shared_sorted.begin(), shared_sorted.end(), q.vertices[j]))
            q_hits.push_back(j);
    if (q_hits.size() != shared.vertices.size()) throw contract_error();
    for (std::size_t j = 1; j < q_hits.size(); ++j)
        if (q_hits[j] != q_hits[j - 1] + 1) throw contract_error();
    std::vector<VertexId> along_q;
    for (int j : q_hits) along_q.push_back(q.vertices[j]);
    std::vector<VertexId> rev = along_q;
    std::reverse(rev.begin(), rev.end());
    if (along_q != shared.vertices && rev != shared.vertices) throw contract_error();

    return shared;
}

std::vector<Path> enumerate_shortest_paths(const Graph& g, VertexId u, VertexId v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw Error(ErrorCode::Param, "vertex id out of range");

    // Independent of all_pairs_shortest: two plain BFS distance sweeps, then
    // depth-first extension of prefixes that stay on some shortest u-v path.
    const auto bfs_dist = [&](VertexId s) {
        std::vector<int> d(g.n, kUnreached);
        d[s] = 0;
        std::deque<VertexId> queue{s};
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            for (VertexId w : g.adj[x])
                if (d[w] == kUnreached) {
                    d[w] = d[x] + 1;
                    queue.push_back(w);
                }
        }
        return d;
    };
    const std::vector<int> du = bfs_dist(u);
    const std::vector<int> dv = bfs_dist(v);
    if (du[v] == kUnreached)
        throw Error(ErrorCode::Disconnected,
                    "graph is disconnected: no path between " + std::to_string(u) + " and " +
                        std::to_string(v));

    const int total = du[v];
    std::vector<Path> out;
    std::vector<VertexId> cur{u};
    std::function<void(VertexId)> extend = [&](VertexId w) {
        if (w == v) {
            out.push_back(Path{cur});
            return;
        }
        for (VertexId x : g.adj[w]) {
            if (du[x] != du[w] + 1) continue;
            if (du[x] + dv[x] != total) continue;
            cur.push_back(x);
            extend(x);
            cur.pop_back();
        }
    };
    extend(u);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace geodesy
