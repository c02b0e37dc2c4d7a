#pragma once

// Test-only meet oracle. Computes the connected components of the
// intersection of two drawn path images purely geometrically: every
// closed segment pair intersection (points, endpoint touches and
// collinear overlaps alike) becomes an atom, and atoms sharing a point
// are merged. Deliberately independent of the combinatorial route in
// geodesy::count_meets.

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "geodesy/analysis.hpp"
#include "geodesy/drawing.hpp"
#include "geodesy/geometry.hpp"

namespace geodesy::testoracle {

struct Atom {
    bool is_point = true;
    Point2 a; // the point, or one overlap endpoint
    Point2 b; // the other overlap endpoint
};

inline bool atoms_touch(const Atom& x, const Atom& y) {
    if (x.is_point && y.is_point) return x.a == y.a;
    if (x.is_point) return on_segment_closed(x.a, y.a, y.b);
    if (y.is_point) return on_segment_closed(y.a, x.a, x.b);
    return closed_segment_meet(x.a, x.b, y.a, y.b).kind != SegmentMeet::Kind::Empty;
}

struct OracleResult {
    std::vector<std::vector<Atom>> components;

    int component_count() const { return static_cast<int>(components.size()); }

    bool component_contains(std::size_t idx, const Point2& z) const {
        for (const Atom& atom : components[idx]) {
            if (atom.is_point ? atom.a == z : on_segment_closed(z, atom.a, atom.b)) return true;
        }
        return false;
    }
};

inline std::vector<Point2> meet_sample_points(const Drawing& d, const Meet& meet) {
    if (meet.kind == MeetKind::ProperCrossing) return {*meet.point};
    std::vector<Point2> out;
    for (VertexId v : meet.vertices) out.push_back(d.at(v));
    return out;
}

inline OracleResult intersect_images(const Drawing& d, const Path& p, const Path& q) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const Point2& pa = d.at(p.vertices[i]);
        const Point2& pb = d.at(p.vertices[i + 1]);
        for (std::size_t j = 0; j + 1 < q.vertices.size(); ++j) {
            const SegmentMeet meet =
                closed_segment_meet(pa, pb, d.at(q.vertices[j]), d.at(q.vertices[j + 1]));
            if (meet.kind == SegmentMeet::Kind::Point) atoms.push_back({true, meet.p, meet.p});
            else if (meet.kind == SegmentMeet::Kind::Overlap)
                atoms.push_back({false, meet.p, meet.q});
        }
    }

    std::vector<std::size_t> parent(atoms.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms_touch(atoms[i], atoms[j])) parent[find(i)] = find(j);

    OracleResult result;
    std::vector<long> slot(atoms.size(), -1);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(result.components.size());
            result.components.emplace_back();
        }
        result.components[static_cast<std::size_t>(slot[root])].push_back(atoms[i]);
    }
    return result;
}

/// Cross-checks a MeetReport against the oracle. Empty string on success,
/// otherwise a description of the first mismatch: component counts must be
/// equal and the meets must map one-to-one onto oracle components.
inline std::string compare_with_oracle(const Drawing& d, const Path& p, const Path& q,
                                       const MeetReport& report) {
    const OracleResult oracle = intersect_images(d, p, q);
    if (report.meet_count() != oracle.component_count())
        return "meet count " + std::to_string(report.meet_count()) + " vs oracle components " +
               std::to_string(oracle.component_count());
    std::set<std::size_t> used;
    for (const Meet& meet : report.meets) {
        std::set<std::size_t> hits;
        for (const Point2& z : meet_sample_points(d, meet))
            for (std::size_t c = 0; c < oracle.components.size(); ++c)
                if (oracle.component_contains(c, z)) hits.insert(c);
        if (hits.size() != 1)
            return "a meet maps onto " + std::to_string(hits.size()) + " oracle components";
        if (!used.insert(*hits.begin()).second) return "two meets map onto one oracle component";
    }
    return {};
}

} // namespace geodesy::testoracle
