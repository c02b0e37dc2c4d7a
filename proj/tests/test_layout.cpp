#include <doctest.h>

#include <set>

#include "geodesy/analysis.hpp"
#include "geodesy/layout.hpp"
#include "geodesy/shortest_paths.hpp"

using namespace geodesy;

namespace {

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

int central_segments_on(const Graph& g, const Path& path) {
    int count = 0;
    for (const Edge& e : path.edge_list())
        if (is_central_segment(g, e)) ++count;
    return count;
}

} // namespace

TEST_CASE("validate_drawing") {
    SUBCASE("triangle at generic positions is valid") {
        const Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
        Drawing d;
        d.positions = {{0, pt(0, 0)}, {1, pt(1, 0)}, {2, pt(0, 1)}};
        const auto report = validate_drawing(g, d);
        CHECK(report.valid);
        CHECK(report.violations.empty());
    }
    SUBCASE("vertex interior to a non-incident segment") {
        const Graph g = build_graph(3, {{0, 1}, {1, 2}});
        Drawing d;
        d.positions = {{0, pt(0, 0)}, {1, pt(4, 0)}, {2, pt(2, 0)}}; // 2 inside segment 0-1
        const auto report = validate_drawing(g, d);
        REQUIRE_FALSE(report.valid);
        bool found = false;
        for (const auto& v : report.violations)
            if (v.kind == Violation::Kind::VertexOnEdge && v.vertices == std::vector<VertexId>{2})
                found = true;
        CHECK(found);
    }
    SUBCASE("collinear overlap between independent edges") {
        const Graph g = build_graph(4, {{0, 1}, {2, 3}});
        Drawing d;
        d.positions = {{0, pt(0, 0)}, {1, pt(3, 0)}, {2, pt(2, 0)}, {3, pt(5, 0)}};
        const auto report = validate_drawing(g, d);
        REQUIRE_FALSE(report.valid);
        bool found = false;
        for (const auto& v : report.violations)
            if (v.kind == Violation::Kind::CollinearOverlap) found = true;
        CHECK(found);
    }
    SUBCASE("coincident vertices") {
        const Graph g = build_graph(2, {{0, 1}});
        Drawing d;
        d.positions = {{0, pt(1, 1)}, {1, pt(1, 1)}};
        const auto report = validate_drawing(g, d);
        REQUIRE_FALSE(report.valid);
        CHECK(report.violations.front().kind == Violation::Kind::CoincidentVertices);
    }
    SUBCASE("missing position is an error, not a violation") {
        const Graph g = build_graph(2, {{0, 1}});
        Drawing d;
        d.positions = {{0, pt(0, 0)}};
        CHECK_THROWS_AS(validate_drawing(g, d), Error);
    }
    SUBCASE("three concurrent segments are allowed") {
        // three diameters of a hexagon all pass through the origin
        const Graph g = build_graph(6, {{0, 3}, {1, 4}, {2, 5}});
        Drawing d;
        d.positions = {{0, pt(2, 0)},  {1, pt(1, 2)},  {2, pt(-1, 2)},
                       {3, pt(-2, 0)}, {4, pt(-1, -2)}, {5, pt(1, -2)}};
        CHECK(validate_drawing(g, d).valid);
    }
}

TEST_CASE("clustered_convex_layout") {
    SUBCASE("odd t is rejected") {
        CHECK_THROWS_AS(clustered_convex_layout(subdivided_complete({4, 1})), Error);
    }
    SUBCASE("K(3,2) is drawn planar") {
        const Graph g = subdivided_complete({3, 2});
        const Drawing d = clustered_convex_layout(g);
        CHECK(validate_drawing(g, d).valid);
        CHECK(segment_intersections(g, d).empty());
    }
    SUBCASE("valid for all family members at test scale") {
        for (int s = 3; s <= 9; ++s)
            for (int t : {0, 2, 4}) {
                const Graph g = subdivided_complete({s, t});
                const Drawing d = clustered_convex_layout(g);
                CHECK_MESSAGE(validate_drawing(g, d).valid, "K(", s, ",", t, ") layout invalid");
            }
    }
    SUBCASE("no three branch vertices are collinear on the moment curve") {
        const Graph g = subdivided_complete({9, 2});
        const Drawing d = clustered_convex_layout(g);
        for (int a = 0; a < 9; ++a)
            for (int b = a + 1; b < 9; ++b)
                for (int c = b + 1; c < 9; ++c)
                    CHECK(orientation(d.at(a), d.at(b), d.at(c)) != 0);
    }
    SUBCASE("every crossing lies on two central segments") {
        for (int s : {5, 8})
            for (int t : {2, 4}) {
                const Graph g = subdivided_complete({s, t});
                const Drawing d = clustered_convex_layout(g);
                for (const CrossingRecord& r : segment_intersections(g, d)) {
                    CHECK(is_central_segment(g, r.first));
                    CHECK(is_central_segment(g, r.second));
                }
            }
    }
    SUBCASE("crossing count matches the convex-position count for t=0") {
        // in convex position each 4-subset of branches contributes one crossing
        const Graph g = subdivided_complete({5, 0});
        const Drawing d = clustered_convex_layout(g);
        CHECK(segment_intersections(g, d).size() == 5); // C(5,4)
    }
    SUBCASE("every shortest path contains at most two central segments") {
        for (const KstParams params : {KstParams{5, 2}, KstParams{4, 4}}) {
            const Graph g = subdivided_complete(params);
            const auto table = all_pairs_shortest(g);
            for (VertexId u = 0; u < g.n; ++u)
                for (VertexId v = u + 1; v < g.n; ++v) {
                    const Path p = unique_shortest_path(table, u, v);
                    CHECK(central_segments_on(g, p) <= 2);
                }
        }
    }
}

TEST_CASE("central_segment") {
    SUBCASE("t=2: the segment between the two subdivision vertices") {
        const Graph g = subdivided_complete({4, 2});
        const SegmentRef ref = central_segment(g, Edge(0, 1));
        CHECK(ref.central);
        CHECK(ref.edge == Edge(kst::subdivision_vertex(g, Edge(0, 1), 1),
                               kst::subdivision_vertex(g, Edge(0, 1), 2)));
        CHECK(is_central_segment(g, ref.edge));
        CHECK_FALSE(is_central_segment(g, Edge(0, kst::subdivision_vertex(g, Edge(0, 1), 1))));
    }
    SUBCASE("t=4: between positions 2 and 3") {
        const Graph g = subdivided_complete({3, 4});
        const SegmentRef ref = central_segment(g, Edge(1, 2));
        CHECK(ref.edge == Edge(kst::subdivision_vertex(g, Edge(1, 2), 2),
                               kst::subdivision_vertex(g, Edge(1, 2), 3)));
    }
    SUBCASE("t=0: the edge itself is central") {
        const Graph g = subdivided_complete({4, 0});
        const SegmentRef ref = central_segment(g, Edge(2, 3));
        CHECK(ref.edge == Edge(2, 3));
        CHECK(ref.central);
        CHECK(is_central_segment(g, Edge(2, 3)));
    }
    SUBCASE("odd t has no single central segment") {
        const Graph g = subdivided_complete({4, 1});
        CHECK_THROWS_AS(central_segment(g, Edge(0, 1)), Error);
    }
    SUBCASE("exactly one central segment per subdivided edge") {
        const Graph g = subdivided_complete({5, 2});
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) {
                int centrals = 0;
                for (const Edge& seg : kst::edge_path(g, Edge(u, v)).edge_list())
                    if (is_central_segment(g, seg)) ++centrals;
                CHECK(centrals == 1);
            }
    }
}

TEST_CASE("induced_complete_drawing") {
    SUBCASE("K(8,2): 28 polylines of 3 segments each") {
        const Graph g = subdivided_complete({8, 2});
        const Drawing d = clustered_convex_layout(g);
        const PolylineDrawing induced = induced_complete_drawing(g, d);
        CHECK(induced.branch_positions.size() == 8);
        CHECK(induced.polylines.size() == 28);
        for (const auto& [edge, polyline] : induced.polylines) {
            CHECK(polyline.size() == 4); // t + 2 points, t + 1 segments
            CHECK(polyline.front() == d.at(edge.a));
            CHECK(polyline.back() == d.at(edge.b));
        }
    }
    SUBCASE("K(s,0) induces the straight-line drawing of K_s") {
        const Graph g = subdivided_complete({5, 0});
        const Drawing d = clustered_convex_layout(g);
        const PolylineDrawing induced = induced_complete_drawing(g, d);
        for (const auto& [edge, polyline] : induced.polylines) CHECK(polyline.size() == 2);
    }
    SUBCASE("role metadata is required") {
        const Graph plain = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
        Drawing d;
        d.positions = {{0, pt(0, 0)}, {1, pt(1, 0)}, {2, pt(0, 1)}};
        CHECK_THROWS_AS(induced_complete_drawing(plain, d), Error);
    }
}
