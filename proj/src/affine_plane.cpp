#include "geodesy/affine_plane.hpp"

#include <algorithm>
#include <string>

namespace geodesy {

namespace {

void verify_axioms(const AffinePlane& plane) {
    const int k = plane.order;
    const auto fail = [](const std::string& what) {
        throw Error(ErrorCode::Internal, "affine plane axiom check failed: " + what);
    };

    // (i) line sizes
    for (const auto& line : plane.lines)
        if (static_cast<int>(line.size()) != k) fail("line with wrong point count");

    // every point on exactly k+1 lines
    for (const auto& lines : plane.lines_of_point)
        if (static_cast<int>(lines.size()) != k + 1) fail("point with wrong line count");

    // parallel classes partition the points
    if (static_cast<int>(plane.classes.size()) != k + 1) fail("wrong class count");
    for (const auto& cls : plane.classes) {
        if (static_cast<int>(cls.size()) != k) fail("class with wrong line count");
        std::vector<char> covered(plane.point_count(), 0);
        for (int line_id : cls)
            for (int pt : plane.lines[line_id]) {
                if (covered[pt]) fail("parallel class covers a point twice");
                covered[pt] = 1;
            }
        if (std::count(covered.begin(), covered.end(), char(1)) != plane.point_count())
            fail("parallel class misses a point");
    }

    // (ii) two lines of the same class are disjoint, of different classes meet
    // exactly once. Together with the covered-pair count below this gives:
    // every point pair lies on exactly one common line.
    for (int i = 0; i < plane.line_count(); ++i) {
        for (int j = i + 1; j < plane.line_count(); ++j) {
            int common = 0;
            const auto& li = plane.lines[i];
            const auto& lj = plane.lines[j];
            std::size_t a = 0, b = 0;
            while (a < li.size() && b < lj.size()) {
                if (li[a] == lj[b]) ++common, ++a, ++b;
                else if (li[a] < lj[b]) ++a;
                else ++b;
            }
            const bool parallel = plane.line_class[i] == plane.line_class[j];
            if (parallel && common != 0) fail("parallel lines share a point");
            if (!parallel && common != 1) fail("non-parallel lines do not meet exactly once");
        }
    }
    // each line covers C(k,2) pairs, no pair twice (no two lines share two
    // points), and the total matches C(k^2, 2) exactly:
    const long pair_total = static_cast<long>(plane.line_count()) * k * (k - 1) / 2;
    const long all_pairs = static_cast<long>(plane.point_count()) * (plane.point_count() - 1) / 2;
    if (pair_total != all_pairs) fail("pair coverage count off");

    // (iii) a non-collinear triple: two points of line 0 plus any point off it
    const auto& first = plane.lines[0];
    bool found_off = false;
    for (int pt = 0; pt < plane.point_count() && !found_off; ++pt)
        if (!std::binary_search(first.begin(), first.end(), pt)) found_off = true;
    if (!found_off) fail("all points collinear");

    // (iv) follows from the class partition: for any line l and point p off l,
    // the line of l's class through p is disjoint from l. Partition already
    // checked above; nothing further to verify.
}

} // namespace

bool AffinePlane::incident(int point_id, int line_id) const {
    const auto& line = lines[line_id];
    return std::binary_search(line.begin(), line.end(), point_id);
}

AffinePlane affine_plane(const FiniteField& field) {
    const int k = field.order();
    if (k > 64)
        throw Error(ErrorCode::Param,
                    "plane order " + std::to_string(k) +
                        " exceeds the exhaustive-verification limit of 64");

    AffinePlane plane;
    plane.order = k;
    const auto point_id = [&](int x, int y) { return x * k + y; };

    // slope classes first, in element order; the vertical class last
    for (int slope = 0; slope < k; ++slope) {
        std::vector<int> cls;
        for (int intercept = 0; intercept < k; ++intercept) {
            std::vector<int> line;
            for (int x = 0; x < k; ++x)
                line.push_back(point_id(x, field.add(field.mul(slope, x), intercept)));
            std::sort(line.begin(), line.end());
            cls.push_back(static_cast<int>(plane.lines.size()));
            plane.lines.push_back(std::move(line));
            plane.line_class.push_back(slope);
        }
        plane.classes.push_back(std::move(cls));
    }
    std::vector<int> vertical_class;
    for (int x0 = 0; x0 < k; ++x0) {
        std::vector<int> line;
        for (int y = 0; y < k; ++y) line.push_back(point_id(x0, y));
        std::sort(line.begin(), line.end());
        vertical_class.push_back(static_cast<int>(plane.lines.size()));
        plane.lines.push_back(std::move(line));
        plane.line_class.push_back(k);
    }
    plane.classes.push_back(std::move(vertical_class));

    plane.lines_of_point.assign(plane.point_count(), {});
    for (int line_id = 0; line_id < plane.line_count(); ++line_id)
        for (int pt : plane.lines[line_id]) plane.lines_of_point[pt].push_back(line_id);
    for (auto& list : plane.lines_of_point) std::sort(list.begin(), list.end());

    verify_axioms(plane);
    return plane;
}

} // namespace geodesy
