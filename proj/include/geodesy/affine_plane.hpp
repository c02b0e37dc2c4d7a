#pragma once

#include <vector>

#include "geodesy/finite_field.hpp"

namespace geodesy {

/// Finite affine plane of order k over GF(k). Points are indexed
/// lexicographically by coordinates (x, y); lines are grouped by parallel
/// class: classes 0..k-1 are the slopes in element order, class k is the
/// vertical class.
///
/// Construction verifies the plane axioms exhaustively:
///   (i)   every line has exactly k points,
///   (ii)  any two distinct points lie on exactly one common line,
///   (iii) some three points are not collinear,
///   (iv)  for a line l and a point off l there is a line through the point
///         disjoint from l,
/// plus: every point lies on exactly k+1 lines and every parallel class
/// partitions the point set.
struct AffinePlane {
    int order = 0;                              // k
    int point_count() const { return order * order; }
    int line_count() const { return order * (order + 1); }

    std::vector<std::vector<int>> lines;        // sorted point ids per line
    std::vector<int> line_class;                // parallel class id per line
    std::vector<std::vector<int>> classes;      // line ids per class
    std::vector<std::vector<int>> lines_of_point; // sorted line ids per point

    std::pair<int, int> point_coords(int point_id) const {
        return {point_id / order, point_id % order};
    }

    bool incident(int point_id, int line_id) const;
};

/// Builds the plane F^2 with lines {(x, m*x + b)} and verticals {(x0, y)}.
/// Throws Internal if any axiom check fails (which would indicate a field
/// arithmetic bug, so it is treated as unreachable).
AffinePlane affine_plane(const FiniteField& field);

} // namespace geodesy
