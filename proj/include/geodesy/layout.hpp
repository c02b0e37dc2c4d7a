#pragma once

#include "geodesy/drawing.hpp"

namespace geodesy {

/// Convex layout of K(s,t) for even t with clustered subdivision vertices.
///
/// Branch vertex i sits at (i, i^2) on the moment curve, so branch points
/// are in convex position and no three are collinear. For each branch edge
/// the chord parameters of all crossings with chords of independent edges
/// are collected; the t/2 subdivision vertices nearest each endpoint are
/// placed strictly between the endpoint and the nearest such crossing.
/// Every chord crossing therefore lies on the central segment of both
/// chords involved, and the drawing is valid.
Drawing clustered_convex_layout(const Graph& g);

} // namespace geodesy
