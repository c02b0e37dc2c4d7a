#pragma once

#include <optional>
#include <string>

#include "geodesy/drawing.hpp"

namespace geodesy {

/// SVG rendering of a drawing in a 1000x1000 viewport with a 20-unit
/// margin. Branch and point vertices are filled disks, subdivision and
/// line vertices hollow; an optional pair of paths is stroked bold in
/// orange on top of the plain edges. Output is deterministic; coordinates
/// are fixed-precision decimal approximations of the exact positions.
std::string export_svg(const Graph& g, const Drawing& d,
                       const std::optional<std::pair<Path, Path>>& highlight = std::nullopt);

} // namespace geodesy
