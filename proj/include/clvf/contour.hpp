#pragma once

#include <array>
#include <vector>

#include "clvf/grid.hpp"

namespace clvf {

struct Polyline {
  std::vector<std::array<double, 2>> points;
  bool closed = false;
};

/// Level curves {V = level} of a 2D grid function by marching squares.
/// Masked nodes count as lying above every level. Crossings are placed by
/// linear interpolation along cell edges; saddle cells are resolved with the
/// cell-center average.
std::vector<Polyline> contour_lines(const ValueArray& value, double level);

}  // namespace clvf
