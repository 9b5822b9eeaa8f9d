#pragma once

#include <string>
#include <vector>

#include "cubehom/precubical.hpp"

namespace cubehom {

/// An axis-aligned grid of unit boxes with a forbidden subset, the standard
/// shape of a PV-program state space.
struct GridSpec {
  std::vector<int> extents;               // e_1..e_d, all >= 1
  std::vector<std::vector<int>> forbidden;  // lower corners of forbidden unit d-boxes
};

struct GridComplex {
  PrecubicalSet complex;
  CubeIdx source = 0;  // origin vertex
  CubeIdx target = 0;  // top vertex
};

/// The cubical complex of the region prod [0, e_i] minus the open interiors
/// of the forbidden unit boxes: every unit k-box with k < d is kept (its
/// interior lies on a grid hyperplane and misses every open box), and a unit
/// d-box is kept iff it is not forbidden. Ids encode (base point, varying
/// axes) and outputs are reproducible byte for byte.
GridComplex generate_grid_complex(const GridSpec& spec);

/// Deterministic cube id for base point p and 1-based varying axes.
std::string grid_cube_name(const std::vector<int>& base, const std::vector<int>& axes);

GridSpec parse_grid_spec(const std::string& text);

}  // namespace cubehom
