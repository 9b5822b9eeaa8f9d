#pragma once

#include <random>
#include <vector>

#include "cubehom/grid.hpp"
#include "cubehom/precubical.hpp"

namespace cubehom::testing {

/// Solid unit square: grading (4, 4, 1).
GridComplex make_square();

/// Unit square with the interior removed: grading (4, 4, 0).
GridComplex make_hollow_square();

/// Unit cube with the interior removed: grading (8, 12, 6, 0).
GridComplex make_hollow_cube();

/// 3x3 grid with the middle box removed: grading (16, 24, 8).
GridComplex make_annulus();

/// Two vertices u, v with edges u -> v and v -> u.
PrecubicalSet make_directed_circle();

/// Seeded random 2d grid spec with extents up to max_extent and at most
/// max_forbidden forbidden boxes.
GridSpec random_grid_spec(std::mt19937& rng, int max_extent, int max_forbidden);

/// Number of surjections {1..n} -> {1..k} summed over k, by inclusion and
/// exclusion; the independent count for the size of the partition poset.
long long ordered_bell_oracle(int n);

}  // namespace cubehom::testing
