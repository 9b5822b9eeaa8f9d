#include "fixtures.hpp"

#include <algorithm>

namespace cubehom::testing {

GridComplex make_square() { return generate_grid_complex(GridSpec{{1, 1}, {}}); }

GridComplex make_hollow_square() { return generate_grid_complex(GridSpec{{1, 1}, {{0, 0}}}); }

GridComplex make_hollow_cube() {
  return generate_grid_complex(GridSpec{{1, 1, 1}, {{0, 0, 0}}});
}

GridComplex make_annulus() { return generate_grid_complex(GridSpec{{3, 3}, {{1, 1}}}); }

PrecubicalSet make_directed_circle() {
  PcsBuilder builder;
  builder.add_cube("u", 0, {});
  builder.add_cube("v", 0, {});
  builder.add_cube("a", 1, {{{"u", "v"}}});
  builder.add_cube("b", 1, {{{"v", "u"}}});
  return std::move(builder).build();
}

GridSpec random_grid_spec(std::mt19937& rng, int max_extent, int max_forbidden) {
  std::uniform_int_distribution<int> extent(1, max_extent);
  GridSpec spec;
  spec.extents = {extent(rng), extent(rng)};
  std::vector<std::vector<int>> cells;
  for (int x = 0; x < spec.extents[0]; ++x)
    for (int y = 0; y < spec.extents[1]; ++y) cells.push_back({x, y});
  std::uniform_int_distribution<int> count(0, std::min<int>(max_forbidden, static_cast<int>(cells.size())));
  std::shuffle(cells.begin(), cells.end(), rng);
  const int n = count(rng);
  spec.forbidden.assign(cells.begin(), cells.begin() + n);
  std::sort(spec.forbidden.begin(), spec.forbidden.end());
  return spec;
}

long long ordered_bell_oracle(int n) {
  auto binomial = [](int a, int b) {
    long long out = 1;
    for (int i = 1; i <= b; ++i) out = out * (a - i + 1) / i;
    return out;
  };
  auto power = [](long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
  };
  long long total = 0;
  for (int k = 1; k <= n; ++k) {
    long long surjections = 0;
    for (int j = 0; j <= k; ++j) {
      const long long term = binomial(k, j) * power(k - j, n);
      surjections += (j % 2 == 0) ? term : -term;
    }
    total += surjections;
  }
  return total;
}

}  // namespace cubehom::testing
