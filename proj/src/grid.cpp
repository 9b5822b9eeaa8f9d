#include "cubehom/grid.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "cubehom/errors.hpp"

namespace cubehom {

std::string grid_cube_name(const std::vector<int>& base, const std::vector<int>& axes) {
  std::string out = "c";
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(base[i]);
  }
  if (!axes.empty()) {
    out += '|';
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(axes[i]);
    }
  }
  return out;
}

namespace {

void check_spec(const GridSpec& spec) {
  const int d = static_cast<int>(spec.extents.size());
  if (d == 0) throw InputError("grid spec: extents must be nonempty");
  if (d > kMaxDim) throw InputError("grid spec: more than " + std::to_string(kMaxDim) + " axes");
  for (int e : spec.extents)
    if (e < 1) throw InputError("grid spec: extents must be positive");
  for (const auto& cell : spec.forbidden) {
    if (static_cast<int>(cell.size()) != d)
      throw InputError("grid spec: forbidden cell has wrong arity");
    for (int i = 0; i < d; ++i)
      if (cell[static_cast<std::size_t>(i)] < 0 ||
          cell[static_cast<std::size_t>(i)] >= spec.extents[static_cast<std::size_t>(i)])
        throw InputError("grid spec: forbidden cell out of range");
  }
}

/// Enumerates k-subsets of {1..d} in lexicographic order.
std::vector<std::vector<int>> axis_subsets(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == d - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

GridComplex generate_grid_complex(const GridSpec& spec) {
  check_spec(spec);
  const int d = static_cast<int>(spec.extents.size());
  std::set<std::vector<int>> forbidden(spec.forbidden.begin(), spec.forbidden.end());

  PcsBuilder builder;
  for (int k = 0; k <= d; ++k) {
    for (const std::vector<int>& axes : axis_subsets(d, k)) {
      // Base points: coordinates on varying axes range to extent-1, others to extent.
      std::vector<int> base(static_cast<std::size_t>(d), 0);
      while (true) {
        const bool varying_ok = [&] {
          for (int a : axes)
            if (base[static_cast<std::size_t>(a - 1)] >= spec.extents[static_cast<std::size_t>(a - 1)])
              return false;
          return true;
        }();
        if (varying_ok && (k < d || !forbidden.count(base))) {
          std::vector<std::array<std::string, 2>> faces;
          faces.reserve(static_cast<std::size_t>(k));
          for (int j = 0; j < k; ++j) {
            const int axis = axes[static_cast<std::size_t>(j)];
            std::vector<int> sub_axes = axes;
            sub_axes.erase(sub_axes.begin() + j);
            std::vector<int> upper = base;
            ++upper[static_cast<std::size_t>(axis - 1)];
            faces.push_back({grid_cube_name(base, sub_axes), grid_cube_name(upper, sub_axes)});
          }
          builder.add_cube(grid_cube_name(base, axes), k, std::move(faces));
        }
        // Odometer over base coordinates.
        int i = d - 1;
        while (i >= 0 && base[static_cast<std::size_t>(i)] == spec.extents[static_cast<std::size_t>(i)]) {
          base[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++base[static_cast<std::size_t>(i)];
      }
    }
  }

  GridComplex out;
  out.complex = std::move(builder).build();
  const std::vector<int> origin(static_cast<std::size_t>(d), 0);
  out.source = *out.complex.find(grid_cube_name(origin, {}));
  out.target = *out.complex.find(grid_cube_name(spec.extents, {}));
  return out;
}

GridSpec parse_grid_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("grid spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("extents") || !doc["extents"].is_array())
    throw InputError("grid spec: expected an object with an 'extents' array");
  GridSpec spec;
  for (const auto& e : doc["extents"]) {
    if (!e.is_number_integer()) throw InputError("grid spec: extents must be integers");
    spec.extents.push_back(e.get<int>());
  }
  if (doc.contains("forbidden")) {
    if (!doc["forbidden"].is_array()) throw InputError("grid spec: 'forbidden' must be an array");
    for (const auto& cell : doc["forbidden"]) {
      if (!cell.is_array()) throw InputError("grid spec: forbidden cells must be arrays");
      std::vector<int> coords;
      for (const auto& c : cell) {
        if (!c.is_number_integer()) throw InputError("grid spec: forbidden coordinates must be integers");
        coords.push_back(c.get<int>());
      }
      spec.forbidden.push_back(std::move(coords));
    }
  }
  check_spec(spec);
  return spec;
}

}  // namespace cubehom
