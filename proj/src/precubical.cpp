#include "cubehom/precubical.hpp"

#include <algorithm>
#include <map>

#include "cubehom/errors.hpp"

namespace cubehom {

const std::vector<CubeIdx>& PrecubicalSet::grade(int d) const {
  static const std::vector<CubeIdx> empty;
  if (d < 0 || d >= static_cast<int>(grades_.size())) return empty;
  return grades_[static_cast<std::size_t>(d)];
}

std::optional<CubeIdx> PrecubicalSet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void PcsBuilder::add_cube(std::string name, int dim,
                          std::vector<std::array<std::string, 2>> face_names) {
  if (dim < 0) throw InputError("cube '" + name + "': negative dimension");
  if (dim > kMaxDim)
    throw InputError("cube '" + name + "': dimension " + std::to_string(dim) +
                     " exceeds the supported maximum " + std::to_string(kMaxDim));
  if (static_cast<int>(face_names.size()) != dim)
    throw InputError("cube '" + name + "': expected " + std::to_string(dim) +
                     " face pairs, got " + std::to_string(face_names.size()));
  if (seen_.count(name)) throw InputError("duplicate cube id '" + name + "'");
  seen_.emplace(name, decls_.size());
  decls_.push_back(Decl{std::move(name), dim, std::move(face_names)});
}

bool PcsBuilder::contains(std::string_view name) const {
  return seen_.count(std::string(name)) > 0;
}

PrecubicalSet PcsBuilder::build() && {
  PrecubicalSet out;
  out.cubes_.reserve(decls_.size());
  int max_dim = -1;
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    const Decl& d = decls_[i];
    out.cubes_.push_back(Cube{d.name, d.dim, {}});
    out.by_name_.emplace(d.name, static_cast<CubeIdx>(i));
    max_dim = std::max(max_dim, d.dim);
  }
  out.grades_.resize(static_cast<std::size_t>(max_dim + 1));
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    const Decl& d = decls_[i];
    Cube& cube = out.cubes_[i];
    for (int dir = 1; dir <= d.dim; ++dir) {
      std::array<CubeIdx, 2> pair{};
      for (int eps = 0; eps < 2; ++eps) {
        const std::string& ref = d.face_names[static_cast<std::size_t>(dir - 1)][static_cast<std::size_t>(eps)];
        auto it = out.by_name_.find(ref);
        if (it == out.by_name_.end())
          throw InputError("cube '" + d.name + "': face d^" + std::to_string(eps) + "_" +
                           std::to_string(dir) + " references missing cube '" + ref + "'");
        if (out.cubes_[static_cast<std::size_t>(it->second)].dim != d.dim - 1)
          throw InputError("cube '" + d.name + "': face d^" + std::to_string(eps) + "_" +
                           std::to_string(dir) + " references '" + ref + "' of dimension " +
                           std::to_string(out.cubes_[static_cast<std::size_t>(it->second)].dim) +
                           ", expected " + std::to_string(d.dim - 1));
        pair[static_cast<std::size_t>(eps)] = it->second;
      }
      cube.faces.push_back(pair);
    }
    out.grades_[static_cast<std::size_t>(d.dim)].push_back(static_cast<CubeIdx>(i));
  }
  return out;
}

ValidationReport validate_precubical(const PrecubicalSet& k) {
  ValidationReport report;
  for (CubeIdx c = 0; c < static_cast<CubeIdx>(k.size()); ++c) {
    const int n = k.dim(c);
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int eps = 0; eps < 2; ++eps) {
          for (int eta = 0; eta < 2; ++eta) {
            const CubeIdx lhs = k.face(k.face(c, j, eta), i, eps);
            const CubeIdx rhs = k.face(k.face(c, i, eps), j - 1, eta);
            if (lhs != rhs) {
              report.ok = false;
              std::string rel = "d^" + std::to_string(eps) + "_" + std::to_string(i) + " d^" +
                                std::to_string(eta) + "_" + std::to_string(j) + " = d^" +
                                std::to_string(eta) + "_" + std::to_string(j - 1) + " d^" +
                                std::to_string(eps) + "_" + std::to_string(i);
              report.violations.push_back(ValidationViolation{
                  k.name(c), rel,
                  "got '" + k.name(lhs) + "' vs '" + k.name(rhs) + "'"});
            }
          }
        }
      }
    }
  }
  return report;
}

CubeIdx apply_face(const PrecubicalSet& k, CubeIdx c, const FaceLabel& f) {
  if (f.arity() != k.dim(c))
    throw InputError("apply_face: label arity " + std::to_string(f.arity()) +
                     " does not match dimension " + std::to_string(k.dim(c)) + " of cube '" +
                     k.name(c) + "'");
  // Applying single faces from the highest direction down keeps every
  // remaining direction index equal to its original position.
  CubeIdx cur = c;
  for (int i = f.arity(); i >= 1; --i) {
    if (f.at(i) == FaceDir::Star) continue;
    cur = k.face(cur, i, f.at(i) == FaceDir::One ? 1 : 0);
  }
  return cur;
}

std::pair<CubeIdx, CubeIdx> extreme_vertices(const PrecubicalSet& k, CubeIdx c) {
  const int n = k.dim(c);
  return {apply_face(k, c, FaceLabel::constant(n, FaceDir::Zero)),
          apply_face(k, c, FaceLabel::constant(n, FaceDir::One))};
}

PropernessResult is_proper(const PrecubicalSet& k) {
  std::map<std::pair<CubeIdx, CubeIdx>, CubeIdx> seen;
  for (CubeIdx c = 0; c < static_cast<CubeIdx>(k.size()); ++c) {
    auto [v0, v1] = extreme_vertices(k, c);
    if (v1 < v0) std::swap(v0, v1);  // unordered pair
    auto [it, inserted] = seen.emplace(std::make_pair(v0, v1), c);
    if (!inserted) return PropernessResult{false, std::make_pair(it->second, c)};
  }
  return {};
}

PropernessResult is_covering_proper(const PrecubicalSet& k) {
  std::map<std::tuple<int, CubeIdx, CubeIdx>, CubeIdx> seen;
  for (CubeIdx c = 0; c < static_cast<CubeIdx>(k.size()); ++c) {
    auto [v0, v1] = extreme_vertices(k, c);
    auto [it, inserted] = seen.emplace(std::make_tuple(k.dim(c), v0, v1), c);
    if (!inserted) return PropernessResult{false, std::make_pair(it->second, c)};
  }
  return {};
}

LoopCheckResult has_no_loops(const PrecubicalSet& k) {
  // Vertex graph: one edge d^0(c) -> d^1(c) per cube of dimension >= 1.
  const std::vector<CubeIdx>& vertices = k.grade(0);
  std::unordered_map<CubeIdx, std::size_t> vpos;
  for (std::size_t i = 0; i < vertices.size(); ++i) vpos.emplace(vertices[i], i);
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (int d = 1; d <= k.max_dim(); ++d) {
    for (CubeIdx c : k.grade(d)) {
      auto [v0, v1] = extreme_vertices(k, c);
      adj[vpos.at(v0)].push_back(vpos.at(v1));
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  enum class Color : std::uint8_t { White, Gray, Black };
  std::vector<Color> color(vertices.size(), Color::White);
  std::vector<std::size_t> parent(vertices.size(), SIZE_MAX);

  for (std::size_t root = 0; root < vertices.size(); ++root) {
    if (color[root] != Color::White) continue;
    // Iterative DFS with an explicit edge cursor.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = Color::Gray;
    while (!stack.empty()) {
      auto& [u, cursor] = stack.back();
      if (cursor < adj[u].size()) {
        const std::size_t v = adj[u][cursor++];
        if (color[v] == Color::Gray) {
          // Back edge: walk parents from u back to v.
          std::vector<CubeIdx> cycle{vertices[v]};
          std::vector<CubeIdx> tail;
          for (std::size_t x = u; x != v; x = parent[x]) tail.push_back(vertices[x]);
          std::reverse(tail.begin(), tail.end());
          cycle.insert(cycle.end(), tail.begin(), tail.end());
          cycle.push_back(vertices[v]);
          return LoopCheckResult{false, std::move(cycle)};
        }
        if (color[v] == Color::White) {
          color[v] = Color::Gray;
          parent[v] = u;
          stack.emplace_back(v, 0);
        }
      } else {
        color[u] = Color::Black;
        stack.pop_back();
      }
    }
  }
  return {};
}

namespace {
std::string covering_name(const std::string& base, int level) {
  return base + "@" + std::to_string(level);
}
}  // namespace

CoveringTruncation covering_truncation(const PrecubicalSet& k, int n) {
  if (n < 0) throw InputError("covering_truncation: negative length bound");
  PcsBuilder builder;
  CoveringTruncation out;
  for (int d = 0; d <= std::min(n, k.max_dim()); ++d) {
    for (CubeIdx c : k.grade(d)) {
      for (int level = 0; level <= n - d; ++level) {
        std::vector<std::array<std::string, 2>> faces;
        faces.reserve(static_cast<std::size_t>(d));
        for (int dir = 1; dir <= d; ++dir) {
          faces.push_back({covering_name(k.name(k.face(c, dir, 0)), level),
                           covering_name(k.name(k.face(c, dir, 1)), level + 1)});
        }
        builder.add_cube(covering_name(k.name(c), level), d, std::move(faces));
        out.original.push_back(c);
        out.level.push_back(level);
      }
    }
  }
  out.complex = std::move(builder).build();
  return out;
}

std::optional<CubeIdx> CoveringTruncation::find(const PrecubicalSet& k, CubeIdx orig,
                                                int lvl) const {
  return complex.find(covering_name(k.name(orig), lvl));
}

}  // namespace cubehom
