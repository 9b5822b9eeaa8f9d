#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubehom/face_label.hpp"

namespace cubehom {

using CubeIdx = std::int32_t;

/// Hard cap on cube dimension; the permutohedral machinery downstream grows
/// factorially and larger inputs are unusable anyway.
inline constexpr int kMaxDim = 16;

struct Cube {
  std::string name;
  int dim = 0;
  /// faces[i-1][eps] = index of d^eps_i, for directions i = 1..dim.
  std::vector<std::array<CubeIdx, 2>> faces;
};

/// A finite graded set of cubes with face maps. Immutable once built; all
/// queries are const and safe for concurrent use.
class PrecubicalSet {
 public:
  std::size_t size() const { return cubes_.size(); }
  int max_dim() const { return static_cast<int>(grades_.size()) - 1; }

  const Cube& cube(CubeIdx c) const { return cubes_.at(static_cast<std::size_t>(c)); }
  int dim(CubeIdx c) const { return cube(c).dim; }
  const std::string& name(CubeIdx c) const { return cube(c).name; }

  /// d^eps_i with 1-based direction i.
  CubeIdx face(CubeIdx c, int direction, int eps) const {
    return cube(c).faces.at(static_cast<std::size_t>(direction - 1))[static_cast<std::size_t>(eps)];
  }

  /// Indices of all cubes of dimension d (empty for d > max_dim).
  const std::vector<CubeIdx>& grade(int d) const;

  std::optional<CubeIdx> find(std::string_view name) const;

 private:
  friend class PcsBuilder;
  std::vector<Cube> cubes_;
  std::vector<std::vector<CubeIdx>> grades_;
  std::unordered_map<std::string, CubeIdx> by_name_;
};

/// Collects cube declarations with face references by name, then resolves
/// them. Structural well-formedness (resolvable references, dimensions of
/// referenced faces) is checked at build time; the pre-cubical relations are
/// not -- use validate_precubical for that.
class PcsBuilder {
 public:
  void add_cube(std::string name, int dim, std::vector<std::array<std::string, 2>> face_names);
  bool contains(std::string_view name) const;
  PrecubicalSet build() &&;

 private:
  struct Decl {
    std::string name;
    int dim;
    std::vector<std::array<std::string, 2>> face_names;
  };
  std::vector<Decl> decls_;
  std::unordered_map<std::string, std::size_t> seen_;
};

struct ValidationViolation {
  std::string cube;
  std::string relation;  // which (i, j, eps, eta) instance failed
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationViolation> violations;
};

/// Checks d^eps_i d^eta_j = d^eta_{j-1} d^eps_i for every cube and every
/// i < j, eps, eta. Violations are reported, not thrown.
ValidationReport validate_precubical(const PrecubicalSet& k);

/// Applies the iterated face map named by f (arity must equal dim(c)).
CubeIdx apply_face(const PrecubicalSet& k, CubeIdx c, const FaceLabel& f);

/// (d^0(c), d^1(c)); for a vertex both components are c itself.
std::pair<CubeIdx, CubeIdx> extreme_vertices(const PrecubicalSet& k, CubeIdx c);

struct PropernessResult {
  bool proper = true;
  /// Two distinct cubes sharing the relevant extreme-vertex data, when found.
  std::optional<std::pair<CubeIdx, CubeIdx>> offending;
};

/// True iff c -> {d^0(c), d^1(c)} is injective over all cubes of all
/// dimensions, the pair taken as an unordered set.
PropernessResult is_proper(const PrecubicalSet& k);

/// True iff no two distinct cubes of the same dimension share the ordered
/// pair (d^0, d^1). This is equivalent to properness of every truncated
/// non-looping covering: extreme vertices of (c, k) are (d^0 c, k) and
/// (d^1 c, k + dim c), so a collision forces equal dimension and aligned
/// orientation. Cross-validated in tests against is_proper on truncations.
PropernessResult is_covering_proper(const PrecubicalSet& k);

struct LoopCheckResult {
  bool acyclic = true;
  /// On failure, a vertex cycle v0, v1, ..., v0.
  std::vector<CubeIdx> witness_cycle;
};

/// Acyclicity of the vertex graph with an edge d^0(c) -> d^1(c) for every
/// cube of dimension >= 1.
LoopCheckResult has_no_loops(const PrecubicalSet& k);

/// The truncated non-looping length covering: d-cubes are pairs (c, level)
/// with 0 <= level <= n - d and d^eps_i(c, level) = (d^eps_i c, level + eps).
struct CoveringTruncation {
  PrecubicalSet complex;
  std::vector<CubeIdx> original;  // per covering cube: the source cube in k
  std::vector<int> level;         // per covering cube: its level
  std::optional<CubeIdx> find(const PrecubicalSet& k, CubeIdx orig, int lvl) const;
};

CoveringTruncation covering_truncation(const PrecubicalSet& k, int n);

}  // namespace cubehom
