#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubehom {

/// One slot of an iterated face map: take the lower face, the upper face, or
/// leave the direction free.
enum class FaceDir : std::uint8_t { Zero = 0, One = 1, Star = 2 };

/// A function {1..n} -> {0,1,*} naming an iterated face map of an n-cube.
/// Directions marked Star survive; the arity of the resulting cube equals
/// the number of stars.
class FaceLabel {
 public:
  explicit FaceLabel(std::vector<FaceDir> values) : values_(std::move(values)) {}

  static FaceLabel constant(int arity, FaceDir d);
  /// Zero on the given 1-based positions, Star elsewhere (the map d^0_A).
  static FaceLabel lower_on(int arity, const std::vector<int>& positions);
  /// One on the given 1-based positions, Star elsewhere (the map d^1_A).
  static FaceLabel upper_on(int arity, const std::vector<int>& positions);

  int arity() const { return static_cast<int>(values_.size()); }
  FaceDir at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

  int star_count() const;
  /// 1-based positions carrying Star, in increasing order.
  std::vector<int> star_positions() const;
  int ones_count() const;

  std::string to_string() const;

  bool operator==(const FaceLabel& other) const { return values_ == other.values_; }

 private:
  std::vector<FaceDir> values_;
};

/// Composite h with d_g(d_f(c)) = d_h(c): h agrees with f off the stars of f
/// and pulls g back along the increasing bijection from the stars of f.
/// Requires arity(g) == star_count(f).
FaceLabel compose_face_labels(const FaceLabel& f, const FaceLabel& g);

}  // namespace cubehom
