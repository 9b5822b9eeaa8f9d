#include "cubehom/face_label.hpp"

#include <algorithm>

#include "cubehom/errors.hpp"

namespace cubehom {

FaceLabel FaceLabel::constant(int arity, FaceDir d) {
  return FaceLabel(std::vector<FaceDir>(static_cast<std::size_t>(arity), d));
}

FaceLabel FaceLabel::lower_on(int arity, const std::vector<int>& positions) {
  std::vector<FaceDir> values(static_cast<std::size_t>(arity), FaceDir::Star);
  for (int p : positions) values.at(static_cast<std::size_t>(p - 1)) = FaceDir::Zero;
  return FaceLabel(std::move(values));
}

FaceLabel FaceLabel::upper_on(int arity, const std::vector<int>& positions) {
  std::vector<FaceDir> values(static_cast<std::size_t>(arity), FaceDir::Star);
  for (int p : positions) values.at(static_cast<std::size_t>(p - 1)) = FaceDir::One;
  return FaceLabel(std::move(values));
}

int FaceLabel::star_count() const {
  return static_cast<int>(std::count(values_.begin(), values_.end(), FaceDir::Star));
}

std::vector<int> FaceLabel::star_positions() const {
  std::vector<int> out;
  for (int i = 1; i <= arity(); ++i)
    if (at(i) == FaceDir::Star) out.push_back(i);
  return out;
}

int FaceLabel::ones_count() const {
  return static_cast<int>(std::count(values_.begin(), values_.end(), FaceDir::One));
}

std::string FaceLabel::to_string() const {
  std::string out = "(";
  for (int i = 1; i <= arity(); ++i) {
    if (i > 1) out += ',';
    switch (at(i)) {
      case FaceDir::Zero: out += '0'; break;
      case FaceDir::One: out += '1'; break;
      case FaceDir::Star: out += '*'; break;
    }
  }
  out += ')';
  return out;
}

FaceLabel compose_face_labels(const FaceLabel& f, const FaceLabel& g) {
  if (g.arity() != f.star_count())
    throw InputError("compose_face_labels: arity of g (" + std::to_string(g.arity()) +
                     ") must equal star count of f (" + std::to_string(f.star_count()) + ")");
  std::vector<FaceDir> values;
  values.reserve(static_cast<std::size_t>(f.arity()));
  int next_star = 0;  // position in g of the next star of f
  for (int i = 1; i <= f.arity(); ++i) {
    if (f.at(i) == FaceDir::Star) {
      ++next_star;
      values.push_back(g.at(next_star));
    } else {
      values.push_back(f.at(i));
    }
  }
  return FaceLabel(std::move(values));
}

}  // namespace cubehom
