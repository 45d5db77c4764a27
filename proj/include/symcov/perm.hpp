#pragma once

#include <compare>
#include <string>
#include <vector>

namespace symcov {

/// A permutation of {0, ..., degree-1}, stored by its image sequence.
/// The product a * b means "apply a, then b", so that the right action
/// point^(a*b) = (point^a)^b matches group-theoretic composition.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  /// Build from disjoint (or not) cycles of 0-based points; fixed points omitted.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// g^{-1} * this * g
  Permutation conjugated_by(const Permutation& g) const;

  int order() const;
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;  // cycle notation, "()" for identity

 private:
  std::vector<int> img_;
};

}  // namespace symcov
