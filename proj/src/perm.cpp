#include "symcov/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symcov/errors.hpp"

namespace symcov {

Permutation::Permutation(int degree) : img_(degree) {
  if (degree <= 0) throw precondition_error("permutation degree must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw precondition_error("permutation degree must be positive");
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw precondition_error("image sequence is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw precondition_error("cycle point out of range");
      if (p.img_[from] != from)
        throw precondition_error("point repeated across cycles");
      p.img_[from] = to;
    }
  }
  // re-validate bijectivity for overlapping cycles
  return Permutation(p.img_);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw precondition_error("degree mismatch in permutation product");
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = rhs.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * *this * g;
}

int Permutation::order() const {
  int result = 1;
  for (const auto& cyc : cycles()) result = std::lcm(result, (int)cyc.size());
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) os << ' ';
      os << cyc[k];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace symcov
