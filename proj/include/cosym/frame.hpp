#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cosym/error.hpp"
#include "cosym/rational.hpp"

namespace cosym {

/// Sparse vector of bracket coefficients: index -> rational.
using BracketCoeffs = std::map<int, Rational>;

/// Table of structure constants, keyed by (i, j) with i < j:
/// [e_i, e_j] = sum_k c[k] e_k. Antisymmetry is implicit.
using BracketTable = std::map<std::pair<int, int>, BracketCoeffs>;

/// A finite anchored basis with antisymmetric structure constants.
/// The Jacobi identity is checked at construction.
class Frame {
 public:
  Frame(std::vector<std::string> names, BracketTable brackets)
      : names_(std::move(names)), brackets_(std::move(brackets)) {
    validate();
  }

  static std::shared_ptr<const Frame> abelian(int dim, const std::string& prefix = "e") {
    std::vector<std::string> names;
    names.reserve(dim);
    for (int i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
    return std::make_shared<Frame>(std::move(names), BracketTable{});
  }

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const BracketTable& brackets() const { return brackets_; }
  bool is_abelian() const { return brackets_.empty(); }

  /// [e_i, e_j] for arbitrary i, j (handles the sign and i == j).
  BracketCoeffs basis_bracket(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return {};
    BracketCoeffs out = it->second;
    if (flip) {
      for (auto& [k, c] : out) c = -c;
    }
    return out;
  }

  int index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i) {
      if (names_[i] == name) return i;
    }
    fail(ErrorKind::Precondition, "unknown basis name: " + name);
  }

  /// New frame with extra abelian directions appended; base structure
  /// constants are embedded unchanged.
  std::shared_ptr<const Frame> extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> names = names_;
    names.insert(names.end(), extra.begin(), extra.end());
    return std::make_shared<Frame>(std::move(names), brackets_);
  }

  bool operator==(const Frame& o) const {
    return names_ == o.names_ && brackets_ == o.brackets_;
  }

 private:
  void validate() const {
    int n = dim();
    if (n <= 0) fail(ErrorKind::Precondition, "frame dimension must be positive");
    for (const auto& [key, coeffs] : brackets_) {
      auto [i, j] = key;
      if (i < 0 || j >= n || i >= j) {
        fail(ErrorKind::Precondition, "bracket index pair out of range or not i<j");
      }
      for (const auto& [k, c] : coeffs) {
        if (k < 0 || k >= n) fail(ErrorKind::Precondition, "bracket target index out of range");
      }
    }
    check_jacobi();
  }

  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for all i<j<k
  void check_jacobi() const {
    int n = dim();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          BracketCoeffs acc;
          accumulate_double_bracket(acc, i, j, k);
          accumulate_double_bracket(acc, j, k, i);
          accumulate_double_bracket(acc, k, i, j);
          for (const auto& [m, c] : acc) {
            if (c != 0) {
              fail(ErrorKind::JacobiViolation,
                   "Jacobi identity fails on (" + names_[i] + ", " + names_[j] +
                       ", " + names_[k] + ")");
            }
          }
        }
      }
    }
  }

  void accumulate_double_bracket(BracketCoeffs& acc, int a, int b, int c) const {
    for (const auto& [m, coeff] : basis_bracket(a, b)) {
      for (const auto& [t, inner] : basis_bracket(m, c)) {
        acc[t] += coeff * inner;
      }
    }
  }

  std::vector<std::string> names_;
  BracketTable brackets_;
};

using FramePtr = std::shared_ptr<const Frame>;

inline void ensure_same_frame(const FramePtr& a, const FramePtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !(*a == *b)) {
    fail(ErrorKind::FrameMismatch, "operands live on different frames");
  }
}

}  // namespace cosym
