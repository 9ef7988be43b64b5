#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cosym/poly.hpp"
#include "cosym/rational.hpp"

namespace cosym {

/// Dense univariate polynomial over the rationals, coefficients ascending.
/// Backs the Sturm-sequence real-root analysis used by the p = 1 sphere
/// verifier.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Dehomogenize a homogeneous bivariate polynomial on the chart where the
  /// given variable equals 1 (var = 0 or 1; the other variable becomes t).
  static UniPoly dehomogenize(const Poly& p, int one_var);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly operator-() const;

  /// Remainder of *this divided by d (field division).
  UniPoly remainder(const UniPoly& d) const;

  /// Number of distinct real roots in (a, b], by Sturm's theorem.
  /// Also usable on the whole line via count_real_roots().
  int count_roots(const Rational& a, const Rational& b) const;
  int count_real_roots() const;

  /// Upper bound B with all real roots in (-B, B) (Cauchy bound).
  Rational root_bound() const;

  /// A rational point x with sign(p(x)) == want (+1/-1), if one exists.
  /// Searches sign changes over the root bound and bisects down to a
  /// rational witness; nullopt when the polynomial never attains that sign.
  std::optional<Rational> find_sign_witness(int want) const;

  /// Disjoint intervals (a, b] each containing exactly one real root,
  /// by Sturm bisection inside the Cauchy bound.
  std::vector<std::pair<Rational, Rational>> isolate_roots() const;

  /// Rational roots, via the rational root theorem on the primitive
  /// integer form.
  std::vector<Rational> rational_roots() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<UniPoly> sturm_chain() const;
  static int sign_variations(const std::vector<UniPoly>& chain, const Rational& x);
  static int sign_variations_at_infinity(const std::vector<UniPoly>& chain, bool positive);

  std::vector<Rational> c_;
};

}  // namespace cosym
