#pragma once

#include <string>
#include <variant>

#include "cosym/error.hpp"
#include "cosym/poly.hpp"
#include "cosym/rational.hpp"

namespace cosym {

/// Identifies the active coefficient ring of a tensor. lambda_vars == 0 is
/// the plain rational field; lambda_vars == p+1 is Q[l1..l_{p+1}].
struct Ring {
  int lambda_vars = 0;

  static Ring rational() { return Ring{0}; }
  static Ring lambda(int vars) { return Ring{vars}; }

  bool is_rational() const { return lambda_vars == 0; }
  bool operator==(const Ring&) const = default;

  std::string str() const {
    return is_rational() ? "rational" : "lambda:" + std::to_string(lambda_vars);
  }
};

/// Element of the active coefficient ring. Mixing rings in a binary
/// operation throws; promotion is always explicit (in_ring).
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(int n) : value_(Rational(n)) {}
  Scalar(Poly p) : value_(std::move(p)) {}

  static Scalar zero(Ring ring) {
    return ring.is_rational() ? Scalar(Rational(0))
                              : Scalar(Poly(ring.lambda_vars));
  }
  static Scalar one(Ring ring) {
    return ring.is_rational()
               ? Scalar(Rational(1))
               : Scalar(Poly::constant(ring.lambda_vars, 1));
  }
  /// The variable l_{index+1} of a lambda ring.
  static Scalar lambda(Ring ring, int index) {
    if (ring.is_rational()) fail(ErrorKind::RingMismatch, "lambda variable in rational ring");
    return Scalar(Poly::variable(ring.lambda_vars, index));
  }

  Ring ring() const {
    if (auto* p = std::get_if<Poly>(&value_)) return Ring::lambda(p->nvars());
    return Ring::rational();
  }

  bool is_zero() const {
    if (auto* p = std::get_if<Poly>(&value_)) return p->is_zero();
    return std::get<Rational>(value_) == 0;
  }

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }

  const Rational& rational_value() const {
    if (!is_rational()) fail(ErrorKind::RingMismatch, "scalar is not rational");
    return std::get<Rational>(value_);
  }

  const Poly& poly_value() const {
    if (is_rational()) fail(ErrorKind::RingMismatch, "scalar is not polynomial");
    return std::get<Poly>(value_);
  }

  /// Explicit promotion of a rational scalar into a target ring.
  Scalar in_ring(Ring target) const {
    if (ring() == target) return *this;
    if (is_rational()) {
      return Scalar(Poly::constant(target.lambda_vars, rational_value()));
    }
    fail(ErrorKind::RingMismatch,
         "cannot convert " + ring().str() + " scalar into " + target.str());
  }

  Scalar operator-() const {
    if (is_rational()) return Scalar(-rational_value());
    return Scalar(-poly_value());
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    if (is_rational()) return Scalar(rational_value() + o.rational_value());
    return Scalar(poly_value() + o.poly_value());
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const {
    check(o);
    if (is_rational()) return Scalar(rational_value() * o.rational_value());
    return Scalar(poly_value() * o.poly_value());
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Field division for rationals; exact division for polynomials (throws
  /// SingularSystem when the quotient is not polynomial).
  Scalar operator/(const Scalar& o) const {
    check(o);
    if (o.is_zero()) fail(ErrorKind::SingularSystem, "scalar division by zero");
    if (is_rational()) return Scalar(rational_value() / o.rational_value());
    auto q = poly_value().divide_exact(o.poly_value());
    if (!q) {
      fail(ErrorKind::SingularSystem, "inexact polynomial division");
    }
    return Scalar(*q);
  }

  bool operator==(const Scalar& o) const {
    if (ring() != o.ring()) return false;
    if (is_rational()) return rational_value() == o.rational_value();
    return poly_value() == o.poly_value();
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar reduce_sphere() const {
    if (is_rational()) return *this;
    return Scalar(poly_value().reduce_sphere());
  }

  std::string str() const {
    if (is_rational()) return to_string(rational_value());
    return poly_value().str();
  }

 private:
  void check(const Scalar& o) const {
    if (ring() != o.ring()) {
      fail(ErrorKind::RingMismatch,
           "ring mismatch: " + ring().str() + " vs " + o.ring().str());
    }
  }

  std::variant<Rational, Poly> value_;
};

}  // namespace cosym
