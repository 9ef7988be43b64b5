#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cosym/error.hpp"
#include "cosym/rational.hpp"

namespace cosym {

/// Multivariate polynomial over the exact rationals in variables l1..l_n.
///
/// Canonical form: a sorted map from exponent vectors (lexicographic key
/// order, all of length nvars) to nonzero rational coefficients. The zero
/// polynomial has empty support.
class Poly {
 public:
  using Monomial = std::vector<unsigned>;

  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }

  static Poly variable(int nvars, int index, unsigned power = 1) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[index] = power;
    p.terms_[m] = 1;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            terms_.begin()->first == Monomial(nvars_, 0));
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (unsigned e : m) t += static_cast<int>(e);
      if (t > d) d = t;
    }
    return d;
  }

  bool is_homogeneous(int deg) const {
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (unsigned e : m) t += static_cast<int>(e);
      if (t != deg) return false;
    }
    return true;
  }

  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  Poly operator+(const Poly& o) const {
    check(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) {
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_[m] = c;
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    check(o);
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(nvars_);
        for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
          Rational c = ca * cb;
          if (c != 0) r.terms_[m] = c;
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  Poly operator*(const Rational& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
  }

  Poly pow(unsigned k) const {
    Poly r = constant(nvars_, 1);
    Poly base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(std::span<const Rational> point) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i) {
        for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
      }
      acc += t;
    }
    return acc;
  }

  /// Canonical representative modulo the sphere ideal (l1^2+...+ln^2 - 1):
  /// rewrites every occurrence of l1^2 as 1 - l2^2 - ... - ln^2.
  Poly reduce_sphere() const {
    if (nvars_ < 1) return *this;
    Poly rest(nvars_);  // 1 - l2^2 - ... - ln^2
    rest = constant(nvars_, 1);
    for (int i = 1; i < nvars_; ++i) {
      rest = rest - variable(nvars_, i, 2);
    }
    Poly cur = *this;
    for (;;) {
      // find a term divisible by l1^2
      std::optional<std::pair<Monomial, Rational>> hit;
      for (const auto& [m, c] : cur.terms_) {
        if (m[0] >= 2) {
          hit = {m, c};
          break;
        }
      }
      if (!hit) return cur;
      Monomial q = hit->first;
      q[0] -= 2;
      Poly mono(nvars_);
      mono.terms_[q] = hit->second;
      Monomial full = hit->first;
      Poly term(nvars_);
      term.terms_[full] = hit->second;
      cur = cur - term + mono * rest;
    }
  }

  /// Exact division; nullopt if the quotient is not polynomial.
  std::optional<Poly> divide_exact(const Poly& divisor) const {
    check(divisor);
    if (divisor.is_zero()) fail(ErrorKind::SingularSystem, "division by zero polynomial");
    Poly rem = *this;
    Poly quot(nvars_);
    const auto& [lm, lc] = *divisor.terms_.rbegin();  // lex-leading term
    while (!rem.is_zero()) {
      const auto& [rm, rc] = *rem.terms_.rbegin();
      Monomial q(nvars_);
      for (int i = 0; i < nvars_; ++i) {
        if (rm[i] < lm[i]) return std::nullopt;
        q[i] = rm[i] - lm[i];
      }
      Poly qt(nvars_);
      qt.terms_[q] = rc / lc;
      quot = quot + qt;
      rem = rem - qt * divisor;
    }
    return quot;
  }

  std::string str(const std::string& var = "l") const;

 private:
  void check(const Poly& o) const {
    if (nvars_ != o.nvars_) {
      fail(ErrorKind::RingMismatch, "polynomial rings differ in variable count");
    }
  }

  int nvars_;
  std::map<Monomial, Rational> terms_;
};

/// Canonical printing, highest monomial first: "6*l1^4 - 6*l1^2*l2^2 + 6*l2^4".
inline std::string Poly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += to_string(a) + "*" + mono;
    }
  }
  return out;
}

}  // namespace cosym
