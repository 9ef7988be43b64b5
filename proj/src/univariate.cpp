#include "cosym/univariate.hpp"

#include <algorithm>

#include "cosym/error.hpp"

namespace cosym {

UniPoly UniPoly::dehomogenize(const Poly& p, int one_var) {
  if (p.nvars() != 2) fail(ErrorKind::Precondition, "dehomogenize expects two variables");
  int t_var = 1 - one_var;
  std::vector<Rational> c;
  for (const auto& [m, coeff] : p.terms()) {
    unsigned deg = m[t_var];
    if (c.size() <= deg) c.resize(deg + 1, Rational(0));
    c[deg] += coeff;
  }
  return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> d = c_;
  for (auto& x : d) x = -x;
  return UniPoly(std::move(d));
}

UniPoly UniPoly::remainder(const UniPoly& d) const {
  if (d.is_zero()) fail(ErrorKind::Precondition, "remainder by zero polynomial");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  while (static_cast<int>(r.size()) - 1 >= dd) {
    Rational lead = r.back();
    if (lead == 0) {
      r.pop_back();
      continue;
    }
    int shift = static_cast<int>(r.size()) - 1 - dd;
    Rational f = lead / d.leading();
    for (int i = 0; i <= dd; ++i) r[i + shift] -= f * d.coeffs()[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

std::vector<UniPoly> UniPoly::sturm_chain() const {
  std::vector<UniPoly> chain;
  chain.push_back(*this);
  UniPoly d = derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    UniPoly r = chain[chain.size() - 2].remainder(chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int UniPoly::sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    Rational v = p.eval(x);
    int s = v.sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int UniPoly::sign_variations_at_infinity(const std::vector<UniPoly>& chain, bool positive) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int s = p.leading().sign();
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int UniPoly::count_roots(const Rational& a, const Rational& b) const {
  if (is_zero()) fail(ErrorKind::Precondition, "root count of the zero polynomial");
  auto chain = sturm_chain();
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int UniPoly::count_real_roots() const {
  if (is_zero()) fail(ErrorKind::Precondition, "root count of the zero polynomial");
  if (degree() <= 0) return 0;
  auto chain = sturm_chain();
  return sign_variations_at_infinity(chain, false) -
         sign_variations_at_infinity(chain, true);
}

Rational UniPoly::root_bound() const {
  if (degree() <= 0) return Rational(1);
  Rational m = 0;
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    Rational a = abs(c_[i] / c_.back());
    if (a > m) m = a;
  }
  return m + 1;
}

std::optional<Rational> UniPoly::find_sign_witness(int want) const {
  if (is_zero()) return std::nullopt;
  if (degree() == 0) return (c_[0].sign() == want) ? std::optional<Rational>(0) : std::nullopt;
  Rational bound = root_bound();
  // Outside the root bound the sign is that of the leading term.
  if (leading().sign() == want) return bound;
  int left = (degree() % 2 == 0) ? leading().sign() : -leading().sign();
  if (left == want) return -bound;
  // Otherwise the wanted sign, if attained, is attained on an open interval
  // between real roots: isolate the roots and probe between them.
  std::vector<std::pair<Rational, Rational>> boxes = isolate_roots();
  std::vector<Rational> probes;
  probes.push_back(-bound);
  for (const auto& [a, b] : boxes) {
    probes.push_back(a);
    probes.push_back(b);
  }
  probes.push_back(bound);
  std::sort(probes.begin(), probes.end());
  for (size_t i = 0; i + 1 < probes.size(); ++i) {
    Rational mid = (probes[i] + probes[i + 1]) / 2;
    if (eval(mid).sign() == want) return mid;
    if (eval(probes[i]).sign() == want) return probes[i];
  }
  if (eval(probes.back()).sign() == want) return probes.back();
  return std::nullopt;
}

std::vector<std::pair<Rational, Rational>> UniPoly::isolate_roots() const {
  std::vector<std::pair<Rational, Rational>> out;
  if (is_zero() || degree() <= 0) return out;
  Rational bound = root_bound();
  auto chain = sturm_chain();
  auto count = [&](const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int k = count(a, b);
    if (k == 0) continue;
    if (k == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rational mid = (a + b) / 2;
    // a root exactly at the midpoint belongs to the left half (a, mid]
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> UniPoly::rational_roots() const {
  std::vector<Rational> roots;
  if (is_zero() || degree() == 0) return roots;
  // primitive integer coefficients
  Integer lcm = 1;
  for (const auto& q : c_) lcm = boost::multiprecision::lcm(lcm, denominator(q));
  std::vector<Integer> ic;
  for (const auto& q : c_) ic.push_back(numerator(q) * (lcm / denominator(q)));
  // strip t = 0 roots
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  Integer a0 = boost::multiprecision::abs(ic[low]);
  Integer an = boost::multiprecision::abs(ic.back());
  auto divisors = [](Integer v) {
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        out.push_back(v / d);
      }
    }
    return out;
  };
  for (const Integer& p : divisors(a0)) {
    for (const Integer& q : divisors(an)) {
      for (int s : {1, -1}) {
        Rational cand(p * s, q);
        if (eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cosym
