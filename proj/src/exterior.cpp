#include "cosym/exterior.hpp"

#include <algorithm>
#include <numeric>

namespace cosym {

namespace {

void ensure_same(const KForm& a, const KForm& b) {
  ensure_same_frame(a.frame(), b.frame());
  if (a.ring() != b.ring()) {
    fail(ErrorKind::RingMismatch,
         "form ring mismatch: " + a.ring().str() + " vs " + b.ring().str());
  }
}

/// Merge two strictly increasing index tuples; returns false on a repeated
/// index, otherwise writes the merged tuple and the sign from counting
/// inversions of the concatenation.
bool merge_keys(const KForm::Key& s, const KForm::Key& t, KForm::Key& out, int& sign) {
  out.clear();
  out.reserve(s.size() + t.size());
  size_t i = 0, j = 0;
  int inversions = 0;
  while (i < s.size() && j < t.size()) {
    if (s[i] == t[j]) return false;
    if (s[i] < t[j]) {
      out.push_back(s[i++]);
    } else {
      // t[j] jumps over the remaining entries of s
      inversions += static_cast<int>(s.size() - i);
      out.push_back(t[j++]);
    }
  }
  while (i < s.size()) out.push_back(s[i++]);
  while (j < t.size()) out.push_back(t[j++]);
  sign = (inversions % 2 == 0) ? 1 : -1;
  return true;
}

}  // namespace

std::string KForm::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (int idx : key) out += "*" + frame_->name(idx);
  }
  return out;
}

std::string VectorField::str() const {
  std::string out;
  for (int i = 0; i < dim(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].str() + ")*" + frame_->name(i);
  }
  return out.empty() ? "0" : out;
}

VectorField EndoField::apply(const VectorField& v) const {
  ensure_same_frame(frame_, v.frame());
  if (ring_ != v.ring()) fail(ErrorKind::RingMismatch, "endo/vector ring mismatch");
  VectorField out(frame_, ring_);
  for (int i = 0; i < dim(); ++i) {
    Scalar acc = Scalar::zero(ring_);
    for (int j = 0; j < dim(); ++j) acc += mat_[i][j] * v[j];
    out.set(i, acc);
  }
  return out;
}

EndoField EndoField::compose(const EndoField& inner) const {
  ensure_same_frame(frame_, inner.frame());
  if (ring_ != inner.ring()) fail(ErrorKind::RingMismatch, "endo ring mismatch");
  EndoField out(frame_, ring_);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      Scalar acc = Scalar::zero(ring_);
      for (int k = 0; k < dim(); ++k) acc += mat_[i][k] * inner.mat_[k][j];
      out.mat_[i][j] = acc;
    }
  }
  return out;
}

EndoField EndoField::operator+(const EndoField& o) const {
  ensure_same_frame(frame_, o.frame_);
  if (ring_ != o.ring_) fail(ErrorKind::RingMismatch, "endo ring mismatch");
  EndoField out(frame_, ring_);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) out.mat_[i][j] = mat_[i][j] + o.mat_[i][j];
  }
  return out;
}

EndoField EndoField::operator-(const EndoField& o) const {
  return *this + o.scaled(-Scalar::one(ring_));
}

EndoField EndoField::scaled(const Scalar& c) const {
  EndoField out(frame_, ring_);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) out.mat_[i][j] = c * mat_[i][j];
  }
  return out;
}

KForm basis_covector(const FramePtr& frame, int i, Ring ring) {
  KForm a(frame, 1, ring);
  a.add_coeff({i}, Scalar::one(ring));
  return a;
}

VectorField basis_vector(const FramePtr& frame, int i, Ring ring) {
  VectorField v(frame, ring);
  v.set(i, Scalar::one(ring));
  return v;
}

KForm unit_form(const FramePtr& frame, Ring ring) {
  KForm a(frame, 0, ring);
  a.add_coeff({}, Scalar::one(ring));
  return a;
}

KForm zero_form(const FramePtr& frame, int degree, Ring ring) {
  return KForm(frame, degree, ring);
}

KForm operator+(const KForm& a, const KForm& b) {
  ensure_same(a, b);
  if (a.degree() != b.degree()) fail(ErrorKind::DegreeError, "adding forms of different degree");
  KForm out = a;
  for (const auto& [key, c] : b.coeffs()) out.add_coeff(key, c);
  return out;
}

KForm operator-(const KForm& a) {
  KForm out(a.frame(), a.degree(), a.ring());
  for (const auto& [key, c] : a.coeffs()) out.add_coeff(key, -c);
  return out;
}

KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }

KForm operator*(const Scalar& c, const KForm& a) {
  if (c.ring() != a.ring()) fail(ErrorKind::RingMismatch, "scalar/form ring mismatch");
  KForm out(a.frame(), a.degree(), a.ring());
  for (const auto& [key, cc] : a.coeffs()) out.add_coeff(key, c * cc);
  return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  ensure_same_frame(a.frame(), b.frame());
  if (a.ring() != b.ring()) fail(ErrorKind::RingMismatch, "vector ring mismatch");
  VectorField out(a.frame(), a.ring());
  for (int i = 0; i < a.dim(); ++i) out.set(i, a[i] + b[i]);
  return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  ensure_same_frame(a.frame(), b.frame());
  if (a.ring() != b.ring()) fail(ErrorKind::RingMismatch, "vector ring mismatch");
  VectorField out(a.frame(), a.ring());
  for (int i = 0; i < a.dim(); ++i) out.set(i, a[i] - b[i]);
  return out;
}

VectorField operator*(const Scalar& c, const VectorField& a) {
  if (c.ring() != a.ring()) fail(ErrorKind::RingMismatch, "scalar/vector ring mismatch");
  VectorField out(a.frame(), a.ring());
  for (int i = 0; i < a.dim(); ++i) out.set(i, c * a[i]);
  return out;
}

KForm to_ring(const KForm& a, Ring target) {
  KForm out(a.frame(), a.degree(), target);
  for (const auto& [key, c] : a.coeffs()) out.add_coeff(key, c.in_ring(target));
  return out;
}

VectorField to_ring(const VectorField& v, Ring target) {
  VectorField out(v.frame(), target);
  for (int i = 0; i < v.dim(); ++i) out.set(i, v[i].in_ring(target));
  return out;
}

EndoField to_ring(const EndoField& p, Ring target) {
  EndoField out(p.frame(), target);
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = 0; j < p.dim(); ++j) out.set(i, j, p.at(i, j).in_ring(target));
  }
  return out;
}

KForm specialize(const KForm& a, std::span<const Rational> point) {
  KForm out(a.frame(), a.degree(), Ring::rational());
  for (const auto& [key, c] : a.coeffs()) {
    out.add_coeff(key, Scalar(c.poly_value().eval(point)));
  }
  return out;
}

VectorField specialize(const VectorField& v, std::span<const Rational> point) {
  VectorField out(v.frame(), Ring::rational());
  for (int i = 0; i < v.dim(); ++i) {
    out.set(i, Scalar(v[i].poly_value().eval(point)));
  }
  return out;
}

EndoField specialize(const EndoField& p, std::span<const Rational> point) {
  EndoField out(p.frame(), Ring::rational());
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = 0; j < p.dim(); ++j) {
      out.set(i, j, Scalar(p.at(i, j).poly_value().eval(point)));
    }
  }
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  ensure_same(a, b);
  int deg = a.degree() + b.degree();
  if (deg > a.frame()->dim()) {
    return KForm(a.frame(), a.frame()->dim(), a.ring());  // zero top form
  }
  KForm out(a.frame(), deg, a.ring());
  KForm::Key merged;
  int sgn = 0;
  for (const auto& [s, ca] : a.coeffs()) {
    for (const auto& [t, cb] : b.coeffs()) {
      if (!merge_keys(s, t, merged, sgn)) continue;
      Scalar c = ca * cb;
      if (sgn < 0) c = -c;
      out.add_coeff(merged, c);
    }
  }
  return out;
}

KForm wedge_power(const KForm& a, int m) {
  if (m < 0) fail(ErrorKind::Precondition, "negative wedge power");
  KForm out = unit_form(a.frame(), a.ring());
  for (int i = 0; i < m; ++i) out = wedge(out, a);
  return out;
}

KForm interior(const VectorField& v, const KForm& a) {
  ensure_same_frame(v.frame(), a.frame());
  if (v.ring() != a.ring()) fail(ErrorKind::RingMismatch, "vector/form ring mismatch");
  if (a.degree() == 0) fail(ErrorKind::DegreeError, "interior product of a 0-form");
  KForm out(a.frame(), a.degree() - 1, a.ring());
  for (const auto& [key, c] : a.coeffs()) {
    for (size_t pos = 0; pos < key.size(); ++pos) {
      const Scalar& vc = v[key[pos]];
      if (vc.is_zero()) continue;
      KForm::Key rest;
      rest.reserve(key.size() - 1);
      for (size_t q = 0; q < key.size(); ++q) {
        if (q != pos) rest.push_back(key[q]);
      }
      Scalar term = vc * c;
      if (pos % 2 == 1) term = -term;
      out.add_coeff(rest, term);
    }
  }
  return out;
}

KForm ext_d(const KForm& a) {
  const FramePtr& frame = a.frame();
  Ring ring = a.ring();
  if (a.degree() >= frame->dim()) return KForm(frame, frame->dim(), ring);
  if (a.degree() == 0) return KForm(frame, 1, ring);  // constants

  // d e^k, cached per target index on demand
  auto d_basis = [&](int k) {
    KForm dk(frame, 2, ring);
    for (const auto& [pair, coeffs] : frame->brackets()) {
      auto it = coeffs.find(k);
      if (it == coeffs.end() || it->second == 0) continue;
      dk.add_coeff({pair.first, pair.second}, Scalar(-it->second).in_ring(ring));
    }
    return dk;
  };

  KForm out(frame, a.degree() + 1, ring);
  for (const auto& [key, c] : a.coeffs()) {
    // antiderivation over the factors of e^{key}
    for (size_t pos = 0; pos < key.size(); ++pos) {
      KForm left = unit_form(frame, ring);
      for (size_t q = 0; q < pos; ++q) left = wedge(left, basis_covector(frame, key[q], ring));
      KForm mid = d_basis(key[pos]);
      KForm right = unit_form(frame, ring);
      for (size_t q = pos + 1; q < key.size(); ++q) {
        right = wedge(right, basis_covector(frame, key[q], ring));
      }
      Scalar sgn = (pos % 2 == 0) ? Scalar::one(ring) : -Scalar::one(ring);
      out = out + (c * sgn) * wedge(left, wedge(mid, right));
    }
  }
  return out;
}

Scalar eval(const KForm& a, std::span<const VectorField> vectors) {
  if (static_cast<int>(vectors.size()) != a.degree()) {
    fail(ErrorKind::Precondition, "eval arity does not match form degree");
  }
  Ring ring = a.ring();
  for (const auto& v : vectors) {
    ensure_same_frame(a.frame(), v.frame());
    if (v.ring() != ring) fail(ErrorKind::RingMismatch, "eval vector ring mismatch");
  }
  int k = a.degree();
  Scalar total = Scalar::zero(ring);
  // e^S(v_1..v_k) = sum over permutations sigma of sign(sigma) prod v_{sigma(r)}[S_r]
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& [key, c] : a.coeffs()) {
    Scalar det = Scalar::zero(ring);
    std::vector<int> p = perm;
    // iterate permutations with explicit parity
    std::sort(p.begin(), p.end());
    do {
      int inv = 0;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (p[i] > p[j]) ++inv;
        }
      }
      Scalar prod = Scalar::one(ring);
      for (int r = 0; r < k; ++r) prod *= vectors[p[r]][key[r]];
      det += (inv % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(p.begin(), p.end()));
    total += c * det;
  }
  return total;
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  ensure_same_frame(v.frame(), w.frame());
  if (v.ring() != w.ring()) fail(ErrorKind::RingMismatch, "bracket ring mismatch");
  Ring ring = v.ring();
  VectorField out(v.frame(), ring);
  for (const auto& [pair, coeffs] : v.frame()->brackets()) {
    auto [i, j] = pair;
    Scalar factor = v[i] * w[j] - v[j] * w[i];
    if (factor.is_zero()) continue;
    for (const auto& [k, c] : coeffs) {
      out.set(k, out[k] + factor * Scalar(c).in_ring(ring));
    }
  }
  return out;
}

KForm lie_derivative(const VectorField& v, const KForm& one_form) {
  if (one_form.degree() != 1) {
    fail(ErrorKind::DegreeError, "lie_derivative expects a 1-form");
  }
  ensure_same_frame(v.frame(), one_form.frame());
  if (v.ring() != one_form.ring()) fail(ErrorKind::RingMismatch, "ring mismatch");
  Ring ring = v.ring();
  const FramePtr& frame = v.frame();
  KForm out(frame, 1, ring);
  for (int j = 0; j < frame->dim(); ++j) {
    VectorField vw = bracket(v, basis_vector(frame, j, ring));
    Scalar val = Scalar::zero(ring);
    for (const auto& [key, c] : one_form.coeffs()) val += c * vw[key[0]];
    out.add_coeff({j}, -val);
  }
  return out;
}

EndoField lie_derivative(const VectorField& v, const EndoField& p) {
  ensure_same_frame(v.frame(), p.frame());
  if (v.ring() != p.ring()) fail(ErrorKind::RingMismatch, "ring mismatch");
  Ring ring = v.ring();
  const FramePtr& frame = v.frame();
  EndoField out(frame, ring);
  for (int j = 0; j < frame->dim(); ++j) {
    VectorField ej = basis_vector(frame, j, ring);
    VectorField col = bracket(v, p.apply(ej)) - p.apply(bracket(v, ej));
    for (int i = 0; i < frame->dim(); ++i) out.set(i, j, col[i]);
  }
  return out;
}

}  // namespace cosym
