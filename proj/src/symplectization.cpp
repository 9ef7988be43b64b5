#include "cosym/symplectization.hpp"

#include "cosym/exterior.hpp"
#include "cosym/linalg.hpp"

namespace cosym {

namespace {

/// Antisymmetric flat-map matrix B[i][j] = w(e_i, e_j).
Matrix flat_matrix(const KForm& w) {
  int dim = w.frame()->dim();
  Matrix b(dim, Column(dim, Scalar::zero(w.ring())));
  for (const auto& [key, c] : w.coeffs()) {
    b[key[0]][key[1]] = c;
    b[key[1]][key[0]] = -c;
  }
  return b;
}

KForm::Key full_key(int dim) {
  KForm::Key key;
  for (int i = 0; i < dim; ++i) key.push_back(i);
  return key;
}

}  // namespace

FramePtr extend_frame(const FramePtr& base, const std::string& t_name) {
  return base->extended({t_name});
}

KForm lift(const KForm& a, const FramePtr& ext) {
  if (ext->dim() <= a.frame()->dim()) {
    fail(ErrorKind::FrameMismatch, "lift target is not an extension");
  }
  KForm out(ext, a.degree(), a.ring());
  for (const auto& [key, c] : a.coeffs()) out.add_coeff(key, c);
  return out;
}

KForm symplectize(const AlmostCosym& s, const std::string& t_name) {
  FramePtr ext = extend_frame(s.frame, t_name);
  KForm dt = basis_covector(ext, ext->dim() - 1, s.eta.ring());
  KForm omega = wedge(dt, lift(s.eta, ext)) + lift(s.omega, ext);
  bool closed = ext_d(omega).is_zero();
  bool cosym = classify(s).kind == StructureKind::Cosymplectic;
  if (closed != cosym) {
    fail(ErrorKind::Precondition, "symplectization closedness cross-check disagreement");
  }
  return omega;
}

CoupleReport couple_check(const KForm& w1, const KForm& w2) {
  ensure_same_frame(w1.frame(), w2.frame());
  if (w1.degree() != 2 || w2.degree() != 2) {
    fail(ErrorKind::DegreeError, "couple_check expects 2-forms");
  }
  int dim = w1.frame()->dim();
  if (dim % 2 != 0) fail(ErrorKind::Precondition, "couple_check needs an even-dimensional frame");
  int m = dim / 2;

  CoupleReport r{m, wedge_power(w1, m), wedge_power(w2, m), wedge(w1, w2)};
  r.closed1 = ext_d(w1).is_zero();
  r.closed2 = ext_d(w2).is_zero();
  r.orthogonal = r.cross.is_zero();
  r.equal_tops = r.w1_top == r.w2_top;

  // positive orientation is dt ^ (base volume), i.e. (-1)^{dim-1} times the
  // ascending basis top form (the R direction is last)
  int ref = (dim - 1) % 2 == 0 ? 1 : -1;
  auto top_sign = [&](const KForm& top) {
    Scalar c = top.coeff(full_key(dim));
    if (c.is_zero()) return 0;
    if (!c.is_rational()) fail(ErrorKind::RingMismatch, "orientation needs rational coefficients");
    return c.rational_value().sign() * ref;
  };
  r.sign1 = top_sign(r.w1_top);
  r.sign2 = top_sign(r.w2_top);

  if (dim == 4) {
    r.couple = r.orthogonal && r.sign1 > 0 && r.sign2 > 0;
    r.conformal = r.couple && r.equal_tops && r.closed1 && r.closed2;
  }
  return r;
}

EndoField recursion_operator(const KForm& w1, const KForm& w2) {
  ensure_same_frame(w1.frame(), w2.frame());
  if (w1.degree() != 2 || w2.degree() != 2) {
    fail(ErrorKind::DegreeError, "recursion operator expects 2-forms");
  }
  Ring ring = w1.ring();
  if (ring != w2.ring() || !ring.is_rational()) {
    fail(ErrorKind::RingMismatch, "recursion operator needs rational coefficients");
  }
  int dim = w1.frame()->dim();
  Matrix b1 = flat_matrix(w1);
  Matrix b2inv = invert(flat_matrix(w2), ring);

  EndoField j(w1.frame(), ring);
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) {
      Scalar acc = Scalar::zero(ring);
      for (int k = 0; k < dim; ++k) acc += b2inv[row][k] * b1[k][col];
      j.set(row, col, acc);
    }
  }
  for (int k = 0; k < dim; ++k) {
    VectorField ek = basis_vector(w1.frame(), k, ring);
    if (interior(ek, w1) != interior(j.apply(ek), w2)) {
      fail(ErrorKind::SingularSystem, "recursion identity failed re-verification");
    }
  }
  return j;
}

bool squares_to_minus_identity(const EndoField& j) {
  EndoField sq = j.compose(j);
  EndoField minus_id =
      EndoField::identity(j.frame(), j.ring()).scaled(-Scalar::one(j.ring()));
  return sq == minus_id;
}

}  // namespace cosym
