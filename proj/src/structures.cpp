#include "cosym/structures.hpp"

#include "cosym/linalg.hpp"

namespace cosym {

AlmostCosym make_structure(KForm eta, KForm omega) {
  ensure_same_frame(eta.frame(), omega.frame());
  if (eta.ring() != omega.ring()) fail(ErrorKind::RingMismatch, "eta/omega ring mismatch");
  if (eta.degree() != 1) fail(ErrorKind::DegreeError, "eta must be a 1-form");
  if (omega.degree() != 2) fail(ErrorKind::DegreeError, "omega must be a 2-form");
  int dim = eta.frame()->dim();
  if (dim % 2 == 0) fail(ErrorKind::Precondition, "almost cosymplectic structures need odd dimension");
  int n = (dim - 1) / 2;
  KForm vol = wedge(eta, wedge_power(omega, n));
  AlmostCosym s{eta.frame(), std::move(eta), std::move(omega), n, !vol.is_zero()};
  return s;
}

KForm volume_form(const AlmostCosym& s) {
  return wedge(s.eta, wedge_power(s.omega, s.n));
}

ReebSolution reeb_with_denominator(const AlmostCosym& s) {
  const FramePtr& frame = s.frame;
  Ring ring = s.eta.ring();
  int dim = frame->dim();
  // Unknown xi: dim + 1 equations -- eta(xi) = 1 and omega(xi, e_j) = 0.
  Matrix a;
  Column b;
  {
    Column row(dim, Scalar::zero(ring));
    for (const auto& [key, c] : s.eta.coeffs()) row[key[0]] = c;
    a.push_back(std::move(row));
    b.push_back(Scalar::one(ring));
  }
  for (int j = 0; j < dim; ++j) {
    Column row(dim, Scalar::zero(ring));
    for (const auto& [key, c] : s.omega.coeffs()) {
      // omega = sum c e^p ^ e^q: omega(x, e_j) = sum c (x_p d_qj - x_q d_pj)
      int p = key[0], q = key[1];
      if (q == j) row[p] += c;
      if (p == j) row[q] -= c;
    }
    a.push_back(std::move(row));
    b.push_back(Scalar::zero(ring));
  }
  LinearSolution sol = solve_linear(std::move(a), std::move(b), ring);
  VectorField xi(frame, ring);
  for (int i = 0; i < dim; ++i) xi.set(i, sol.numerator[i]);

  // re-verify the defining equations (scaled by the denominator)
  KForm eta_val = interior(xi, s.eta);
  KForm expected(frame, 0, ring);
  expected.add_coeff({}, sol.denominator);
  if (eta_val != expected || !interior(xi, s.omega).is_zero()) {
    fail(ErrorKind::SingularSystem, "Reeb solution failed re-verification");
  }
  return {std::move(xi), sol.denominator};
}

VectorField reeb(const AlmostCosym& s) {
  ReebSolution sol = reeb_with_denominator(s);
  Ring ring = sol.field.ring();
  if (sol.denominator == Scalar::one(ring)) return sol.field;
  if (ring.is_rational()) {
    return (Scalar::one(ring) / sol.denominator) * sol.field;
  }
  // divide out when exact, else the caller must use reeb_with_denominator
  VectorField out(sol.field.frame(), ring);
  for (int i = 0; i < out.dim(); ++i) out.set(i, sol.field[i] / sol.denominator);
  return out;
}

StructureClass classify(const AlmostCosym& s) {
  KForm d_eta = ext_d(s.eta);
  KForm d_omega = ext_d(s.omega);
  StructureKind kind = StructureKind::Neither;
  if (d_eta == s.omega) {
    kind = StructureKind::Contact;
  } else if (d_eta.is_zero() && d_omega.is_zero()) {
    kind = StructureKind::Cosymplectic;
  }
  return {kind, std::move(d_eta), std::move(d_omega)};
}

ClassReport cartan_class(const KForm& eta) {
  if (eta.degree() != 1) fail(ErrorKind::DegreeError, "cartan_class expects a 1-form");
  if (eta.is_zero()) fail(ErrorKind::Precondition, "cartan_class of the zero form");
  KForm d_eta = ext_d(eta);
  int s = 0;
  KForm pw = unit_form(eta.frame(), eta.ring());
  for (;;) {
    KForm next = wedge(pw, d_eta);
    if (next.is_zero()) break;
    pw = std::move(next);
    ++s;
  }
  KForm mixed = wedge(eta, pw);
  int cls = mixed.is_zero() ? 2 * s : 2 * s + 1;
  return {cls, s, std::move(pw), std::move(mixed)};
}

}  // namespace cosym
