#include "cosym/contact3.hpp"

#include <utility>

#include "cosym/symplectization.hpp"

namespace cosym {

namespace {

bool zero_mod(const Scalar& s) { return s.reduce_sphere().is_zero(); }

bool zero_mod(const EndoField& p) {
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = 0; j < p.dim(); ++j) {
      if (!zero_mod(p.at(i, j))) return false;
    }
  }
  return true;
}

bool zero_mod(const VectorField& v) {
  for (int i = 0; i < v.dim(); ++i) {
    if (!zero_mod(v[i])) return false;
  }
  return true;
}

bool zero_mod(const KForm& a) {
  for (const auto& [key, c] : a.coeffs()) {
    if (!zero_mod(c)) return false;
  }
  return true;
}

/// (eta (x) xi)[i][j] = xi_i eta(e_j).
EndoField outer(const VectorField& xi, const KForm& eta) {
  EndoField out(xi.frame(), xi.ring());
  for (int i = 0; i < xi.dim(); ++i) {
    for (int j = 0; j < xi.dim(); ++j) {
      out.set(i, j, xi[i] * eta.coeff({j}));
    }
  }
  return out;
}

/// (eta o phi)(e_j) = eta(phi e_j).
KForm compose_form(const KForm& eta, const EndoField& phi) {
  KForm out(eta.frame(), 1, eta.ring());
  for (int j = 0; j < phi.dim(); ++j) {
    Scalar acc = Scalar::zero(eta.ring());
    for (int i = 0; i < phi.dim(); ++i) acc += eta.coeff({i}) * phi.at(i, j);
    out.add_coeff({j}, acc);
  }
  return out;
}

/// w(e_i, e_j) for a 2-form.
Scalar two_form_value(const KForm& w, int i, int j) {
  if (i == j) return Scalar::zero(w.ring());
  if (i < j) return w.coeff({i, j});
  return -w.coeff({j, i});
}

Matrix matmul(const Matrix& a, const Matrix& b, Ring ring) {
  int n = static_cast<int>(a.size());
  Matrix out(n, Column(n, Scalar::zero(ring)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Matrix flat_matrix(const KForm& w) {
  int dim = w.frame()->dim();
  Matrix b(dim, Column(dim, Scalar::zero(w.ring())));
  for (const auto& [key, c] : w.coeffs()) {
    b[key[0]][key[1]] = c;
    b[key[1]][key[0]] = -c;
  }
  return b;
}

/// eta([v, w]) evaluated through the structure constants directly.
Scalar eta_of_bracket(const KForm& eta, const VectorField& v, const VectorField& w) {
  VectorField b = bracket(v, w);
  Scalar acc = Scalar::zero(eta.ring());
  for (int k = 0; k < b.dim(); ++k) acc += eta.coeff({k}) * b[k];
  return acc;
}

/// Rows of the linear system i_X w = 0 (one row per basis covector slot).
void append_contraction_rows(Matrix& rows, const KForm& w, Ring ring) {
  int dim = w.frame()->dim();
  for (int j = 0; j < dim; ++j) {
    Column row(dim, Scalar::zero(ring));
    for (const auto& [key, c] : w.coeffs()) {
      int p = key[0], q = key[1];
      if (q == j) row[p] += c;
      if (p == j) row[q] -= c;
    }
    rows.push_back(std::move(row));
  }
}

Column eta_row(const KForm& eta, Ring ring) {
  Column row(eta.frame()->dim(), Scalar::zero(ring));
  for (const auto& [key, c] : eta.coeffs()) row[key[0]] = c;
  return row;
}

VectorField concomitant_value(const EndoField& p, const EndoField& q,
                              const VectorField& x, const VectorField& y) {
  VectorField px = p.apply(x), py = p.apply(y);
  VectorField qx = q.apply(x), qy = q.apply(y);
  VectorField b = bracket(x, y);
  VectorField out = bracket(px, qy) - p.apply(bracket(qx, y)) -
                    q.apply(bracket(x, py)) + bracket(qx, py) -
                    q.apply(bracket(px, y)) - p.apply(bracket(x, qy));
  return out + p.apply(q.apply(b)) + q.apply(p.apply(b));
}

}  // namespace

Certificate verify_almost_contact(const EndoField& phi, const VectorField& xi,
                                  const KForm& eta) {
  ensure_same_frame(phi.frame(), xi.frame());
  ensure_same_frame(phi.frame(), eta.frame());
  Ring ring = phi.ring();
  if (xi.ring() != ring || eta.ring() != ring) {
    fail(ErrorKind::RingMismatch, "phi/xi/eta ring mismatch");
  }
  if (eta.degree() != 1) fail(ErrorKind::DegreeError, "eta must be a 1-form");

  EndoField defect =
      phi.compose(phi) + EndoField::identity(phi.frame(), ring) -
      outer(xi, eta);
  bool square_ok = zero_mod(defect);
  Scalar pairing = interior(xi, eta).coeff({}) - Scalar::one(ring);
  bool pairing_ok = zero_mod(pairing);
  bool eta_phi_ok = zero_mod(compose_form(eta, phi));
  bool phi_xi_ok = zero_mod(phi.apply(xi));

  nlohmann::json details;
  details["phi_square_identity"] = square_ok;
  details["eta_xi_pairing"] = pairing_ok;
  details["eta_circ_phi_zero"] = eta_phi_ok;
  details["phi_xi_zero"] = phi_xi_ok;
  details["ring"] = ring.str();
  if (ring.is_rational()) {
    Matrix m(phi.dim(), Column(phi.dim(), Scalar::zero(ring)));
    for (int i = 0; i < phi.dim(); ++i) {
      for (int j = 0; j < phi.dim(); ++j) m[i][j] = phi.at(i, j);
    }
    details["phi_rank"] = rank(std::move(m), ring);
  }
  std::string method =
      ring.is_rational() ? "axioms" : "axioms-mod-sphere-ideal";
  if (square_ok && pairing_ok && eta_phi_ok && phi_xi_ok) {
    return {Verdict::Verified, method, std::move(details)};
  }
  return {Verdict::Refuted, method, std::move(details)};
}

AlmostContact make_almost_contact(EndoField phi, VectorField xi, KForm eta) {
  Certificate c = verify_almost_contact(phi, xi, eta);
  if (!c.ok()) {
    fail(ErrorKind::Precondition,
         "not an almost contact structure: " + c.details.dump());
  }
  FramePtr frame = phi.frame();
  return {std::move(frame), std::move(phi), std::move(xi), std::move(eta)};
}

MetricTensor make_metric(FramePtr frame, Matrix g) {
  int dim = frame->dim();
  if (static_cast<int>(g.size()) != dim) {
    fail(ErrorKind::Precondition, "metric dimension mismatch");
  }
  Ring ring = Ring::rational();
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(g[i].size()) != dim) {
      fail(ErrorKind::Precondition, "metric dimension mismatch");
    }
    for (int j = 0; j < dim; ++j) {
      if (g[i][j].ring() != ring) {
        fail(ErrorKind::RingMismatch, "metric must be rational");
      }
      if (g[i][j] != g[j][i]) fail(ErrorKind::Precondition, "metric not symmetric");
    }
  }
  for (int k = 1; k <= dim; ++k) {
    Matrix minor(k, Column(k, Scalar::zero(ring)));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) minor[i][j] = g[i][j];
    }
    if (determinant(std::move(minor), ring).rational_value() <= 0) {
      fail(ErrorKind::Precondition, "metric not positive-definite");
    }
  }
  return {std::move(frame), std::move(g)};
}

MetricTensor identity_metric(FramePtr frame) {
  int dim = frame->dim();
  Matrix g(dim, Column(dim, Scalar::zero(Ring::rational())));
  for (int i = 0; i < dim; ++i) g[i][i] = Scalar::one(Ring::rational());
  return {std::move(frame), std::move(g)};
}

Certificate verify_compatible_metric(const MetricTensor& g, const AlmostContact& s) {
  ensure_same_frame(g.frame, s.frame);
  Ring ring = s.phi.ring();
  int dim = s.frame->dim();
  auto gij = [&](int i, int j) { return g.g[i][j].in_ring(ring); };

  // g(phi e_i, phi e_j) - g(e_i, e_j) + eta(e_i) eta(e_j) = 0
  bool ok = true;
  nlohmann::json details;
  for (int i = 0; i < dim && ok; ++i) {
    for (int j = 0; j < dim && ok; ++j) {
      Scalar lhs = Scalar::zero(ring);
      for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
          lhs += s.phi.at(a, i) * gij(a, b) * s.phi.at(b, j);
        }
      }
      Scalar defect = lhs - gij(i, j) + s.eta.coeff({i}) * s.eta.coeff({j});
      if (!zero_mod(defect)) {
        ok = false;
        details["pair"] = {i + 1, j + 1};
        details["defect"] = defect.reduce_sphere().str();
      }
    }
  }
  std::string method = ring.is_rational() ? "compatibility" : "compatibility-mod-sphere-ideal";
  if (ok) return {Verdict::Verified, method, std::move(details)};
  return {Verdict::Refuted, method, std::move(details)};
}

KForm fundamental_form(const MetricTensor& g, const AlmostContact& s) {
  ensure_same_frame(g.frame, s.frame);
  Ring ring = s.phi.ring();
  int dim = s.frame->dim();
  // Omega(e_i, e_j) = g(e_i, phi e_j) = (G phi)[i][j]
  KForm omega(s.frame, 2, ring);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Scalar a = Scalar::zero(ring);
      for (int k = 0; k < dim; ++k) a += g.g[i][k].in_ring(ring) * s.phi.at(k, j);
      if (i == j) {
        if (!a.is_zero()) fail(ErrorKind::Precondition, "fundamental form not antisymmetric");
      } else if (i < j) {
        omega.add_coeff({i, j}, a);
      } else {
        Scalar b = Scalar::zero(ring);
        for (int k = 0; k < dim; ++k) b += g.g[j][k].in_ring(ring) * s.phi.at(k, i);
        if (a + b != Scalar::zero(ring)) {
          fail(ErrorKind::Precondition, "fundamental form not antisymmetric");
        }
      }
    }
  }
  return omega;
}

Certificate verify_3_structure(const std::array<AlmostContact, 3>& s) {
  for (const auto& t : s) {
    ensure_same_frame(s[0].frame, t.frame);
    if (t.phi.ring() != s[0].phi.ring()) {
      fail(ErrorKind::RingMismatch, "3-structure ring mismatch");
    }
  }
  nlohmann::json details;
  const int perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& perm : perms) {
    int a = perm[0], b = perm[1], c = perm[2];
    auto record = [&](const char* what) {
      details["relation"] = what;
      details["permutation"] = {a + 1, b + 1, c + 1};
    };
    if (!zero_mod(s[c].phi - (s[a].phi.compose(s[b].phi) - outer(s[a].xi, s[b].eta)))) {
      record("phi_c = phi_a phi_b - eta_b (x) xi_a");
      return {Verdict::Refuted, "3-structure-relations", std::move(details)};
    }
    if (!zero_mod(s[c].phi - (s[b].phi.compose(s[a].phi).scaled(-Scalar::one(s[c].phi.ring())) +
                              outer(s[b].xi, s[a].eta)))) {
      record("phi_c = -phi_b phi_a + eta_a (x) xi_b");
      return {Verdict::Refuted, "3-structure-relations", std::move(details)};
    }
    if (!zero_mod(s[c].xi - s[a].phi.apply(s[b].xi))) {
      record("xi_c = phi_a xi_b");
      return {Verdict::Refuted, "3-structure-relations", std::move(details)};
    }
    if (!zero_mod(s[c].xi + s[b].phi.apply(s[a].xi))) {
      record("xi_c = -phi_b xi_a");
      return {Verdict::Refuted, "3-structure-relations", std::move(details)};
    }
    if (!zero_mod(s[c].eta - compose_form(s[a].eta, s[b].phi))) {
      record("eta_c = eta_a o phi_b");
      return {Verdict::Refuted, "3-structure-relations", std::move(details)};
    }
    if (!zero_mod(s[c].eta + compose_form(s[b].eta, s[a].phi))) {
      record("eta_c = -eta_b o phi_a");
      return {Verdict::Refuted, "3-structure-relations", std::move(details)};
    }
  }
  return {Verdict::Verified, "3-structure-relations", std::move(details)};
}

AC3 make_ac3(std::array<AlmostContact, 3> s, std::optional<MetricTensor> g) {
  Certificate c = verify_3_structure(s);
  if (!c.ok()) {
    fail(ErrorKind::Precondition, "not a 3-structure: " + c.details.dump());
  }
  if (g) {
    for (const auto& t : s) {
      if (!verify_compatible_metric(*g, t).ok()) {
        fail(ErrorKind::Precondition, "metric incompatible with a structure");
      }
    }
  }
  FramePtr frame = s[0].frame;
  return {std::move(frame), std::move(s), std::move(g)};
}

TwoOneTensor::TwoOneTensor(FramePtr frame, Ring ring, bool scalar_valued, bool unary)
    : frame_(std::move(frame)),
      ring_(ring),
      scalar_valued_(scalar_valued),
      unary_(unary) {
  int dim = frame_->dim();
  int out = scalar_valued_ ? 1 : dim;
  int second = unary_ ? 1 : dim;
  t_.assign(out, std::vector<std::vector<Scalar>>(
                     dim, std::vector<Scalar>(second, Scalar::zero(ring))));
}

void TwoOneTensor::set(int k, int i, int j, Scalar c) {
  if (c.ring() != ring_) fail(ErrorKind::RingMismatch, "tensor entry ring mismatch");
  t_[k][i][j] = std::move(c);
}

void TwoOneTensor::add(int k, int i, int j, const Scalar& c) {
  t_[k][i][j] += c;
}

bool TwoOneTensor::is_zero() const {
  for (const auto& plane : t_) {
    for (const auto& row : plane) {
      for (const auto& c : row) {
        if (!c.reduce_sphere().is_zero()) return false;
      }
    }
  }
  return true;
}

bool TwoOneTensor::operator==(const TwoOneTensor& o) const {
  return ring_ == o.ring_ && scalar_valued_ == o.scalar_valued_ &&
         unary_ == o.unary_ && t_ == o.t_ &&
         (frame_.get() == o.frame_.get() || *frame_ == *o.frame_);
}

TwoOneTensor TwoOneTensor::operator+(const TwoOneTensor& o) const {
  TwoOneTensor out = *this;
  for (int k = 0; k < out_dim(); ++k) {
    for (int i = 0; i < arg_dim(); ++i) {
      for (int j = 0; j < second_dim(); ++j) out.t_[k][i][j] += o.t_[k][i][j];
    }
  }
  return out;
}

TwoOneTensor TwoOneTensor::scaled(const Scalar& c) const {
  TwoOneTensor out = *this;
  for (auto& plane : out.t_) {
    for (auto& row : plane) {
      for (auto& v : row) v *= c;
    }
  }
  return out;
}

TwoOneTensor nijenhuis_concomitant(const EndoField& p, const EndoField& q) {
  ensure_same_frame(p.frame(), q.frame());
  if (p.ring() != q.ring()) fail(ErrorKind::RingMismatch, "concomitant ring mismatch");
  int dim = p.dim();
  Ring ring = p.ring();
  TwoOneTensor out(p.frame(), ring);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      VectorField x = basis_vector(p.frame(), i, ring);
      VectorField y = basis_vector(p.frame(), j, ring);
      VectorField v = concomitant_value(p, q, x, y);
      VectorField w = concomitant_value(q, p, x, y);
      if (v != w) fail(ErrorKind::Precondition, "concomitant symmetry failed");
      for (int k = 0; k < dim; ++k) out.set(k, i, j, v[k]);
    }
  }
  return out;
}

NTensors n_tensors(const AC3& t, int alpha, int beta) {
  if (alpha < 0 || alpha > 2 || beta < 0 || beta > 2) {
    fail(ErrorKind::Precondition, "structure index out of range");
  }
  const AlmostContact& a = t.s[alpha];
  const AlmostContact& b = t.s[beta];
  Ring ring = a.phi.ring();
  int dim = t.frame->dim();
  Scalar half = Scalar(Rational(1, 2)).in_ring(ring);

  KForm da = ext_d(a.eta);  // our convention: twice the 1/2-convention d
  KForm db = ext_d(b.eta);

  TwoOneTensor n1 = nijenhuis_concomitant(a.phi, b.phi);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Scalar wa = half * two_form_value(da, i, j);
      Scalar wb = half * two_form_value(db, i, j);
      for (int k = 0; k < dim; ++k) {
        n1.add(k, i, j, wa * b.xi[k] + wb * a.xi[k]);
      }
    }
  }

  TwoOneTensor n2(t.frame, ring, true);
  for (int i = 0; i < dim; ++i) {
    VectorField ei = basis_vector(t.frame, i, ring);
    KForm la = lie_derivative(a.phi.apply(ei), b.eta);
    KForm lb = lie_derivative(b.phi.apply(ei), a.eta);
    for (int j = 0; j < dim; ++j) {
      VectorField ej = basis_vector(t.frame, j, ring);
      Scalar v = la.coeff({j}) + lb.coeff({j}) -
                 lie_derivative(a.phi.apply(ej), b.eta).coeff({i}) -
                 lie_derivative(b.phi.apply(ej), a.eta).coeff({i});
      n2.set(0, i, j, v);
    }
  }

  EndoField l3 = lie_derivative(a.xi, b.phi) + lie_derivative(b.xi, a.phi);
  TwoOneTensor n3(t.frame, ring, false, true);
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < dim; ++i) n3.set(k, i, 0, l3.at(k, i));
  }

  KForm l4 = lie_derivative(a.xi, b.eta) + lie_derivative(b.xi, a.eta);
  TwoOneTensor n4(t.frame, ring, true, true);
  for (int i = 0; i < dim; ++i) n4.set(0, i, 0, l4.coeff({i}));

  if (alpha == beta) {
    // dual-route check against the direct-expansion fundamental tensors
    NTensors f = fundamental_tensors(a);
    Scalar two = Scalar(2).in_ring(ring);
    if (n1 != f.n1 || n2.scaled(two) != f.n2 || n3.scaled(two) != f.n3 ||
        n4.scaled(two) != f.n4) {
      fail(ErrorKind::Precondition, "N-tensor single-structure cross-check failed");
    }
  }
  return {std::move(n1), std::move(n2), std::move(n3), std::move(n4)};
}

NTensors fundamental_tensors(const AlmostContact& s) {
  Ring ring = s.phi.ring();
  int dim = s.frame->dim();
  Scalar two = Scalar(2).in_ring(ring);

  TwoOneTensor n1(s.frame, ring);
  TwoOneTensor n2(s.frame, ring, true);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      VectorField x = basis_vector(s.frame, i, ring);
      VectorField y = basis_vector(s.frame, j, ring);
      VectorField fx = s.phi.apply(x), fy = s.phi.apply(y);
      // Nijenhuis torsion of phi, written out directly
      VectorField nij = bracket(fx, fy) - s.phi.apply(bracket(fx, y)) -
                        s.phi.apply(bracket(x, fy)) +
                        s.phi.apply(s.phi.apply(bracket(x, y)));
      Scalar deta = -eta_of_bracket(s.eta, x, y);  // 2 d_half eta(x, y)
      for (int k = 0; k < dim; ++k) {
        n1.set(k, i, j, two * nij[k] + deta * s.xi[k]);
      }
      // 4 [(L_{phi x} eta)(y) - (L_{phi y} eta)(x)], L written out directly
      Scalar v = -eta_of_bracket(s.eta, fx, y) + eta_of_bracket(s.eta, fy, x);
      n2.set(0, i, j, two * two * v);
    }
  }

  TwoOneTensor n3(s.frame, ring, false, true);
  TwoOneTensor n4(s.frame, ring, true, true);
  for (int i = 0; i < dim; ++i) {
    VectorField y = basis_vector(s.frame, i, ring);
    // (L_xi phi)(y) = [xi, phi y] - phi [xi, y]
    VectorField l = bracket(s.xi, s.phi.apply(y)) - s.phi.apply(bracket(s.xi, y));
    for (int k = 0; k < dim; ++k) n3.set(k, i, 0, two * two * l[k]);
    n4.set(0, i, 0, -two * two * eta_of_bracket(s.eta, s.xi, y));
  }
  return {std::move(n1), std::move(n2), std::move(n3), std::move(n4)};
}

AlmostContact lambda_structure(const AC3& t, std::span<const Rational> point) {
  if (point.size() != 3) fail(ErrorKind::Precondition, "lambda point needs three coordinates");
  Rational norm = 0;
  for (const auto& x : point) norm += x * x;
  if (norm != 1) fail(ErrorKind::Precondition, "lambda point not on the unit sphere");
  Ring ring = t.s[0].phi.ring();
  EndoField phi(t.frame, ring);
  VectorField xi(t.frame, ring);
  KForm eta(t.frame, 1, ring);
  for (int a = 0; a < 3; ++a) {
    Scalar c = Scalar(point[a]).in_ring(ring);
    phi = phi + t.s[a].phi.scaled(c);
    xi = xi + c * t.s[a].xi;
    eta = eta + c * t.s[a].eta;
  }
  return make_almost_contact(std::move(phi), std::move(xi), std::move(eta));
}

AlmostContact lambda_structure_symbolic(const AC3& t) {
  Ring ring = Ring::lambda(3);
  if (!t.s[0].phi.ring().is_rational()) {
    fail(ErrorKind::RingMismatch, "symbolic lambda-structure needs rational generators");
  }
  EndoField phi(t.frame, ring);
  VectorField xi(t.frame, ring);
  KForm eta(t.frame, 1, ring);
  for (int a = 0; a < 3; ++a) {
    Scalar c = Scalar::lambda(ring, a);
    phi = phi + to_ring(t.s[a].phi, ring).scaled(c);
    xi = xi + c * to_ring(t.s[a].xi, ring);
    eta = eta + c * to_ring(t.s[a].eta, ring);
  }
  return make_almost_contact(std::move(phi), std::move(xi), std::move(eta));
}

CharDistributions char_distributions(const AC3& t) {
  Ring ring = Ring::rational();
  if (!t.s[0].phi.ring().is_rational()) {
    fail(ErrorKind::RingMismatch, "characteristic distributions need rational structures");
  }
  int dim = t.frame->dim();
  CharDistributions out;
  out.c_dims_match = true;
  Matrix h_rows, e_rows;
  for (const auto& s : t.s) {
    KForm d_eta = ext_d(s.eta);
    Matrix rows{eta_row(s.eta, ring)};
    append_contraction_rows(rows, d_eta, ring);
    auto kern = kernel_basis(std::move(rows), ring);
    out.cartan_classes.push_back(cartan_class(s.eta).cartan_class);
    if (static_cast<int>(kern.size()) != dim - out.cartan_classes.back()) {
      out.c_dims_match = false;
    }
    out.c_alpha.push_back(std::move(kern));
    h_rows.push_back(eta_row(s.eta, ring));
    e_rows.push_back(eta_row(s.eta, ring));
    append_contraction_rows(e_rows, d_eta, ring);
  }
  out.horizontal = kernel_basis(std::move(h_rows), ring);
  out.e_dist = kernel_basis(std::move(e_rows), ring);

  nlohmann::json pattern = nlohmann::json::array();
  bool holds = true;
  const int perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& perm : perms) {
    int a = perm[0], b = perm[1], c = perm[2];
    VectorField lie = bracket(t.s[a].xi, t.s[b].xi);
    nlohmann::json entry;
    entry["pair"] = {a + 1, b + 1};
    // lie = c xi_gamma for some rational c?
    std::optional<Scalar> factor;
    bool proportional = true;
    const VectorField& xg = t.s[c].xi;
    for (int k = 0; k < dim && proportional; ++k) {
      if (xg[k].is_zero()) {
        if (!lie[k].is_zero()) proportional = false;
      } else {
        Scalar f = lie[k] / xg[k];
        if (!factor) {
          factor = f;
        } else if (*factor != f) {
          proportional = false;
        }
      }
    }
    if (proportional) {
      entry["c"] = factor ? factor->str() : "0";
    } else {
      entry["c"] = "pattern violated";
      holds = false;
    }
    pattern.push_back(entry);
  }
  // the constant c must also be shared across the even permutations
  if (holds) {
    std::string c0 = pattern[0]["c"];
    for (const auto& e : pattern) {
      if (e["c"] != c0) holds = false;
    }
  }
  out.reeb_bracket_pattern = {{"entries", pattern}, {"pattern_holds", holds}};
  return out;
}

Generators hyperholomorphic_product(const KForm& w1, const KForm& w2,
                                    const KForm& w3) {
  const KForm* ws[3] = {&w1, &w2, &w3};
  for (const KForm* w : ws) {
    ensure_same_frame(w1.frame(), w->frame());
    if (w->degree() != 2) fail(ErrorKind::DegreeError, "generators must be 2-forms");
    if (!w->ring().is_rational()) fail(ErrorKind::RingMismatch, "rational coefficients required");
  }
  int dim = w1.frame()->dim();
  if (dim % 4 != 0) fail(ErrorKind::Precondition, "hyperholomorphic base must have dimension 4k");
  Ring ring = Ring::rational();
  Matrix inv[3], flat[3];
  for (int a = 0; a < 3; ++a) {
    flat[a] = flat_matrix(*ws[a]);
    inv[a] = invert(flat[a], ring);  // throws SingularSystem when degenerate
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      Matrix lhs = matmul(inv[a], flat[b], ring);
      Matrix rhs = matmul(inv[b], flat[a], ring);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          if (lhs[i][j] + rhs[i][j] != Scalar::zero(ring)) {
            fail(ErrorKind::Precondition, "musical anticommutation fails");
          }
        }
      }
    }
  }
  FramePtr ext = w1.frame()->extended({"t1", "t2", "t3"});
  KForm etas[3] = {basis_covector(ext, dim, ring), basis_covector(ext, dim + 1, ring),
                   basis_covector(ext, dim + 2, ring)};
  const int perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<AlmostCosym> items;
  for (const auto& perm : perms) {
    int a = perm[0], b = perm[1], c = perm[2];
    KForm omega = lift(*ws[a], ext) + wedge(etas[b], etas[c]);
    items.push_back(make_structure(etas[a], std::move(omega)));
  }
  return make_generators(std::move(items));
}

}  // namespace cosym
