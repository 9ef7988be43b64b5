#include "cosym/sphere_family.hpp"

#include <algorithm>
#include <utility>

#include "cosym/exterior.hpp"
#include "cosym/linalg.hpp"
#include "cosym/univariate.hpp"

namespace cosym {

namespace {

Poly sphere_sum(int nvars) {
  Poly s(nvars);
  for (int i = 0; i < nvars; ++i) s = s + Poly::variable(nvars, i, 2);
  return s;
}

std::vector<Rational> axis_point(int nvars, int i) {
  std::vector<Rational> p(nvars, Rational(0));
  p[i] = 1;
  return p;
}

/// Primitive integer representative of the ray through a rational point.
std::vector<Integer> integer_ray(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, denominator(q));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& q : v) {
    out.push_back(numerator(q) * (l / denominator(q)));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(out.back()));
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

nlohmann::json ray_json(const std::vector<Rational>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : integer_ray(v)) arr.push_back(x.str());
  return arr;
}

Certificate refuted_at(const Poly& v, std::vector<Rational> point,
                       std::string method, nlohmann::json details) {
  Rational val = v.eval(point);
  details["witness_ray"] = ray_json(point);
  details["value_at_witness"] = to_string(val);
  return {Verdict::Refuted, std::move(method), std::move(details)};
}

// -- exact rational interval arithmetic --------------------------------------

struct Interval {
  Rational lo, hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

Interval ipow(const Interval& a, unsigned e) {
  if (e == 0) return {1, 1};
  Rational pl = 1, ph = 1;
  for (unsigned k = 0; k < e; ++k) {
    pl *= a.lo;
    ph *= a.hi;
  }
  if (e % 2 == 1) return {pl, ph};
  Rational hi = std::max(pl, ph);
  Rational lo = a.contains_zero() ? Rational(0) : std::min(pl, ph);
  return {lo, hi};
}

/// Range enclosure of a polynomial over a box, term by term.
Interval eval_box(const Poly& p, const std::vector<Interval>& box) {
  Interval acc{0, 0};
  for (const auto& [m, c] : p.terms()) {
    Interval t{1, 1};
    for (size_t i = 0; i < box.size(); ++i) {
      Interval f = ipow(box[i], m[i]);
      Rational a = t.lo * f.lo, b = t.lo * f.hi, d = t.hi * f.lo, e = t.hi * f.hi;
      t = {std::min(std::min(a, b), std::min(d, e)),
           std::max(std::max(a, b), std::max(d, e))};
    }
    if (c > 0) {
      acc = {acc.lo + c * t.lo, acc.hi + c * t.hi};
    } else {
      acc = {acc.lo + c * t.hi, acc.hi + c * t.lo};
    }
  }
  return acc;
}

std::vector<Rational> box_center(const std::vector<Interval>& box) {
  std::vector<Rational> c;
  for (const auto& iv : box) c.push_back(iv.mid());
  return c;
}

nlohmann::json box_json(const std::vector<Interval>& box) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : box) {
    arr.push_back(nlohmann::json::array({to_string(iv.lo), to_string(iv.hi)}));
  }
  return arr;
}

// -- p = 1: chart-wise Sturm analysis ----------------------------------------

Certificate verify_circle(const Poly& v, int want, nlohmann::json details) {
  // even degree: V(-l) = V(l), so the charts l2 = 1 and l1 = 1 together with
  // the axis rays cover the circle up to antipodes
  nlohmann::json charts = nlohmann::json::array();
  for (int one_var : {1, 0}) {
    UniPoly q = UniPoly::dehomogenize(v, one_var);
    int roots = q.count_real_roots();
    nlohmann::json ch;
    ch["chart"] = (one_var == 1) ? "l2=1" : "l1=1";
    ch["real_roots"] = roots;
    charts.push_back(ch);
    if (roots == 0) continue;

    // a real root of the chart polynomial is a zero of V on the circle
    details["charts"] = charts;
    auto make_point = [&](const Rational& t) {
      return (one_var == 1) ? std::vector<Rational>{t, 1}
                            : std::vector<Rational>{1, t};
    };
    auto rational = q.rational_roots();
    if (!rational.empty()) {
      return refuted_at(v, make_point(rational.front()), "sturm-isolation",
                        std::move(details));
    }
    if (auto t = q.find_sign_witness(-want)) {
      return refuted_at(v, make_point(*t), "sturm-isolation", std::move(details));
    }
    // irrational zeros without a sign change: report isolating intervals
    nlohmann::json boxes = nlohmann::json::array();
    for (const auto& [a, b] : q.isolate_roots()) {
      boxes.push_back(nlohmann::json::array({to_string(a), to_string(b)}));
    }
    details["witness_kind"] = "isolating-interval";
    details["witness_intervals"] = boxes;
    return {Verdict::Refuted, "sturm-isolation", std::move(details)};
  }
  details["charts"] = charts;
  details["sign"] = want;
  return {Verdict::VerifiedByIsolation, "sturm-isolation", std::move(details)};
}

// -- p >= 2: interval subdivision of the cube boundary ------------------------

Certificate verify_subdivision(const Poly& v, int want, int max_depth,
                               nlohmann::json details) {
  int nvars = v.nvars();
  long cells_proved = 0;
  std::vector<std::pair<std::vector<Interval>, int>> stack;
  // even degree: the faces l_i = +1 cover the sphere up to antipodes and
  // positive scaling
  for (int face = 0; face < nvars; ++face) {
    std::vector<Interval> box(nvars, Interval{-1, 1});
    box[face] = {1, 1};
    stack.emplace_back(std::move(box), 0);
  }
  std::vector<std::vector<Interval>> undecided;
  while (!stack.empty()) {
    auto [box, depth] = std::move(stack.back());
    stack.pop_back();
    Interval range = eval_box(v, box);
    if ((want > 0 && range.lo > 0) || (want < 0 && range.hi < 0)) {
      ++cells_proved;
      continue;
    }
    std::vector<Rational> center = box_center(box);
    Rational val = v.eval(center);
    if (val.sign() != want) {
      details["cells_proved"] = cells_proved;
      if (val == 0) {
        // a zero exactly at a cell center is still a genuine zero of V
        details["witness_value"] = "0";
      }
      return refuted_at(v, center, "interval-subdivision", std::move(details));
    }
    if (depth >= max_depth) {
      undecided.push_back(box);
      continue;
    }
    int split = -1;
    Rational best = 0;
    for (int i = 0; i < nvars; ++i) {
      if (box[i].width() > best) {
        best = box[i].width();
        split = i;
      }
    }
    if (split < 0) {  // degenerate box; cannot refine further
      undecided.push_back(box);
      continue;
    }
    Rational mid = box[split].mid();
    auto left = box, right = box;
    left[split].hi = mid;
    right[split].lo = mid;
    stack.emplace_back(std::move(left), depth + 1);
    stack.emplace_back(std::move(right), depth + 1);
  }
  details["cells_proved"] = cells_proved;
  details["max_depth"] = max_depth;
  if (!undecided.empty()) {
    details["undecided_cells"] = undecided.size();
    details["first_undecided_cell"] = box_json(undecided.front());
    return {Verdict::Undecided, "interval-subdivision", std::move(details)};
  }
  details["sign"] = want;
  return {Verdict::VerifiedBySubdivision, "interval-subdivision", std::move(details)};
}

Matrix span_rows(const std::vector<VectorField>& vs) {
  Matrix m;
  for (const auto& v : vs) {
    Column row;
    for (int i = 0; i < v.dim(); ++i) row.push_back(v[i]);
    m.push_back(std::move(row));
  }
  return m;
}

Column form_row(const KForm& theta) {
  Column row;
  for (int i = 0; i < theta.frame()->dim(); ++i) row.push_back(theta.coeff({i}));
  return row;
}

bool same_span(Matrix a, const Matrix& b, Ring ring) {
  int ra = rank(a, ring);
  Matrix bb = b;
  int rb = rank(std::move(bb), ring);
  if (ra != rb) return false;
  Matrix joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  return rank(std::move(joint), ring) == ra;
}

}  // namespace

Generators make_generators(std::vector<AlmostCosym> items) {
  if (items.size() < 2) {
    fail(ErrorKind::Precondition, "a p-sphere needs at least two generators");
  }
  const FramePtr& frame = items.front().frame;
  for (const auto& s : items) {
    ensure_same_frame(frame, s.frame);
    if (!s.eta.ring().is_rational()) {
      fail(ErrorKind::RingMismatch, "generators must have rational coefficients");
    }
  }
  int n = items.front().n;
  return {frame, std::move(items), n};
}

KForm family_eta(const Generators& g) {
  Ring ring = g.lambda_ring();
  KForm acc = zero_form(g.frame, 1, ring);
  for (size_t i = 0; i < g.items.size(); ++i) {
    acc = acc + Scalar::lambda(ring, static_cast<int>(i)) * to_ring(g.items[i].eta, ring);
  }
  return acc;
}

KForm family_omega(const Generators& g) {
  Ring ring = g.lambda_ring();
  KForm acc = zero_form(g.frame, 2, ring);
  for (size_t i = 0; i < g.items.size(); ++i) {
    acc = acc + Scalar::lambda(ring, static_cast<int>(i)) * to_ring(g.items[i].omega, ring);
  }
  return acc;
}

Poly family_volume(const Generators& g) {
  KForm top = wedge(family_eta(g), wedge_power(family_omega(g), g.n));
  KForm::Key all;
  for (int i = 0; i < g.frame->dim(); ++i) all.push_back(i);
  Scalar c = top.coeff(all);
  Poly v = c.is_zero() ? Poly(g.p() + 1) : c.poly_value();
  if (!v.is_homogeneous(g.n + 1)) {
    fail(ErrorKind::Precondition, "family volume is not homogeneous of degree n+1");
  }
  return v;
}

Certificate verify_p_sphere(const Generators& g, int max_depth) {
  Poly v = family_volume(g);
  int nvars = g.p() + 1;
  int deg = g.n + 1;
  nlohmann::json details;
  details["volume_polynomial"] = v.str();
  details["degree"] = deg;

  if (v.is_zero()) {
    return refuted_at(v, axis_point(nvars, 0), "zero-volume", std::move(details));
  }
  std::vector<Rational> e1 = axis_point(nvars, 0);
  Rational v1 = v.eval(e1);
  if (deg % 2 == 1) {
    // V(-l) = -V(l): the values at antipodes differ in sign, forcing a zero
    std::vector<Rational> witness = e1;
    if (v1 != 0) {
      for (auto& x : witness) x = -x;
    }
    details["antipodal_values"] = {to_string(v1), to_string(-v1)};
    return refuted_at(v, witness, "parity", std::move(details));
  }
  // axis points first: they are excluded from the affine charts below
  for (int i = 0; i < nvars; ++i) {
    auto e = axis_point(nvars, i);
    if (v.eval(e) == 0) {
      return refuted_at(v, e, "axis-zero", std::move(details));
    }
  }
  int want = v1.sign();
  Poly pattern = sphere_sum(nvars).pow(deg / 2) * v1;
  if (v == pattern) {
    details["constant"] = to_string(v1);
    return {Verdict::VerifiedExact, "exact-pattern", std::move(details)};
  }
  if (nvars == 2) return verify_circle(v, want, std::move(details));
  return verify_subdivision(v, want, max_depth, std::move(details));
}

Certificate is_taut(const Generators& g) {
  Poly v = family_volume(g);
  int nvars = g.p() + 1;
  int deg = g.n + 1;
  std::vector<Rational> e1 = axis_point(nvars, 0);
  Rational v1 = v.eval(e1);
  bool poly_taut =
      deg % 2 == 0 && v1 != 0 && v == sphere_sum(nvars).pow(deg / 2) * v1;

  nlohmann::json details;
  details["volume_polynomial"] = v.str();
  details["common_value"] = to_string(v1);

  if (g.frame->dim() == 3 && g.p() == 1 && !v.is_zero()) {
    const auto& a = g.items[0];
    const auto& b = g.items[1];
    bool eq_taut = wedge(a.eta, a.omega) == wedge(b.eta, b.omega) &&
                   wedge(a.eta, b.omega) == -wedge(b.eta, a.omega);
    if (eq_taut != poly_taut) {
      fail(ErrorKind::Precondition, "tautness cross-check disagreement");
    }
    details["generator_equations"] = eq_taut;
  }
  if (poly_taut) {
    return {Verdict::Verified, "volume-identity", std::move(details)};
  }
  return {Verdict::Refuted, "volume-identity", std::move(details)};
}

Certificate is_round(const Generators& g) {
  int count = g.p() + 1;
  std::vector<VectorField> xis;
  for (const auto& s : g.items) xis.push_back(reeb(s));

  nlohmann::json details;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      Scalar pair = interior(xis[j], g.items[i].eta).coeff({}) +
                    interior(xis[i], g.items[j].eta).coeff({});
      if (!pair.is_zero()) {
        details["condition"] = "eta_i(xi_j) + eta_j(xi_i) = 0";
        details["pair"] = {i + 1, j + 1};
        details["value"] = pair.str();
        return {Verdict::Refuted, "generator-conditions", std::move(details)};
      }
    }
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i; j < count; ++j) {
      KForm mixed = interior(xis[i], g.items[j].omega) +
                    interior(xis[j], g.items[i].omega);
      if (!mixed.is_zero()) {
        details["condition"] = "i_{xi_i}Omega_j + i_{xi_j}Omega_i = 0";
        details["pair"] = {i + 1, j + 1};
        details["value"] = mixed.str();
        return {Verdict::Refuted, "generator-conditions", std::move(details)};
      }
    }
  }
  return {Verdict::Verified, "generator-conditions", std::move(details)};
}

ReebDistribution reeb_distribution(const Generators& g) {
  ReebDistribution rd;
  for (const auto& s : g.items) rd.xis.push_back(reeb(s));
  if (g.frame->dim() != 3 || g.p() != 1) return rd;

  Ring ring = Ring::rational();
  rd.thetas.push_back(interior(rd.xis[0], g.items[1].omega));
  rd.thetas.push_back(interior(rd.xis[1], g.items[0].omega));
  Matrix span = span_rows(rd.xis);
  rd.kernels_match_span = rank(span, ring) == 2;
  for (const auto& theta : rd.thetas) {
    Matrix m{form_row(theta)};
    auto kern = kernel_basis(std::move(m), ring);
    rd.kernels.push_back(kern);
    Matrix km;
    for (const auto& col : kern) km.push_back(col);
    if (!same_span(span, km, ring)) rd.kernels_match_span = false;
  }
  return rd;
}

Certificate involutivity(const Generators& g) {
  std::vector<VectorField> xis;
  for (const auto& s : g.items) xis.push_back(reeb(s));
  Ring ring = Ring::rational();
  Matrix span = span_rows(xis);
  int base_rank = rank(span, ring);
  nlohmann::json details;
  details["span_rank"] = base_rank;
  for (size_t a = 0; a < xis.size(); ++a) {
    for (size_t b = a + 1; b < xis.size(); ++b) {
      VectorField lie = bracket(xis[a], xis[b]);
      Matrix joint = span;
      Column row;
      for (int k = 0; k < lie.dim(); ++k) row.push_back(lie[k]);
      joint.push_back(std::move(row));
      if (rank(std::move(joint), ring) != base_rank) {
        details["witness"] = "[xi" + std::to_string(a + 1) + ", xi" +
                             std::to_string(b + 1) + "] = " + lie.str();
        return {Verdict::Refuted, "bracket-span", std::move(details)};
      }
    }
  }
  return {Verdict::Verified, "bracket-span", std::move(details)};
}

Certificate integrability(const Generators& g) {
  if (g.frame->dim() != 3 || g.p() != 1) {
    fail(ErrorKind::Precondition, "integrability analysis expects a 3-dim circle");
  }
  std::vector<VectorField> xis{reeb(g.items[0]), reeb(g.items[1])};
  KForm theta1 = interior(xis[0], g.items[1].omega);
  KForm theta2 = interior(xis[1], g.items[0].omega);
  KForm frob1 = wedge(theta1, ext_d(theta1));
  KForm frob2 = wedge(theta2, ext_d(theta2));
  bool by_frobenius = frob1.is_zero() && frob2.is_zero();

  Matrix span = span_rows(xis);
  Ring ring = Ring::rational();
  int base_rank = rank(span, ring);
  bool by_brackets = true;
  VectorField lie = bracket(xis[0], xis[1]);
  {
    Matrix joint = span;
    Column row;
    for (int i = 0; i < lie.dim(); ++i) row.push_back(lie[i]);
    joint.push_back(std::move(row));
    by_brackets = rank(std::move(joint), ring) == base_rank;
  }
  if (by_frobenius != by_brackets) {
    fail(ErrorKind::Precondition, "integrability cross-check disagreement");
  }
  nlohmann::json details;
  details["theta1_wedge_dtheta1"] = frob1.str();
  details["theta2_wedge_dtheta2"] = frob2.str();
  details["bracket_xi1_xi2"] = lie.str();
  if (by_frobenius) {
    return {Verdict::Verified, "frobenius-and-brackets", std::move(details)};
  }
  return {Verdict::Refuted, "frobenius-and-brackets", std::move(details)};
}

Certificate nonvanishing_check(const Generators& g) {
  if (g.p() != 1) {
    fail(ErrorKind::Precondition, "nonvanishing check expects a circle (p = 1)");
  }
  std::vector<VectorField> xis{reeb(g.items[0]), reeb(g.items[1])};
  KForm theta1 = interior(xis[0], g.items[1].omega);
  KForm theta2 = interior(xis[1], g.items[0].omega);
  nlohmann::json details;
  details["i_xi1_omega2"] = theta1.str();
  details["i_xi2_omega1"] = theta2.str();
  if (theta1.is_zero() || theta2.is_zero()) {
    return {Verdict::Refuted, "nonvanishing", std::move(details)};
  }
  Matrix span = span_rows(xis);
  if (rank(std::move(span), Ring::rational()) != 2) {
    details["dependent_reeb_fields"] = true;
    return {Verdict::Refuted, "nonvanishing", std::move(details)};
  }
  return {Verdict::Verified, "nonvanishing", std::move(details)};
}

}  // namespace cosym
