#include "cosym/corpus.hpp"

#include <random>

namespace cosym {

namespace {

KForm cv(const FramePtr& f, int i) { return basis_covector(f, i); }
KForm w2(const FramePtr& f, int i, int j) { return wedge(cv(f, i), cv(f, j)); }

void add_structure(FrameFile& out, int idx, KForm eta, KForm omega) {
  std::string e = "eta" + std::to_string(idx);
  std::string o = "Om" + std::to_string(idx);
  out.forms.emplace(e, std::move(eta));
  out.forms.emplace(o, std::move(omega));
  out.structures.emplace_back(e, o);
}

FrameFile t3() {
  FrameFile out;
  out.frame = Frame::abelian(3);
  add_structure(out, 1, cv(out.frame, 0), w2(out.frame, 1, 2));
  add_structure(out, 2, cv(out.frame, 1), w2(out.frame, 2, 0));
  add_structure(out, 3, cv(out.frame, 2), w2(out.frame, 0, 1));
  return out;
}

FrameFile heisenberg(const Rational& gamma) {
  FrameFile out;
  BracketTable bt;
  bt[{0, 1}][2] = gamma;
  out.frame = std::make_shared<Frame>(std::vector<std::string>{"e1", "e2", "e3"},
                                      std::move(bt));
  add_structure(out, 1, cv(out.frame, 0), w2(out.frame, 1, 2));
  add_structure(out, 2, cv(out.frame, 1), w2(out.frame, 2, 0));
  return out;
}

KForm standard_om1(const FramePtr& f) {
  return w2(f, 0, 1) + w2(f, 2, 3) + w2(f, 4, 5);
}

FrameFile r7_pair() {
  FrameFile out;
  out.frame = Frame::abelian(7, "x");
  const FramePtr& f = out.frame;
  add_structure(out, 1, cv(f, 6), standard_om1(f));
  // (x1 + x2)^x3 + (x4 + x5)^x7 - x2^x5
  KForm om2 = wedge(cv(f, 0) + cv(f, 1), cv(f, 2)) +
              wedge(cv(f, 3) + cv(f, 4), cv(f, 6)) - w2(f, 1, 4);
  add_structure(out, 2, cv(f, 5), std::move(om2));
  return out;
}

FrameFile t7_pair1() {
  FrameFile out;
  out.frame = Frame::abelian(7, "x");
  const FramePtr& f = out.frame;
  add_structure(out, 1, cv(f, 6), standard_om1(f));
  // x5^x4 - x3^x6 + (x1 + x3)^x7
  KForm om2 = w2(f, 4, 3) - w2(f, 2, 5) + wedge(cv(f, 0) + cv(f, 2), cv(f, 6));
  add_structure(out, 2, -cv(f, 1), std::move(om2));
  return out;
}

FrameFile t7_pair2() {
  FrameFile out;
  out.frame = Frame::abelian(7, "x");
  const FramePtr& f = out.frame;
  add_structure(out, 1, cv(f, 6), standard_om1(f));
  // x3^(x5 + x6) + x4^x5 + (x1 + x3)^x6 + x1^x7
  KForm om2 = wedge(cv(f, 2), cv(f, 4) + cv(f, 5)) + w2(f, 3, 4) +
              wedge(cv(f, 0) + cv(f, 2), cv(f, 5)) + w2(f, 0, 6);
  add_structure(out, 2, -cv(f, 1), std::move(om2));
  return out;
}

FrameFile dim5_random(unsigned seed) {
  FrameFile out;
  out.frame = Frame::abelian(5, "x");
  const FramePtr& f = out.frame;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_structure = [&]() {
    for (;;) {
      KForm eta(f, 1, Ring::rational());
      for (int i = 0; i < 5; ++i) eta.add_coeff({i}, Scalar(coeff(rng)));
      KForm omega(f, 2, Ring::rational());
      for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) omega.add_coeff({i, j}, Scalar(coeff(rng)));
      }
      if (!wedge(eta, wedge_power(omega, 2)).is_zero()) {
        return std::pair{std::move(eta), std::move(omega)};
      }
    }
  };
  auto [e1, o1] = random_structure();
  add_structure(out, 1, std::move(e1), std::move(o1));
  auto [e2, o2] = random_structure();
  add_structure(out, 2, std::move(e2), std::move(o2));
  return out;
}

/// Quaternion-like action on the first four directions; the epsilon action
/// on the last three (phi_a xi_b = eps_{abc} xi_c, phi_a xi_a = 0).
EndoField quaternionic_phi(const FramePtr& f, int alpha) {
  EndoField m(f, Ring::rational());
  struct E {
    int col, row, s;
  };
  std::vector<E> tab;
  if (alpha == 0) tab = {{0, 1, 1}, {1, 0, -1}, {2, 3, 1}, {3, 2, -1}};
  if (alpha == 1) tab = {{0, 2, 1}, {1, 3, -1}, {2, 0, -1}, {3, 1, 1}};
  if (alpha == 2) tab = {{0, 3, 1}, {1, 2, 1}, {2, 1, -1}, {3, 0, -1}};
  for (const auto& e : tab) m.set(e.row, e.col, Scalar(e.s));
  for (int beta = 0; beta < 3; ++beta) {
    if (beta == alpha) continue;
    int gamma = 3 - alpha - beta;
    int sign = ((beta - alpha + 3) % 3 == 1) ? 1 : -1;
    m.set(4 + gamma, 4 + beta, Scalar(sign));
  }
  return m;
}

FrameFile quaternionic_triple(FramePtr frame) {
  FrameFile out;
  out.frame = std::move(frame);
  const FramePtr& f = out.frame;
  out.metric = identity_metric(f);
  for (int a = 0; a < 3; ++a) {
    std::string suffix = std::to_string(a + 1);
    EndoField phi = quaternionic_phi(f, a);
    VectorField xi = basis_vector(f, 4 + a);
    KForm eta = cv(f, 4 + a);
    AlmostContact s = make_almost_contact(phi, xi, eta);
    KForm omega = fundamental_form(*out.metric, s);
    out.endos.emplace("phi" + suffix, std::move(phi));
    out.vectors.emplace("xi" + suffix, std::move(xi));
    out.forms.emplace("eta" + suffix, std::move(eta));
    out.forms.emplace("Om" + suffix, std::move(omega));
    out.acstructures.push_back({"phi" + suffix, "xi" + suffix, "eta" + suffix});
    out.structures.emplace_back("eta" + suffix, "Om" + suffix);
  }
  return out;
}

FrameFile lie7() {
  BracketTable bt;
  bt[{0, 3}][6] = 1;  // [X1, X4] = xi3
  bt[{4, 5}][6] = 1;  // [xi1, xi2] = xi3
  auto frame = std::make_shared<Frame>(
      std::vector<std::string>{"X1", "X2", "X3", "X4", "xi1", "xi2", "xi3"},
      std::move(bt));
  return quaternionic_triple(std::move(frame));
}

FrameFile t7_quaternionic() { return quaternionic_triple(Frame::abelian(7, "e")); }

FrameFile hyperkahler_r4() {
  FrameFile out;
  out.frame = Frame::abelian(4, "x");
  const FramePtr& f = out.frame;
  out.forms.emplace("w1", w2(f, 0, 1) + w2(f, 2, 3));
  out.forms.emplace("w2", w2(f, 0, 2) - w2(f, 1, 3));
  out.forms.emplace("w3", w2(f, 0, 3) + w2(f, 1, 2));
  return out;
}

}  // namespace

std::vector<CorpusEntry> corpus_list() {
  return {
      {"t3", "flat 3-torus frame with the coordinate cosymplectic 2-sphere"},
      {"heisenberg", "Heisenberg frame [e1,e2] = g e3; taut round circle (heisenberg:<g>)"},
      {"r7_pair", "7-dim flat pair: verified circle, neither taut nor round"},
      {"t7_pair1", "7-dim flat pair: taut but not round"},
      {"t7_pair2", "7-dim flat pair: round but not taut"},
      {"dim5_random", "random 5-dim pair; parity-refuted circle (dim5_random:<seed>)"},
      {"lie7", "7-dim Lie frame [X1,X4]=xi3, [xi1,xi2]=xi3 with a 3-structure"},
      {"t7_quaternionic", "flat 7-dim quaternionic almost contact 3-structure"},
      {"hyperkahler_r4", "flat R^4 hyperkahler 2-form triple (hyperholo input)"},
  };
}

FrameFile corpus_frame(const std::string& spec) {
  std::string name = spec;
  std::string arg;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  try {
    if (name == "t3") return t3();
    if (name == "heisenberg") {
      return heisenberg(arg.empty() ? Rational(1) : parse_rational(arg));
    }
    if (name == "r7_pair") return r7_pair();
    if (name == "t7_pair1") return t7_pair1();
    if (name == "t7_pair2") return t7_pair2();
    if (name == "dim5_random") {
      return dim5_random(arg.empty() ? 1u : static_cast<unsigned>(std::stoul(arg)));
    }
    if (name == "lie7") return lie7();
    if (name == "t7_quaternionic") return t7_quaternionic();
    if (name == "hyperkahler_r4") return hyperkahler_r4();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::ParseError, "bad corpus parameter '" + arg + "': " + e.what());
  }
  fail(ErrorKind::Precondition, "unknown corpus entry '" + name + "'");
}

bool is_corpus_name(const std::string& spec) {
  std::string name = spec.substr(0, spec.find(':'));
  for (const auto& e : corpus_list()) {
    if (e.name == name) return true;
  }
  return false;
}

}  // namespace cosym
