#include <doctest.h>

#include "cosym/contact3.hpp"
#include "cosym/corpus.hpp"

using namespace cosym;

namespace {

AC3 ac3(const std::string& name) {
  FrameFile f = corpus_frame(name);
  REQUIRE(f.acstructures.size() == 3);
  auto one = [&](int i) {
    const auto& n = f.acstructures[i];
    return make_almost_contact(f.endos.at(n[0]), f.vectors.at(n[1]),
                               f.forms.at(n[2]));
  };
  return make_ac3({one(0), one(1), one(2)}, f.metric);
}

}  // namespace

TEST_CASE("almost contact axioms and derived identities") {
  AC3 t = ac3("lie7");
  for (const auto& s : t.s) {
    Certificate c = verify_almost_contact(s.phi, s.xi, s.eta);
    CHECK(c.ok());
    // derived: eta o phi = 0 and phi xi = 0
    CHECK(s.phi.apply(s.xi).is_zero());
  }
  // broken structure: phi^2 != -I + eta (x) xi
  auto f = Frame::abelian(3);
  EndoField bad = EndoField::identity(f, Ring::rational());
  Certificate c =
      verify_almost_contact(bad, basis_vector(f, 2), basis_covector(f, 2));
  CHECK(c.verdict == Verdict::Refuted);
  CHECK_THROWS_AS(
      make_almost_contact(bad, basis_vector(f, 2), basis_covector(f, 2)), Error);
}

TEST_CASE("compatible metric and fundamental form") {
  FrameFile f = corpus_frame("t7_quaternionic");
  AC3 t = ac3("t7_quaternionic");
  REQUIRE(t.g.has_value());
  for (int a = 0; a < 3; ++a) {
    CHECK(verify_compatible_metric(*t.g, t.s[a]).ok());
    KForm om = fundamental_form(*t.g, t.s[a]);
    CHECK(om == f.forms.at("Om" + std::to_string(a + 1)));
  }
  // non-definite metric is rejected
  Matrix zero(7, Column(7, Scalar::zero(Ring::rational())));
  CHECK_THROWS_AS(make_metric(t.s[0].frame, zero), Error);
}

TEST_CASE("3-structure relations hold on both corpus triples") {
  CHECK(verify_3_structure(ac3("lie7").s).ok());
  CHECK(verify_3_structure(ac3("t7_quaternionic").s).ok());
  // shuffled triple breaks the even-permutation relations
  AC3 t = ac3("lie7");
  std::array<AlmostContact, 3> shuffled = {t.s[0], t.s[2], t.s[1]};
  CHECK(verify_3_structure(shuffled).verdict == Verdict::Refuted);
}

TEST_CASE("Nijenhuis concomitant: symmetry and vanishing cases") {
  AC3 t = ac3("t7_quaternionic");
  EndoField id = EndoField::identity(t.frame, Ring::rational());
  CHECK(nijenhuis_concomitant(id, t.s[0].phi).is_zero());
  TwoOneTensor ab = nijenhuis_concomitant(t.s[0].phi, t.s[1].phi);
  TwoOneTensor ba = nijenhuis_concomitant(t.s[1].phi, t.s[0].phi);
  CHECK(ab == ba);
  CHECK(ab.is_zero());  // flat frame, constant tensors
}

TEST_CASE("N tensors vanish on the flat quaternionic structure") {
  AC3 t = ac3("t7_quaternionic");
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) {
      NTensors nt = n_tensors(t, a, b);
      CHECK(nt.n1.is_zero());
      CHECK(nt.n2.is_zero());
      CHECK(nt.n3.is_zero());
      CHECK(nt.n4.is_zero());
    }
  }
}

TEST_CASE("N tensors detect the non-abelian brackets of lie7") {
  AC3 t = ac3("lie7");
  bool any_nonzero = false;
  for (int a = 0; a < 3; ++a) {
    // diagonal pairs also cross-check against the direct-expansion
    // fundamental tensors inside n_tensors
    NTensors nt = n_tensors(t, a, a);
    any_nonzero = any_nonzero || !nt.n1.is_zero() || !nt.n2.is_zero() ||
                  !nt.n3.is_zero() || !nt.n4.is_zero();
  }
  CHECK(any_nonzero);
}

TEST_CASE("lambda structure: symbolic and at rational sphere points") {
  for (const std::string name : {"lie7", "t7_quaternionic"}) {
    AC3 t = ac3(name);
    AlmostContact sym = lambda_structure_symbolic(t);
    CHECK_FALSE(sym.phi.ring().is_rational());
    std::vector<Rational> pt = {Rational(3, 5), Rational(4, 5), Rational(0)};
    AlmostContact at = lambda_structure(t, pt);
    CHECK(at.phi.ring().is_rational());
    std::vector<Rational> off = {Rational(1), Rational(1), Rational(0)};
    CHECK_THROWS_AS(lambda_structure(t, off), Error);
  }
}

TEST_CASE("characteristic distributions of lie7") {
  AC3 t = ac3("lie7");
  CharDistributions d = char_distributions(t);
  CHECK(d.cartan_classes == std::vector<int>{1, 1, 5});
  REQUIRE(d.c_alpha.size() == 3);
  CHECK(d.c_alpha[0].size() == 6);
  CHECK(d.c_alpha[1].size() == 6);
  CHECK(d.c_alpha[2].size() == 2);
  CHECK(d.c_dims_match);
  CHECK(d.horizontal.size() == 4);
  CHECK(d.e_dist.size() == 2);
  // [xi1, xi2] = xi3 but the other even permutations have zero brackets,
  // so the uniform-constant pattern of Eq-type homogeneity fails
  CHECK_FALSE(d.reeb_bracket_pattern.at("pattern_holds").get<bool>());
}

TEST_CASE("characteristic distributions of the flat quaternionic structure") {
  CharDistributions d = char_distributions(ac3("t7_quaternionic"));
  CHECK(d.cartan_classes == std::vector<int>{1, 1, 1});
  CHECK(d.c_dims_match);
  CHECK(d.horizontal.size() == 4);
  CHECK(d.e_dist.size() == 4);
  CHECK(d.reeb_bracket_pattern.at("pattern_holds").get<bool>());
}

TEST_CASE("hyperholomorphic product accepts the hyperkahler triple only") {
  FrameFile f = corpus_frame("hyperkahler_r4");
  Generators g = hyperholomorphic_product(f.forms.at("w1"), f.forms.at("w2"),
                                          f.forms.at("w3"));
  CHECK(g.frame->dim() == 7);
  CHECK(g.p() == 2);
  CHECK(verify_p_sphere(g).verdict == Verdict::VerifiedExact);
  CHECK(is_taut(g).ok());
  CHECK(is_round(g).ok());
  for (const auto& it : g.items) {
    CHECK(classify(it).kind == StructureKind::Cosymplectic);
  }
  // anticommutation fails when two entries coincide
  CHECK_THROWS_AS(
      hyperholomorphic_product(f.forms.at("w1"), f.forms.at("w1"), f.forms.at("w3")),
      Error);
}
