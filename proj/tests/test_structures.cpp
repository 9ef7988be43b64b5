#include <doctest.h>

#include "cosym/corpus.hpp"
#include "cosym/structures.hpp"

using namespace cosym;

TEST_CASE("volume and Reeb fields on the Heisenberg circle") {
  FrameFile f = corpus_frame("heisenberg");
  AlmostCosym s1 = make_structure(f.forms.at("eta1"), f.forms.at("Om1"));
  AlmostCosym s2 = make_structure(f.forms.at("eta2"), f.forms.at("Om2"));
  CHECK(s1.volume_nonzero);
  CHECK(s2.volume_nonzero);
  CHECK(volume_form(s1).coeff({0, 1, 2}) == Scalar(1));
  CHECK(reeb(s1) == basis_vector(f.frame, 0));
  CHECK(reeb(s2) == basis_vector(f.frame, 1));
}

TEST_CASE("classification: cosymplectic, contact, neither") {
  FrameFile h = corpus_frame("heisenberg");
  for (const auto& [en, on] : h.structures) {
    AlmostCosym s = make_structure(h.forms.at(en), h.forms.at(on));
    CHECK(classify(s).kind == StructureKind::Cosymplectic);
  }
  // contact: eta = e3 with gamma = -1 so that d eta = e1^e2 = Omega
  BracketTable bt;
  bt[{0, 1}][2] = Rational(-1);
  auto f = std::make_shared<Frame>(std::vector<std::string>{"e1", "e2", "e3"},
                                   std::move(bt));
  KForm eta = basis_covector(f, 2);
  KForm omega = wedge(basis_covector(f, 0), basis_covector(f, 1));
  CHECK(classify(make_structure(eta, omega)).kind == StructureKind::Contact);
  // neither: on a 5-dim frame with [e1,e2] = e5, the form e4^e5 is not
  // closed (d e5 = -e1^e2), and d eta = 0 != Omega
  BracketTable bt5;
  bt5[{0, 1}][4] = Rational(1);
  auto f5 = std::make_shared<Frame>(
      std::vector<std::string>{"e1", "e2", "e3", "e4", "e5"}, std::move(bt5));
  KForm omega2 = wedge(basis_covector(f5, 3), basis_covector(f5, 4)) +
                 wedge(basis_covector(f5, 0), basis_covector(f5, 1));
  AlmostCosym s3 = make_structure(basis_covector(f5, 2), omega2);
  CHECK(s3.volume_nonzero);
  CHECK(classify(s3).kind == StructureKind::Neither);
}

TEST_CASE("degenerate structures are flagged, Reeb solve throws") {
  auto f = Frame::abelian(3);
  KForm eta = basis_covector(f, 0);
  KForm omega = wedge(basis_covector(f, 0), basis_covector(f, 1));
  AlmostCosym s = make_structure(eta, omega);  // eta ^ omega = 0
  CHECK_FALSE(s.volume_nonzero);
  CHECK_THROWS_AS(reeb(s), Error);
}

TEST_CASE("Cartan class of 1-forms") {
  // closed form: class 1
  auto ab = Frame::abelian(3);
  CHECK(cartan_class(basis_covector(ab, 0)).cartan_class == 1);
  // contact form on a 3-dim frame: class 3
  BracketTable bt;
  bt[{0, 1}][2] = Rational(-1);
  auto f = std::make_shared<Frame>(std::vector<std::string>{"e1", "e2", "e3"},
                                   std::move(bt));
  ClassReport r = cartan_class(basis_covector(f, 2));
  CHECK(r.cartan_class == 3);
  CHECK(r.s == 1);
}

TEST_CASE("dimension and degree preconditions") {
  auto even = Frame::abelian(4);
  CHECK_THROWS_AS(make_structure(basis_covector(even, 0),
                                 wedge(basis_covector(even, 1), basis_covector(even, 2))),
                  Error);
  auto f = Frame::abelian(3);
  CHECK_THROWS_AS(make_structure(wedge(basis_covector(f, 0), basis_covector(f, 1)),
                                 wedge(basis_covector(f, 1), basis_covector(f, 2))),
                  Error);
}
