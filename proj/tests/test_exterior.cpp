#include <doctest.h>

#include "cosym/exterior.hpp"

using namespace cosym;

namespace {

FramePtr heisenberg_frame(const Rational& gamma = Rational(1)) {
  BracketTable bt;
  bt[{0, 1}][2] = gamma;
  return std::make_shared<Frame>(std::vector<std::string>{"e1", "e2", "e3"},
                                 std::move(bt));
}

}  // namespace

TEST_CASE("wedge follows the determinant convention") {
  auto f = Frame::abelian(4);
  KForm a = basis_covector(f, 0);
  KForm b = basis_covector(f, 1);
  KForm ab = wedge(a, b);
  std::vector<VectorField> xy = {basis_vector(f, 0), basis_vector(f, 1)};
  CHECK(eval(ab, xy) == Scalar(1));
  std::vector<VectorField> yx = {basis_vector(f, 1), basis_vector(f, 0)};
  CHECK(eval(ab, yx) == Scalar(-1));
  // (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X) on non-basis arguments
  VectorField v(f, Ring::rational()), w(f, Ring::rational());
  v.set(0, Scalar(2));
  v.set(1, Scalar(3));
  w.set(0, Scalar(Rational(1, 2)));
  w.set(1, Scalar(-1));
  CHECK(eval(ab, std::vector<VectorField>{v, w}) ==
        Scalar(Rational(2) * Rational(-1) - Rational(3) * Rational(1, 2)));
}

TEST_CASE("wedge powers and top forms") {
  auto f = Frame::abelian(7, "x");
  auto w2 = [&](int i, int j) {
    return wedge(basis_covector(f, i), basis_covector(f, j));
  };
  KForm omega = w2(0, 1) + w2(2, 3) + w2(4, 5);
  KForm cube = wedge_power(omega, 3);
  CHECK(cube.coeff({0, 1, 2, 3, 4, 5}) == Scalar(6));  // 3! pairings
  CHECK(wedge_power(omega, 4).is_zero());
}

TEST_CASE("interior product basics") {
  auto f = Frame::abelian(3);
  KForm vol = wedge(wedge(basis_covector(f, 0), basis_covector(f, 1)),
                    basis_covector(f, 2));
  KForm i1 = interior(basis_vector(f, 1), vol);
  // i_{e2} (e1^e2^e3) = -e1^e3
  CHECK(i1.coeff({0, 2}) == Scalar(-1));
  CHECK(i1.coeffs().size() == 1);
  CHECK_THROWS_AS(interior(basis_vector(f, 0), unit_form(f)), Error);
}

TEST_CASE("exterior derivative on the Heisenberg frame") {
  Rational gamma(2);
  auto f = heisenberg_frame(gamma);
  // d e3 (e1, e2) = -e3([e1, e2]) = -gamma
  KForm d3 = ext_d(basis_covector(f, 2));
  CHECK(d3.coeff({0, 1}) == Scalar(-gamma));
  CHECK(ext_d(basis_covector(f, 0)).is_zero());
  CHECK(ext_d(basis_covector(f, 1)).is_zero());
  CHECK(ext_d(d3).is_zero());
}

TEST_CASE("bracket and Lie derivative conventions") {
  auto f = heisenberg_frame();
  VectorField b = bracket(basis_vector(f, 0), basis_vector(f, 1));
  CHECK(b == basis_vector(f, 2));
  // (L_{e1} e^3)(e2) = -e^3([e1, e2]) = -1
  KForm l = lie_derivative(basis_vector(f, 0), basis_covector(f, 2));
  CHECK(l.coeff({1}) == Scalar(-1));
}

TEST_CASE("ring discipline: mixing throws, promotion is explicit") {
  auto f = Frame::abelian(3);
  Ring lr = Ring::lambda(2);
  KForm a = basis_covector(f, 0);               // rational
  KForm b = basis_covector(f, 1, lr);           // lambda
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(wedge(a, b), Error);
  KForm a_l = to_ring(a, lr);
  CHECK((a_l + b).ring() == lr);
  Scalar l1 = Scalar::lambda(lr, 0);
  CHECK((l1 * l1).reduce_sphere() ==
        Scalar::one(lr) - Scalar::lambda(lr, 1) * Scalar::lambda(lr, 1));
}

TEST_CASE("specialization at a rational point") {
  auto f = Frame::abelian(3);
  Ring lr = Ring::lambda(2);
  KForm fam = Scalar::lambda(lr, 0) * basis_covector(f, 0, lr) +
              Scalar::lambda(lr, 1) * basis_covector(f, 1, lr);
  std::vector<Rational> pt = {Rational(3, 5), Rational(4, 5)};
  KForm at = specialize(fam, pt);
  CHECK(at.coeff({0}) == Scalar(Rational(3, 5)));
  CHECK(at.coeff({1}) == Scalar(Rational(4, 5)));
  CHECK(at.ring().is_rational());
}
