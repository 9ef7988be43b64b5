#include <doctest.h>

#include "cosym/corpus.hpp"
#include "cosym/sphere_family.hpp"
#include "support.hpp"

using namespace cosym;
using namespace cosym::testsupport;

namespace {

constexpr int kInstances = 100;

struct Instance {
  FramePtr frame;
  std::mt19937& rng;
};

/// Runs `body` on kInstances random frames of dims 3-8; returns failures.
template <typename F>
int run_instances(unsigned seed, F body) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dims(3, 8);
  int failures = 0;
  for (int i = 0; i < kInstances; ++i) {
    FramePtr f = random_frame(rng, dims(rng));
    if (!body(Instance{f, rng})) ++failures;
  }
  return failures;
}

int random_degree(std::mt19937& rng, int dim, int max_extra = 0) {
  std::uniform_int_distribution<int> d(1, std::max(1, dim - 1 - max_extra));
  return d(rng);
}

}  // namespace

TEST_CASE("property: d o d = 0") {
  CHECK(run_instances(101, [](Instance in) {
          int k = random_degree(in.rng, in.frame->dim());
          KForm a = random_form(in.rng, in.frame, k);
          return ext_d(ext_d(a)).is_zero();
        }) == 0);
}

TEST_CASE("property: Leibniz rule for d") {
  CHECK(run_instances(102, [](Instance in) {
          int dim = in.frame->dim();
          int ka = random_degree(in.rng, dim, 1);
          int kb = random_degree(in.rng, dim - ka, 0);
          KForm a = random_form(in.rng, in.frame, ka);
          KForm b = random_form(in.rng, in.frame, kb);
          KForm lhs = ext_d(wedge(a, b));
          KForm rhs = wedge(ext_d(a), b) +
                      Scalar(ka % 2 == 0 ? 1 : -1) * wedge(a, ext_d(b));
          return lhs == rhs;
        }) == 0);
}

TEST_CASE("property: interior product is an antiderivation") {
  CHECK(run_instances(103, [](Instance in) {
          int dim = in.frame->dim();
          int ka = random_degree(in.rng, dim, 1);
          int kb = random_degree(in.rng, dim - ka, 0);
          KForm a = random_form(in.rng, in.frame, ka);
          KForm b = random_form(in.rng, in.frame, kb);
          VectorField v = random_vector(in.rng, in.frame);
          KForm lhs = interior(v, wedge(a, b));
          KForm rhs = wedge(interior(v, a), b) +
                      Scalar(ka % 2 == 0 ? 1 : -1) * wedge(a, interior(v, b));
          return lhs == rhs;
        }) == 0);
}

TEST_CASE("property: i_v i_v = 0") {
  CHECK(run_instances(104, [](Instance in) {
          int dim = in.frame->dim();
          std::uniform_int_distribution<int> d(2, dim);
          KForm a = random_form(in.rng, in.frame, d(in.rng));
          VectorField v = random_vector(in.rng, in.frame);
          return interior(v, interior(v, a)).is_zero();
        }) == 0);
}

TEST_CASE("property: graded commutativity of the wedge") {
  CHECK(run_instances(105, [](Instance in) {
          int dim = in.frame->dim();
          int ka = random_degree(in.rng, dim, 1);
          int kb = random_degree(in.rng, dim - ka, 0);
          KForm a = random_form(in.rng, in.frame, ka);
          KForm b = random_form(in.rng, in.frame, kb);
          int sign = (ka * kb) % 2 == 0 ? 1 : -1;
          return wedge(a, b) == Scalar(sign) * wedge(b, a);
        }) == 0);
}

TEST_CASE("property: Cartan identity on 1-forms") {
  // L_v = i_v d + d i_v: for constant 1-forms d i_v a = 0, so this pins the
  // sign convention of d against the Lie derivative
  CHECK(run_instances(106, [](Instance in) {
          KForm a = random_form(in.rng, in.frame, 1);
          VectorField v = random_vector(in.rng, in.frame);
          KForm lhs = lie_derivative(v, a);
          KForm rhs = interior(v, ext_d(a)) + ext_d(interior(v, a));
          return lhs == rhs;
        }) == 0);
}

TEST_CASE("property: eval-oracle equivalence of wedge, interior, and d") {
  CHECK(run_instances(107, [](Instance in) {
          int dim = in.frame->dim();
          int ka = random_degree(in.rng, dim, 2);
          int kb = random_degree(in.rng, dim - ka, 1);
          KForm a = random_form(in.rng, in.frame, ka);
          KForm b = random_form(in.rng, in.frame, kb);
          std::vector<VectorField> vs;
          for (int i = 0; i < ka + kb; ++i) vs.push_back(random_vector(in.rng, in.frame));
          // wedge vs the alternating-sum evaluation oracle
          Scalar direct = eval(wedge(a, b), vs);
          Scalar shuffles = Scalar::zero(Ring::rational());
          {
            // full permutation expansion with 1/(ka! kb!) normalization
            std::vector<int> idx(ka + kb);
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
            Rational fact(1);
            for (int i = 2; i <= ka; ++i) fact *= i;
            for (int i = 2; i <= kb; ++i) fact *= i;
            std::sort(idx.begin(), idx.end());
            do {
              int inv = 0;
              for (size_t i = 0; i < idx.size(); ++i) {
                for (size_t j = i + 1; j < idx.size(); ++j) {
                  if (idx[i] > idx[j]) ++inv;
                }
              }
              std::vector<VectorField> va, vb;
              for (int i = 0; i < ka; ++i) va.push_back(vs[idx[i]]);
              for (int i = ka; i < ka + kb; ++i) vb.push_back(vs[idx[i]]);
              Scalar term = eval(a, va) * eval(b, vb);
              shuffles += Scalar(inv % 2 == 0 ? 1 : -1) * term;
            } while (std::next_permutation(idx.begin(), idx.end()));
            shuffles = Scalar(Rational(1) / fact) * shuffles;
          }
          if (direct != shuffles) return false;
          // interior vs eval with the vector prepended
          std::vector<VectorField> rest(vs.begin() + 1, vs.begin() + ka);
          if (eval(interior(vs[0], a), rest) != eval(a, std::vector<VectorField>(vs.begin(), vs.begin() + ka))) {
            return false;
          }
          // d on 1-forms vs the bracket formula d a (X, Y) = -a([X, Y])
          KForm one = random_form(in.rng, in.frame, 1);
          VectorField x = random_vector(in.rng, in.frame);
          VectorField y = random_vector(in.rng, in.frame);
          Scalar da = eval(ext_d(one), std::vector<VectorField>{x, y});
          Scalar viabr = -eval(one, std::vector<VectorField>{bracket(x, y)});
          return da == viabr;
        }) == 0);
}

TEST_CASE("property: dimension-5 parity refutation, 100/100") {
  int refuted = 0;
  for (unsigned seed = 1; seed <= 100; ++seed) {
    FrameFile f = corpus_frame("dim5_random:" + std::to_string(seed));
    std::vector<AlmostCosym> items;
    for (const auto& [e, o] : f.structures) {
      items.push_back(make_structure(f.forms.at(e), f.forms.at(o)));
    }
    Generators g = make_generators(std::move(items));
    Certificate c = verify_p_sphere(g);
    if (c.verdict == Verdict::Refuted) ++refuted;
    // antipodal sign flip on a sampled pair
    Poly v = family_volume(g);
    std::vector<Rational> pt = {Rational(5, 13), Rational(12, 13)};
    std::vector<Rational> anti = {Rational(-5, 13), Rational(-12, 13)};
    CHECK(v.eval(pt) == -v.eval(anti));
  }
  CHECK(refuted == 100);
}

TEST_CASE("property: taut and round agree on 3-dim circles") {
  int checked = 0;
  auto agree = [&](const Generators& g) {
    Certificate t = is_taut(g);
    Certificate r = is_round(g);
    CHECK(t.ok() == r.ok());
    ++checked;
  };
  // built-in 3-dim circles
  for (const std::string name : {"heisenberg", "heisenberg:2", "heisenberg:-1/2"}) {
    FrameFile f = corpus_frame(name);
    std::vector<AlmostCosym> items;
    for (const auto& [e, o] : f.structures) {
      items.push_back(make_structure(f.forms.at(e), f.forms.at(o)));
    }
    agree(make_generators(std::move(items)));
  }
  {
    FrameFile f = corpus_frame("t3");
    auto s = [&](int i) {
      return make_structure(f.forms.at("eta" + std::to_string(i)),
                            f.forms.at("Om" + std::to_string(i)));
    };
    agree(make_generators({s(1), s(2)}));
    agree(make_generators({s(2), s(3)}));
  }
  // 50 random circles built from independent closed 1-form triples:
  // eta1 = a1, Om1 = a2 ^ a3, eta2 = a2, Om2 = a3 ^ a1
  std::mt19937 rng(303);
  int built = 0;
  while (built < 50) {
    FramePtr f = Frame::abelian(3);
    std::vector<KForm> alpha;
    Matrix m;
    for (int i = 0; i < 3; ++i) {
      KForm a = random_form(rng, f, 1);
      alpha.push_back(a);
      m.push_back({a.coeff({0}), a.coeff({1}), a.coeff({2})});
    }
    if (determinant(m, Ring::rational()).is_zero()) continue;
    Generators g = make_generators(
        {make_structure(alpha[0], wedge(alpha[1], alpha[2])),
         make_structure(alpha[1], wedge(alpha[2], alpha[0]))});
    agree(g);
    ++built;
  }
  CHECK(checked == 55);
}

TEST_CASE("property: roundness lambda-identity re-derivation") {
  // for a round circle the lambda-combination of the generator Reeb fields
  // satisfies the Reeb equations of (eta_l, Omega_l) modulo the sphere ideal
  for (const std::string name : {"heisenberg", "t3", "t7_pair2"}) {
    FrameFile f = corpus_frame(name);
    std::vector<AlmostCosym> items;
    for (const auto& [e, o] : f.structures) {
      items.push_back(make_structure(f.forms.at(e), f.forms.at(o)));
    }
    Generators g = make_generators(std::move(items));
    REQUIRE(is_round(g).ok());
    Ring lr = g.lambda_ring();
    KForm eta_l = family_eta(g);
    KForm om_l = family_omega(g);
    VectorField xi_l(g.frame, lr);
    for (int i = 0; i <= g.p(); ++i) {
      VectorField xi = to_ring(reeb(g.items[i]), lr);
      for (int k = 0; k < g.frame->dim(); ++k) {
        xi_l.set(k, xi_l[k] + Scalar::lambda(lr, i) * xi[k]);
      }
    }
    // eta_l(xi_l) = 1 mod sphere ideal
    Scalar pairing = Scalar::zero(lr);
    for (const auto& [key, c] : eta_l.coeffs()) pairing += c * xi_l[key[0]];
    CHECK((pairing - Scalar::one(lr)).reduce_sphere().is_zero());
    // i_{xi_l} Omega_l = 0 mod sphere ideal
    KForm contraction = interior(xi_l, om_l);
    bool zero = true;
    for (const auto& [key, c] : contraction.coeffs()) {
      if (!c.reduce_sphere().is_zero()) zero = false;
    }
    CHECK(zero);
  }
}
