#pragma once

#include <vector>

#include "cosym/linalg.hpp"
#include "cosym/structures.hpp"

namespace cosym {

/// p+1 almost cosymplectic generators on a common frame, coefficients over
/// the rational field. The lambda-parametric family eta_l = sum l_i eta_i,
/// omega_l = sum l_i omega_i is built on demand in the lambda ring.
struct Generators {
  FramePtr frame;
  std::vector<AlmostCosym> items;  // size p + 1, p >= 1
  int n;                           // dim = 2n + 1

  int p() const { return static_cast<int>(items.size()) - 1; }
  Ring lambda_ring() const { return Ring::lambda(p() + 1); }
};

/// Validates frames, rings, and p >= 1. Degenerate members (vanishing
/// individual volume) are allowed here; verify_p_sphere refutes them.
Generators make_generators(std::vector<AlmostCosym> items);

/// sum l_i eta_i and sum l_i omega_i over Q[l1..l_{p+1}].
KForm family_eta(const Generators& g);
KForm family_omega(const Generators& g);

/// Top coefficient V(l) of eta_l ^ omega_l^n; homogeneous of degree n + 1
/// whenever nonzero (checked).
Poly family_volume(const Generators& g);

/// Decides V(l) != 0 on the unit sphere S^p.
/// Pipeline: parity shortcut (odd degree => refuted), exact pattern
/// V = c (sum l_i^2)^((n+1)/2) => verified-exact, p = 1 Sturm isolation on
/// the two affine charts plus the chart-excluded axis points, p >= 2 exact
/// rational interval subdivision of the cube-boundary parametrization up to
/// max_depth. Refutations carry an integer-coordinate witness ray (or an
/// isolating interval when the zero is irrational).
Certificate verify_p_sphere(const Generators& g, int max_depth = 12);

/// Polynomial-identity tautness: the full top form equals
/// V(e1) (sum l_i^2)^((n+1)/2) times the frame volume. On 3-dim circles the
/// two generator equations eta1^Omega1 = eta2^Omega2 and
/// eta1^Omega2 = -eta2^Omega1 are checked as well; the methods must agree.
Certificate is_taut(const Generators& g);

/// Roundness via the generator conditions: eta_i(xi_j) + eta_j(xi_i) = 0 for
/// i != j and i_{xi_i}Omega_j + i_{xi_j}Omega_i = 0 for all i, j. The witness
/// records the first violated pair.
Certificate is_round(const Generators& g);

struct ReebDistribution {
  std::vector<VectorField> xis;   // xi_1 .. xi_{p+1}
  // 3-dim circle data (empty otherwise):
  std::vector<KForm> thetas;      // i_{xi_1}Omega_2, i_{xi_2}Omega_1
  std::vector<std::vector<Column>> kernels;  // ker of each theta
  bool kernels_match_span = false;
};

/// Span of the Reeb fields; on 3-dim circles also the common-kernel
/// characterization span(xi_1, xi_2) = ker(i_{xi_1}Omega_2) = ker(i_{xi_2}Omega_1).
ReebDistribution reeb_distribution(const Generators& g);

/// Involutivity of span(xi_1..xi_{p+1}) in any dimension: every pairwise
/// bracket must stay in the span. Refutations carry the first offending
/// bracket as witness. (On 3-dim circles, integrability() is the refined
/// two-method cross-check.)
Certificate involutivity(const Generators& g);

/// Integrability of the Reeb distribution on a 3-dim circle, decided two
/// ways: theta ^ d theta = 0 for both contraction forms, and bracket closure
/// of span(xi_1, xi_2). The methods must agree.
Certificate integrability(const Generators& g);

/// p = 1: i_{xi_1}Omega_2 != 0, i_{xi_2}Omega_1 != 0, and xi_1, xi_2
/// linearly independent.
Certificate nonvanishing_check(const Generators& g);

}  // namespace cosym
