#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cosym/certificate.hpp"
#include "cosym/exterior.hpp"
#include "cosym/linalg.hpp"
#include "cosym/sphere_family.hpp"

namespace cosym {

/// Triplet (phi, xi, eta) with phi^2 = -I + eta (x) xi and eta(xi) = 1.
/// Construction via make_almost_contact enforces the axioms; the standalone
/// verifier returns a certificate instead. Lambda-ring structures are
/// verified modulo the sphere ideal (sum l_i^2 = 1).
struct AlmostContact {
  FramePtr frame;
  EndoField phi;
  VectorField xi;
  KForm eta;  // degree 1
};

Certificate verify_almost_contact(const EndoField& phi, const VectorField& xi,
                                  const KForm& eta);
AlmostContact make_almost_contact(EndoField phi, VectorField xi, KForm eta);

/// Symmetric positive-definite metric in the frame basis (rational
/// coefficients; definiteness via leading principal minors).
struct MetricTensor {
  FramePtr frame;
  Matrix g;
};

MetricTensor make_metric(FramePtr frame, Matrix g);
MetricTensor identity_metric(FramePtr frame);

/// g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y), as an exact matrix identity.
Certificate verify_compatible_metric(const MetricTensor& g, const AlmostContact& s);

/// Omega(X, Y) = g(X, phi Y); antisymmetry is verified.
KForm fundamental_form(const MetricTensor& g, const AlmostContact& s);

/// Almost contact 3-structure: the quaternion-like relations of an even
/// permutation (alpha, beta, gamma) hold for all three structures.
struct AC3 {
  FramePtr frame;
  std::array<AlmostContact, 3> s;
  std::optional<MetricTensor> g;
};

Certificate verify_3_structure(const std::array<AlmostContact, 3>& s);
AC3 make_ac3(std::array<AlmostContact, 3> s,
             std::optional<MetricTensor> g = std::nullopt);

/// Trilinear table T[k][i][j]. Scalar-valued tensors use the single output
/// slot k = 0; unary tensors the single second argument j = 0.
class TwoOneTensor {
 public:
  TwoOneTensor(FramePtr frame, Ring ring, bool scalar_valued = false,
               bool unary = false);

  const FramePtr& frame() const { return frame_; }
  Ring ring() const { return ring_; }
  bool scalar_valued() const { return scalar_valued_; }
  bool unary() const { return unary_; }
  int out_dim() const { return static_cast<int>(t_.size()); }
  int arg_dim() const { return static_cast<int>(t_[0].size()); }
  int second_dim() const { return static_cast<int>(t_[0][0].size()); }

  const Scalar& at(int k, int i, int j) const { return t_[k][i][j]; }
  void set(int k, int i, int j, Scalar c);
  void add(int k, int i, int j, const Scalar& c);

  bool is_zero() const;
  bool operator==(const TwoOneTensor& o) const;
  bool operator!=(const TwoOneTensor& o) const { return !(*this == o); }

  TwoOneTensor operator+(const TwoOneTensor& o) const;
  TwoOneTensor scaled(const Scalar& c) const;

 private:
  FramePtr frame_;
  Ring ring_;
  bool scalar_valued_, unary_;
  std::vector<std::vector<std::vector<Scalar>>> t_;
};

/// Yano-Ako Nijenhuis concomitant [P, Q](X, Y); the symmetry [P,Q] = [Q,P]
/// is re-verified by a second evaluation with the arguments swapped.
TwoOneTensor nijenhuis_concomitant(const EndoField& p, const EndoField& q);

/// The four tensors of a pair (alpha, beta) of an almost contact
/// 3-structure. The bilinear differential of eta is taken in the 1/2
/// convention (d_half eta(X,Y) = -eta([X,Y])/2), matching the normalization
/// under which N1_{a,a} = N1_{phi_a} and 2 N{i}_{a,a} = N{i}_{phi_a} hold.
struct NTensors {
  TwoOneTensor n1;  // vector-valued (1,2)
  TwoOneTensor n2;  // scalar-valued (0,2)
  TwoOneTensor n3;  // vector-valued unary (1,1)
  TwoOneTensor n4;  // scalar-valued unary (0,1)
};

/// Computes N1..N4 for the pair (alpha, beta), 0-based indices. Symmetry in
/// (alpha, beta) and the single-structure relations at alpha = beta are
/// cross-checked against an independent direct-expansion code path.
NTensors n_tensors(const AC3& t, int alpha, int beta);

/// Single-structure fundamental tensors via direct bracket expansion
/// (independent of nijenhuis_concomitant / lie_derivative).
NTensors fundamental_tensors(const AlmostContact& s);

/// The lambda-combination structure of Theorem-type sphere families:
/// phi_l = sum l_a phi_a etc. The rational overload requires an exact
/// sphere point (sum l_a^2 = 1); the symbolic overload works over
/// Q[l1,l2,l3] and is verified modulo the sphere ideal.
AlmostContact lambda_structure(const AC3& t, std::span<const Rational> point);
AlmostContact lambda_structure_symbolic(const AC3& t);

struct CharDistributions {
  std::vector<std::vector<Column>> c_alpha;  // C_a = ker eta_a cap ker i_X d eta_a
  std::vector<Column> horizontal;            // H = cap ker eta_a
  std::vector<Column> e_dist;                // E = {X in H : i_X d eta_a = 0 all a}
  std::vector<int> cartan_classes;           // class of each eta_a
  bool c_dims_match = false;  // dim C_a = dim - class_a for every a
  nlohmann::json reeb_bracket_pattern;       // [xi_a, xi_b] = c xi_c report
};

CharDistributions char_distributions(const AC3& t);

/// Hyperholomorphic product: three nondegenerate 2-forms on a 4k-dim frame
/// with pairwise anticommuting musical compositions give the generators
/// eta_a = dt_a, Omega_a = omega_a + eta_b ^ eta_c on the frame extended by
/// three abelian directions. Throws Precondition when the anticommutation
/// test fails.
Generators hyperholomorphic_product(const KForm& w1, const KForm& w2,
                                    const KForm& w3);

}  // namespace cosym
