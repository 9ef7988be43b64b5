#pragma once

#include <string>

#include "cosym/structures.hpp"

namespace cosym {

/// Base frame with one appended abelian direction (the R factor); the new
/// direction comes last and its dual covector plays the role of dt.
FramePtr extend_frame(const FramePtr& base, const std::string& t_name = "t");

/// Reinterpret a form on the base frame as a form on the extended frame
/// (coefficients unchanged; no dt components).
KForm lift(const KForm& a, const FramePtr& ext);

/// omega = dt ^ eta + Omega on the extended frame. Closedness of omega is
/// re-verified against classify(s): omega is closed iff s is cosymplectic.
KForm symplectize(const AlmostCosym& s, const std::string& t_name = "t");

struct CoupleReport {
  int half_dim;   // m with dim_ext = 2m
  KForm w1_top;   // w1^m
  KForm w2_top;   // w2^m
  KForm cross;    // w1 ^ w2
  bool closed1 = false, closed2 = false;
  bool orthogonal = false;     // w1 ^ w2 = 0
  bool equal_tops = false;     // w1^m = w2^m
  int sign1 = 0, sign2 = 0;    // orientation of the tops against dt ^ (base volume)
  bool couple = false;         // dim 4 notion: orthogonal, both tops positively oriented
  bool conformal = false;      // couple with equal tops and both forms closed
};

/// Exact wedge bookkeeping for a pair of 2-forms on an even-dimensional
/// frame whose last direction is the R factor. The couple/conformal flags
/// are only asserted in dimension 4; higher even dimensions get the raw
/// products and the orthogonality/equal-top facts.
CoupleReport couple_check(const KForm& w1, const KForm& w2);

/// The unique J with i_X w1 = i_{JX} w2 for all X, i.e. J = B2^{-1} B1 on
/// the flat-map matrices B_k[i][j] = w_k(e_i, e_j). The defining identity is
/// re-verified on every basis vector. Throws SingularSystem when w2 is
/// degenerate; rational coefficients only.
EndoField recursion_operator(const KForm& w1, const KForm& w2);

/// J composed with itself equals -Identity (the conformal-couple criterion).
bool squares_to_minus_identity(const EndoField& j);

}  // namespace cosym
