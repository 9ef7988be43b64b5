#pragma once

#include <span>

#include "cosym/tensors.hpp"

namespace cosym {

// -- constructors -----------------------------------------------------------

/// e^i as a 1-form in the given ring.
KForm basis_covector(const FramePtr& frame, int i, Ring ring = Ring::rational());
/// e_i as a vector field in the given ring.
VectorField basis_vector(const FramePtr& frame, int i, Ring ring = Ring::rational());
/// The constant-1 zero-form.
KForm unit_form(const FramePtr& frame, Ring ring = Ring::rational());
KForm zero_form(const FramePtr& frame, int degree, Ring ring = Ring::rational());

// -- linear structure --------------------------------------------------------

KForm operator+(const KForm& a, const KForm& b);
KForm operator-(const KForm& a, const KForm& b);
KForm operator-(const KForm& a);
KForm operator*(const Scalar& c, const KForm& a);

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(const Scalar& c, const VectorField& a);

// -- ring promotion ----------------------------------------------------------

KForm to_ring(const KForm& a, Ring target);
VectorField to_ring(const VectorField& v, Ring target);
EndoField to_ring(const EndoField& p, Ring target);

/// Specialize a lambda-ring tensor at an exact rational point.
KForm specialize(const KForm& a, std::span<const Rational> point);
VectorField specialize(const VectorField& v, std::span<const Rational> point);
EndoField specialize(const EndoField& p, std::span<const Rational> point);

// -- exterior algebra --------------------------------------------------------

/// Determinant-convention wedge: (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X).
KForm wedge(const KForm& a, const KForm& b);

/// m-fold wedge power; power 0 is the constant-1 zero-form.
KForm wedge_power(const KForm& a, int m);

/// Interior product i_v a; antiderivation of degree -1. Degree-0 input throws.
KForm interior(const VectorField& v, const KForm& a);

/// Chevalley-Eilenberg exterior derivative for constant-coefficient forms:
/// d e^k = -sum_{i<j} c^k_{ij} e^i ^ e^j, extended as an antiderivation.
/// Convention: d a(X,Y) = -a([X,Y]) for 1-forms (no 1/2 factor).
KForm ext_d(const KForm& a);

/// Full alternating-sum evaluation over permutations; the independent
/// determinant-expansion oracle used to cross-check wedge/interior.
Scalar eval(const KForm& a, std::span<const VectorField> vectors);

/// Bilinear extension of the frame's structure constants.
VectorField bracket(const VectorField& v, const VectorField& w);

/// (L_v a)(w) = -a([v, w]) for constant tensors on a Lie frame.
KForm lie_derivative(const VectorField& v, const KForm& one_form);

/// (L_v P)(w) = [v, Pw] - P[v, w].
EndoField lie_derivative(const VectorField& v, const EndoField& p);

}  // namespace cosym
