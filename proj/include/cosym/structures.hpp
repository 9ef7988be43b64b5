#pragma once

#include <optional>
#include <string>

#include "cosym/certificate.hpp"
#include "cosym/exterior.hpp"

namespace cosym {

/// Pair (eta, omega) on an odd-dimensional frame with eta ^ omega^n a
/// candidate volume form. The volume check runs at construction and is
/// stored; lambda-parametric members defer the pointwise check to the
/// sphere-family verifiers.
struct AlmostCosym {
  FramePtr frame;
  KForm eta;    // degree 1
  KForm omega;  // degree 2
  int n;        // dim = 2n + 1
  bool volume_nonzero;
};

/// Builds and checks an almost cosymplectic candidate. Throws on even
/// dimension or wrong degrees; a vanishing volume form is recorded in the
/// flag, not thrown.
AlmostCosym make_structure(KForm eta, KForm omega);

/// eta ^ omega^n (top degree).
KForm volume_form(const AlmostCosym& s);

struct ReebSolution {
  VectorField field;   // numerator when the denominator is nontrivial
  Scalar denominator;  // 1 over the rational field
};

/// The unique xi with i_xi eta = 1 and i_xi omega = 0, re-verified after the
/// solve. Throws SingularSystem when the structure is degenerate.
VectorField reeb(const AlmostCosym& s);
ReebSolution reeb_with_denominator(const AlmostCosym& s);

enum class StructureKind { Contact, Cosymplectic, Neither };

inline const char* kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::Contact: return "contact";
    case StructureKind::Cosymplectic: return "cosymplectic";
    case StructureKind::Neither: return "neither";
  }
  return "?";
}

struct StructureClass {
  StructureKind kind;
  KForm d_eta;    // witness forms for the closedness tests
  KForm d_omega;
};

/// Exact closedness tests: contact iff d eta = omega, cosymplectic iff both
/// are closed. The two cannot hold at once on a valid structure.
StructureClass classify(const AlmostCosym& s);

struct ClassReport {
  int cartan_class;  // 2s+1 if eta^(d eta)^s != 0, else 2s
  int s;             // max power with (d eta)^s != 0
  KForm d_eta_power;     // (d eta)^s
  KForm eta_wedge_power; // eta ^ (d eta)^s
};

/// Cartan class of a nonzero constant-coefficient 1-form.
ClassReport cartan_class(const KForm& eta);

}  // namespace cosym
