#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosym/contact3.hpp"

namespace cosym {

/// Parsed frame document: one frame, named tensors, optional metric, and
/// the declared structure lists that drive the sphere / 3-structure
/// commands. The ring selector applies to the commands, not to the stored
/// coefficients (which are always exact rationals).
struct FrameFile {
  FramePtr frame;
  Ring ring = Ring::rational();
  std::map<std::string, KForm> forms;
  std::map<std::string, VectorField> vectors;
  std::map<std::string, EndoField> endos;
  std::optional<MetricTensor> metric;
  std::vector<std::pair<std::string, std::string>> structures;  // (eta, omega)
  std::vector<std::array<std::string, 3>> acstructures;         // (phi, xi, eta)
};

/// Line-based format; '#' starts a comment. Directives:
///   frame <dim>
///   basis <name> ...                       (optional; default e1..eN)
///   bracket <a> <b> = <vector terms>       ([e_a, e_b]; Jacobi checked)
///   ring rational | ring lambda <p>
///   form <name> <degree> = <form terms>    (terms: coeff opt., names joined by ^)
///   vector <name> = <vector terms>
///   endo <name> <basis> = <vector terms>   (column of the endomorphism)
///   metric identity
///   metric <a> <b> = <rational>            (symmetric entry)
///   structure <eta-name> <omega-name>
///   acstructure <phi-name> <xi-name> <eta-name>
/// Diagnostics carry the 1-based line number; Jacobi violations are
/// parse-time errors.
FrameFile parse_frame_file(const std::string& text);

/// Canonical re-serialization; parse(serialize(f)) reproduces f.
std::string serialize_frame_file(const FrameFile& f);

}  // namespace cosym
