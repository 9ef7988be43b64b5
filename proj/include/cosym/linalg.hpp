#pragma once

#include <optional>
#include <vector>

#include "cosym/scalar.hpp"

namespace cosym {

using Matrix = std::vector<std::vector<Scalar>>;
using Column = std::vector<Scalar>;

/// Solution of a linear system over a polynomial ring is returned
/// fraction-free: the true solution is numerator / denominator.
struct LinearSolution {
  Column numerator;
  Scalar denominator;
};

/// Solve A x = b exactly. Over the rational field the denominator is 1.
/// Over a lambda-polynomial ring, Bareiss fraction-free elimination is used
/// and the (polynomial) denominator is recorded. Throws SingularSystem if
/// the system has no unique solution.
LinearSolution solve_linear(Matrix a, Column b, Ring ring);

/// Exact determinant (Bareiss; divisions are exact over any integral domain).
Scalar determinant(Matrix a, Ring ring);

/// Inverse over the rational field. Throws SingularSystem when singular.
Matrix invert(Matrix a, Ring ring);

/// Basis of the null space of A over the rational field.
std::vector<Column> kernel_basis(Matrix a, Ring ring);

/// Rank over the rational field.
int rank(Matrix a, Ring ring);

}  // namespace cosym
