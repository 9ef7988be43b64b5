#include "cosym/linalg.hpp"

#include <utility>

#include "cosym/error.hpp"

namespace cosym {

namespace {

int find_pivot(const Matrix& a, int col, int from) {
  for (int r = from; r < static_cast<int>(a.size()); ++r) {
    if (!a[r][col].is_zero()) return r;
  }
  return -1;
}

/// Reduced row echelon form over the rational field; returns pivot columns.
std::vector<int> rref(Matrix& a, Ring ring) {
  if (!ring.is_rational()) {
    fail(ErrorKind::Precondition, "field elimination requires the rational ring");
  }
  std::vector<int> pivots;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = find_pivot(a, c, r);
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Scalar inv = Scalar::one(ring) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Scalar determinant(Matrix a, Ring ring) {
  int n = static_cast<int>(a.size());
  if (n == 0) return Scalar::one(ring);
  // Bareiss: all divisions by the previous pivot are exact.
  Scalar prev = Scalar::one(ring);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int p = find_pivot(a, k, k);
    if (p < 0) return Scalar::zero(ring);
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = Scalar::zero(ring);
    }
    prev = a[k][k];
  }
  Scalar det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

LinearSolution solve_linear(Matrix a, Column b, Ring ring) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  if (static_cast<int>(b.size()) != rows) {
    fail(ErrorKind::Precondition, "rhs size does not match matrix rows");
  }

  if (ring.is_rational()) {
    Matrix aug = a;
    for (int r = 0; r < rows; ++r) aug[r].push_back(b[r]);
    std::vector<int> pivots = rref(aug, ring);
    // consistency and uniqueness
    for (int p : pivots) {
      if (p == cols) fail(ErrorKind::SingularSystem, "inconsistent linear system");
    }
    if (static_cast<int>(pivots.size()) != cols) {
      fail(ErrorKind::SingularSystem, "linear system is underdetermined");
    }
    Column x(cols, Scalar::zero(ring));
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) x[pivots[r]] = aug[r][cols];
    return {std::move(x), Scalar::one(ring)};
  }

  // Polynomial ring: pick a nonsingular square subsystem, then Cramer with
  // Bareiss determinants (fraction-free; denominator recorded). Row subsets
  // are enumerated in lexicographic order; the systems seen here are tiny
  // (the Reeb solve has rows == cols + 1).
  if (rows < cols) fail(ErrorKind::SingularSystem, "underdetermined system");
  std::vector<int> chosen;
  Matrix square;
  Column rhs;
  Scalar det = Scalar::zero(ring);
  std::vector<int> subset(cols);
  for (int i = 0; i < cols; ++i) subset[i] = i;
  for (;;) {
    Matrix m;
    for (int r : subset) m.push_back(a[r]);
    Scalar d = determinant(m, ring);
    if (!d.is_zero()) {
      chosen = subset;
      square = std::move(m);
      det = std::move(d);
      break;
    }
    // next combination
    int i = cols - 1;
    while (i >= 0 && subset[i] == rows - cols + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < cols; ++j) subset[j] = subset[j - 1] + 1;
  }
  if (chosen.empty()) {
    fail(ErrorKind::SingularSystem, "no nonsingular square subsystem");
  }
  rhs.reserve(cols);
  for (int r : chosen) rhs.push_back(b[r]);
  Column num(cols, Scalar::zero(ring));
  for (int c = 0; c < cols; ++c) {
    Matrix m = square;
    for (int r = 0; r < cols; ++r) m[r][c] = rhs[r];
    num[c] = determinant(m, ring);
  }
  // validate the rows not used by Cramer: a_row . num == b_row * det
  for (int r = 0; r < rows; ++r) {
    Scalar acc = Scalar::zero(ring);
    for (int c = 0; c < cols; ++c) acc += a[r][c] * num[c];
    if (acc != b[r] * det) {
      fail(ErrorKind::SingularSystem, "inconsistent linear system");
    }
  }
  return {std::move(num), det};
}

Matrix invert(Matrix a, Ring ring) {
  if (!ring.is_rational()) {
    fail(ErrorKind::Precondition, "matrix inverse requires the rational ring");
  }
  int n = static_cast<int>(a.size());
  Matrix aug = a;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      aug[r].push_back(r == c ? Scalar::one(ring) : Scalar::zero(ring));
    }
  }
  std::vector<int> pivots = rref(aug, ring);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n) {
    fail(ErrorKind::SingularSystem, "singular matrix");
  }
  Matrix out(n, Column(n, Scalar::zero(ring)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out[r][c] = aug[r][n + c];
  }
  return out;
}

std::vector<Column> kernel_basis(Matrix a, Ring ring) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  if (rows == 0) {
    // everything is in the kernel
    std::vector<Column> basis;
    for (int c = 0; c < cols; ++c) {
      Column v(cols, Scalar::zero(ring));
      v[c] = Scalar::one(ring);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  std::vector<int> pivots = rref(a, ring);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Column> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Column v(cols, Scalar::zero(ring));
    v[c] = Scalar::one(ring);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
      v[pivots[r]] = -a[r][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(Matrix a, Ring ring) {
  return static_cast<int>(rref(a, ring).size());
}

}  // namespace cosym
