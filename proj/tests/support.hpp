#pragma once

// Shared random generators for the property suites: Jacobi-safe random
// frames of dims 3-8 and random constant tensors on them.

#include <random>

#include "cosym/exterior.hpp"

namespace cosym::testsupport {

inline Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

/// Random frame from one of four Jacobi-safe families.
inline FramePtr random_frame(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> family(0, 3);
  std::uniform_int_distribution<int> small(-2, 2);
  BracketTable bt;
  switch (family(rng)) {
    case 0:  // abelian
      break;
    case 1: {  // heisenberg + abelian directions
      Rational c(small(rng));
      if (c != 0) bt[{0, 1}][2] = c;
      break;
    }
    case 2: {  // almost abelian: ad(e_n) acts on span(e_1..e_{n-1})
      for (int i = 0; i + 1 < dim; ++i) {
        for (int j = 0; j + 1 < dim; ++j) {
          int c = small(rng);
          if (c != 0) bt[{i, dim - 1}][j] += Rational(c);
        }
      }
      break;
    }
    default: {  // two-step nilpotent: [e_i, e_j] central for i, j < m
      int m = dim / 2 + 1;
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          for (int k = m; k < dim; ++k) {
            int c = small(rng);
            if (c != 0) bt[{i, j}][k] += Rational(c);
          }
        }
      }
      break;
    }
  }
  for (auto it = bt.begin(); it != bt.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();) {
      jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
    }
    it = it->second.empty() ? bt.erase(it) : std::next(it);
  }
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return std::make_shared<Frame>(std::move(names), std::move(bt));
}

inline KForm random_form(std::mt19937& rng, const FramePtr& f, int degree) {
  KForm a(f, degree, Ring::rational());
  std::uniform_int_distribution<int> keep(0, 2);
  std::vector<int> key(degree);
  // iterate strictly increasing tuples
  for (int i = 0; i < degree; ++i) key[i] = i;
  int dim = f->dim();
  for (;;) {
    if (keep(rng) != 0) a.add_coeff(key, Scalar(rand_rational(rng)));
    int pos = degree - 1;
    while (pos >= 0 && key[pos] == dim - degree + pos) --pos;
    if (pos < 0) break;
    ++key[pos];
    for (int i = pos + 1; i < degree; ++i) key[i] = key[i - 1] + 1;
  }
  return a;
}

inline VectorField random_vector(std::mt19937& rng, const FramePtr& f) {
  VectorField v(f, Ring::rational());
  for (int i = 0; i < f->dim(); ++i) v.set(i, Scalar(rand_rational(rng)));
  return v;
}

}  // namespace cosym::testsupport
