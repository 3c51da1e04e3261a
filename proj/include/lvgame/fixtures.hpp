// Copyright 2026 The lvgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LVGAME_FIXTURES_HPP_
#define LVGAME_FIXTURES_HPP_

#include <cmath>
#include <random>
#include <vector>

#include "lvgame/polynomial.hpp"
#include "lvgame/random.hpp"
#include "lvgame/types.hpp"

namespace lvgame::fixtures {

// dx/dt = x (1 - x).
inline GlvSystem logistic() {
  GlvSystem sys;
  sys.lambda = Vector::Constant(1, 1.0);
  sys.A = Matrix::Constant(1, 1, -1.0);
  sys.B = Matrix::Constant(1, 1, 1.0);
  return sys;
}

inline double logistic_solution(double x0, double t) {
  const double e = std::exp(t);
  return x0 * e / (1.0 - x0 + x0 * e);
}

// Two competing species with a stable interior equilibrium.
inline GlvSystem competition() {
  GlvSystem sys;
  sys.lambda = (Vector(2) << 1.0, 0.8).finished();
  sys.A = (Matrix(2, 2) << -1.0, -0.5, -0.3, -1.0).finished();
  sys.B = Matrix::Identity(2, 2);
  return sys;
}

// Non-integer exponents; the orbit settles onto an equilibrium.
inline GlvSystem fractional() {
  GlvSystem sys;
  sys.lambda = (Vector(2) << 1.0, 0.5).finished();
  sys.A = (Matrix(2, 3) << -1.0, -0.2, 0.0, 0.0, 0.0, -0.5).finished();
  sys.B = (Matrix(3, 2) << 1.5, 0.0, 0.0, 1.0, 0.5, 1.0).finished();
  return sys;
}

// Random GLV system with exponents in {-1, 0, 1}.
inline GlvSystem random_glv(Rng& rng, int n) {
  std::uniform_int_distribution<int> extra(0, 2);
  std::uniform_int_distribution<int> expo(-1, 1);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const int monomials = n + extra(rng);
  GlvSystem sys;
  sys.lambda.resize(n);
  for (int i = 0; i < n; ++i) sys.lambda[i] = coef(rng);
  sys.A.resize(n, monomials);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < monomials; ++j) sys.A(i, j) = coef(rng);
  }
  sys.B.resize(monomials, n);
  for (int j = 0; j < monomials; ++j) {
    for (int k = 0; k < n; ++k) sys.B(j, k) = expo(rng);
  }
  return sys;
}

// m x m game with entries uniform in [-scale, scale].
inline PayoffMatrix random_game(Rng& rng, int m, double scale = 1.0) {
  std::uniform_real_distribution<double> entry(-scale, scale);
  PayoffMatrix g{Matrix(m, m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) g.A(i, j) = entry(rng);
  }
  return g;
}

// Cyclic field on the 3-simplex: rock-paper-scissors interaction plus a
// linear rotation. Coordinates sum to the zero polynomial.
inline PolynomialField cyclic_field() {
  const int n = 3;
  const double Q[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  PolynomialField f{n, std::vector<Polynomial>(3)};
  for (int i = 0; i < n; ++i) {
    Polynomial p;
    for (int j = 0; j < n; ++j) {
      if (Q[i][j] == 0) continue;
      Monomial m = make_constant(n, Q[i][j]);
      m.exponents[static_cast<std::size_t>(i)] += 1;
      m.exponents[static_cast<std::size_t>(j)] += 1;
      p.push_back(m);
    }
    p.push_back(make_variable(n, (i + 1) % n, 0.5));
    p.push_back(make_variable(n, i, -0.5));
    f.coords[static_cast<std::size_t>(i)] = canonicalize(p);
  }
  return f;
}

}  // namespace lvgame::fixtures

#endif  // LVGAME_FIXTURES_HPP_
