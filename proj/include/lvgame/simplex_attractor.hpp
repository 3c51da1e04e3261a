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

#ifndef LVGAME_SIMPLEX_ATTRACTOR_HPP_
#define LVGAME_SIMPLEX_ATTRACTOR_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "lvgame/errors.hpp"
#include "lvgame/polynomial.hpp"
#include "lvgame/random.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

struct CorrectionParams {
  double delta = 0.0;
  int n = 0;
};

// Pushes a tangent field inward on the boundary of the simplex:
// p_i = q_i + delta (1/n - y_i) for i < n and p_n = -(p_1 + ... + p_{n-1}).
inline PolynomialField boundary_correct(const PolynomialField& field, double delta) {
  check_field_shape(field);
  if (!(delta > 0.0)) throw DomainError("boundary_correct: delta must be positive");
  if (!is_tangent(field)) {
    throw DomainError("boundary_correct: field is not tangent to the simplex");
  }
  const int n = field.n;
  PolynomialField out{n, {}};
  Polynomial last;
  for (int i = 0; i + 1 < n; ++i) {
    Polynomial p = field.coords[static_cast<std::size_t>(i)];
    p.push_back(make_constant(n, delta / n));
    p.push_back(make_variable(n, i, -delta));
    p = canonicalize(p);
    for (const Monomial& mono : p) last.push_back(Monomial{-mono.coeff, mono.exponents});
    out.coords.push_back(std::move(p));
  }
  out.coords.push_back(canonicalize(last));
  return out;
}

// GLV system on the positive orthant with fitness
// M_i(y) = (1 - |y|_1) + p_i(y) / y_i, so dy_i/dt = y_i (1 - |y|_1) + p_i(y).
// The simplex is forward invariant and |y|_1 follows the logistic equation.
inline GlvSystem lift_to_glv(const PolynomialField& field) {
  check_field_shape(field);
  const int n = field.n;
  std::vector<std::map<std::vector<int>, double>> terms(static_cast<std::size_t>(n));
  Vector lambda = Vector::Ones(n);

  for (int i = 0; i < n; ++i) {
    auto& row = terms[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(k)] = 1;
      row[e] -= 1.0;
    }
    for (const Monomial& mono : canonicalize(field.coords[static_cast<std::size_t>(i)])) {
      std::vector<int> e = mono.exponents;
      e[static_cast<std::size_t>(i)] -= 1;
      row[e] += mono.coeff;
    }
  }

  const std::vector<int> zero(static_cast<std::size_t>(n), 0);
  std::map<std::vector<int>, Eigen::Index> columns;
  for (int i = 0; i < n; ++i) {
    for (const auto& [e, c] : terms[static_cast<std::size_t>(i)]) {
      if (e == zero) {
        lambda[i] += c;
      } else if (c != 0.0) {
        columns.emplace(e, 0);
      }
    }
  }
  Eigen::Index next = 0;
  for (auto& [e, col] : columns) col = next++;

  GlvSystem sys;
  sys.lambda = lambda;
  sys.A = Matrix::Zero(n, next);
  sys.B = Matrix::Zero(next, n);
  for (const auto& [e, col] : columns) {
    for (int k = 0; k < n; ++k) sys.B(col, k) = e[static_cast<std::size_t>(k)];
  }
  for (int i = 0; i < n; ++i) {
    for (const auto& [e, c] : terms[static_cast<std::size_t>(i)]) {
      if (e == zero || c == 0.0) continue;
      sys.A(i, columns.at(e)) += c;
    }
  }
  return sys;
}

// Sup-norm divergence bound (2 delta / L)(e^{L T} - 1) between the flow of
// a field and a 2 delta-close approximation over [0, T].
inline double gronwall_epsilon(double delta, double L, double T) {
  if (!(delta > 0.0) || !(L > 0.0) || !(T > 0.0)) {
    throw DomainError("gronwall_epsilon: arguments must be positive");
  }
  return 2.0 * delta / L * std::expm1(L * T);
}

// Largest infinity-norm of the Jacobian over `sample_count` uniform simplex
// points. A lower bound on the true Lipschitz constant.
inline double lipschitz_estimate(const PolynomialField& field, std::size_t sample_count,
                                 std::uint64_t seed = kDefaultSeed) {
  check_field_shape(field);
  if (sample_count == 0) throw DomainError("lipschitz_estimate: sample_count is zero");
  Rng rng(seed);
  double best = 0.0;
  for (std::size_t s = 0; s < sample_count; ++s) {
    const Vector y = sample_simplex(rng, field.n);
    const Matrix jac = jacobian(field, y);
    best = std::max(best, jac.cwiseAbs().rowwise().sum().maxCoeff());
  }
  return best;
}

}  // namespace lvgame

#endif  // LVGAME_SIMPLEX_ATTRACTOR_HPP_
