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

#ifndef LVGAME_TYPES_HPP_
#define LVGAME_TYPES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lvgame {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Generalized Lotka-Volterra system on the open positive orthant:
//
//   dx_i/dt = x_i * (lambda_i + sum_j A(i,j) * prod_k x_k^B(j,k))
//
// A is n x m', B is m' x n. Row j of B is the exponent vector of the j-th
// monomial; exponents are arbitrary reals.
struct GlvSystem {
  Vector lambda;
  Matrix A;
  Matrix B;

  Eigen::Index dim() const { return lambda.size(); }
  Eigen::Index monomials() const { return A.cols(); }
};

// Lotka-Volterra system dz_i/dt = z_i * (A_hat z)_i.
struct LvSystem {
  Matrix A_hat;

  Eigen::Index dim() const { return A_hat.rows(); }
};

struct Monomial {
  double coeff = 0.0;
  std::vector<int> exponents;
};

using Polynomial = std::vector<Monomial>;

// Polynomial vector field on the simplex, one polynomial per coordinate.
// Tangency requires the coordinate polynomials to sum to zero.
struct PolynomialField {
  int n = 0;
  std::vector<Polynomial> coords;
};

// Symmetric single-population matrix game.
struct PayoffMatrix {
  Matrix A;

  Eigen::Index m() const { return A.rows(); }
};

// Everything needed to run the source system as replicator dynamics and
// to move states between the two sides.
//
// B_bar is (m-1) x n: rows are the source monomial exponents after the
// growth vector has been absorbed. B_tilde is its square completion and
// B_tilde_inv the inverse used by the backward map.
struct GameEmbedding {
  PayoffMatrix game;
  int n = 0;
  Matrix B_bar;
  Matrix B_tilde;
  Matrix B_tilde_inv;

  Eigen::Index m() const { return game.m(); }
};

enum class TimeMode {
  kGame,       // dp/dt = p_i ((Ap)_i - p'Ap)
  kConjugate,  // game field scaled by 1/p_m; clock agrees with the source
};

struct IntegratorMeta {
  std::string method;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t rhs_evals = 0;
};

// Sampled orbit. Row k of `states` is the state at times[k].
struct Trajectory {
  std::vector<double> times;
  Matrix states;
  IntegratorMeta meta;

  std::size_t size() const { return times.size(); }
  Vector state(std::size_t k) const {
    return states.row(static_cast<Eigen::Index>(k)).transpose();
  }
};

}  // namespace lvgame

#endif  // LVGAME_TYPES_HPP_
