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

#ifndef LVGAME_RHS_HPP_
#define LVGAME_RHS_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "lvgame/errors.hpp"
#include "lvgame/polynomial.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

// |sum(p) - 1| allowed for a point to count as on the simplex.
inline constexpr double kSimplexTol = 1e-9;

namespace detail {

inline std::string dims(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

inline void check_glv_shape(const GlvSystem& sys) {
  const Eigen::Index n = sys.dim();
  if (n <= 0) throw ShapeError("GLV: dimension must be positive");
  if (sys.A.rows() != n) {
    throw ShapeError("GLV: A is " + dims(sys.A.rows(), sys.A.cols()) +
                     ", expected " + std::to_string(n) + " rows");
  }
  if (sys.B.rows() != sys.A.cols() || sys.B.cols() != n) {
    throw ShapeError("GLV: B is " + dims(sys.B.rows(), sys.B.cols()) +
                     ", expected " + dims(sys.A.cols(), n));
  }
}

// No domain checks: non-positive components produce NaN/inf, which the
// integrator treats as a failed trial step.
inline void glv_field(const GlvSystem& sys, const Vector& x, Vector& dx) {
  const Vector log_x = x.array().log().matrix();
  const Vector mono = (sys.B * log_x).array().exp().matrix();
  dx = (x.array() * (sys.lambda + sys.A * mono).array()).matrix();
}

inline void replicator_field(const Matrix& A, const Vector& p, TimeMode mode,
                             Vector& dp) {
  const Vector payoff = A * p;
  const double mean = p.dot(payoff);
  dp = (p.array() * (payoff.array() - mean)).matrix();
  if (mode == TimeMode::kConjugate) dp /= p[p.size() - 1];
}

}  // namespace detail

inline Vector eval_glv_rhs(const GlvSystem& sys, const Vector& x) {
  detail::check_glv_shape(sys);
  if (x.size() != sys.dim()) {
    throw ShapeError("GLV: state has length " + std::to_string(x.size()) +
                     ", expected " + std::to_string(sys.dim()));
  }
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0.0)) {
      throw DomainError("GLV: component " + std::to_string(k) +
                        " is not strictly positive");
    }
  }
  Vector dx;
  detail::glv_field(sys, x, dx);
  return dx;
}

inline Vector eval_lv_rhs(const LvSystem& sys, const Vector& z) {
  if (sys.A_hat.rows() != sys.A_hat.cols() || sys.A_hat.rows() == 0) {
    throw ShapeError("LV: interaction matrix must be square and non-empty");
  }
  if (z.size() != sys.dim()) throw ShapeError("LV: state dimension mismatch");
  if ((z.array() <= 0.0).any()) throw DomainError("LV: state must be positive");
  return (z.array() * (sys.A_hat * z).array()).matrix();
}

inline void check_simplex_interior(const Vector& p, const char* what) {
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0)) {
      throw DomainError(std::string(what) + ": component " + std::to_string(i) +
                        " is not strictly positive");
    }
  }
  if (!(std::abs(p.sum() - 1.0) <= kSimplexTol)) {
    throw DomainError(std::string(what) + ": components do not sum to 1");
  }
}

inline Vector eval_replicator_rhs(const PayoffMatrix& game, const Vector& p,
                                  TimeMode mode = TimeMode::kGame) {
  if (game.A.rows() != game.A.cols()) throw ShapeError("game: matrix not square");
  if (p.size() != game.m()) throw ShapeError("game: strategy dimension mismatch");
  check_simplex_interior(p, "replicator");
  Vector dp;
  detail::replicator_field(game.A, p, mode, dp);
  return dp;
}

// Payoff x1' A12 x2 received by agent 1.
inline double expected_payoff_two_player(const Matrix& A12, const Vector& x1,
                                         const Vector& x2) {
  if (A12.rows() != x1.size() || A12.cols() != x2.size()) {
    throw ShapeError("payoff: " + detail::dims(A12.rows(), A12.cols()) +
                     " matrix against strategies of length " +
                     std::to_string(x1.size()) + " and " +
                     std::to_string(x2.size()));
  }
  return x1.dot(A12 * x2);
}

struct ValidationItem {
  std::string invariant;
  bool ok = true;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationItem> items;

  bool passed() const {
    for (const auto& item : items) {
      if (!item.ok) return false;
    }
    return true;
  }
  void add(std::string invariant, bool ok, std::string message = {}) {
    items.push_back({std::move(invariant), ok, std::move(message)});
  }
};

inline ValidationReport validate(const GlvSystem& sys) {
  ValidationReport report;
  const Eigen::Index n = sys.dim();
  report.add("dimension", n > 0, "n = " + std::to_string(n));
  report.add("A rows", sys.A.rows() == n,
             "A is " + detail::dims(sys.A.rows(), sys.A.cols()));
  report.add("B shape", sys.B.rows() == sys.A.cols() && sys.B.cols() == n,
             "B is " + detail::dims(sys.B.rows(), sys.B.cols()));
  report.add("finite entries",
             sys.lambda.allFinite() && sys.A.allFinite() && sys.B.allFinite());
  return report;
}

inline ValidationReport validate(const PolynomialField& field) {
  ValidationReport report;
  try {
    check_field_shape(field);
    report.add("shape", true);
  } catch (const ShapeError& e) {
    report.add("shape", false, e.what());
    return report;
  }
  bool finite = true;
  for (const auto& poly : field.coords) {
    for (const auto& mono : poly) finite = finite && std::isfinite(mono.coeff);
  }
  report.add("finite coefficients", finite);
  report.add("tangency", is_tangent(field), "sum of coordinates must vanish");
  return report;
}

inline ValidationReport validate(const PayoffMatrix& game) {
  ValidationReport report;
  report.add("square", game.A.rows() == game.A.cols() && game.A.rows() > 0,
             "A is " + detail::dims(game.A.rows(), game.A.cols()));
  report.add("finite entries", game.A.allFinite());
  return report;
}

}  // namespace lvgame

#endif  // LVGAME_RHS_HPP_
