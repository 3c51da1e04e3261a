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

#ifndef LVGAME_SIMULATE_HPP_
#define LVGAME_SIMULATE_HPP_

#include <string>

#include "lvgame/errors.hpp"
#include "lvgame/integrate.hpp"
#include "lvgame/rhs.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

// GLV states below this floor abort the run.
inline constexpr double kPositivityFloor = 1e-12;
// Replicator components below this floor abort the run.
inline constexpr double kUnderflowFloor = 1e-300;

inline Trajectory simulate_glv(const GlvSystem& sys, const Vector& x0,
                               const IntegratorConfig& cfg) {
  eval_glv_rhs(sys, x0);  // shape and positivity of the initial state
  auto rhs = [&sys](const Vector& x, Vector& dx) { detail::glv_field(sys, x, dx); };
  auto guard = [](double t, Vector& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (!(x[i] >= kPositivityFloor)) {
        throw BoundaryCollision("GLV component " + std::to_string(i) +
                                " reached the boundary at t=" + std::to_string(t) +
                                ", state " + format_state(x));
      }
    }
    return false;
  };
  return integrate(rhs, x0, cfg, guard);
}

inline Trajectory simulate_lv(const LvSystem& sys, const Vector& z0,
                              const IntegratorConfig& cfg) {
  eval_lv_rhs(sys, z0);
  auto rhs = [&sys](const Vector& z, Vector& dz) {
    dz = (z.array() * (sys.A_hat * z).array()).matrix();
  };
  auto guard = [](double t, Vector& z) {
    if ((z.array() < kPositivityFloor).any() || !z.allFinite()) {
      throw BoundaryCollision("LV state left the orthant at t=" + std::to_string(t));
    }
    return false;
  };
  return integrate(rhs, z0, cfg, guard);
}

// Replicator flow with renormalization onto the simplex after every
// accepted step and at every sample.
inline Trajectory simulate_replicator(const PayoffMatrix& game, const Vector& p0,
                                      TimeMode mode, const IntegratorConfig& cfg) {
  eval_replicator_rhs(game, p0, mode);
  const Matrix& A = game.A;
  auto rhs = [&A, mode](const Vector& p, Vector& dp) {
    detail::replicator_field(A, p, mode, dp);
  };
  auto renormalize = [](double t, Vector& p) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (!(p[i] >= kUnderflowFloor)) {
        throw SimplexUnderflow("replicator component " + std::to_string(i) +
                               " underflowed at t=" + std::to_string(t) +
                               ", state " + format_state(p));
      }
    }
    p /= p.sum();
    return true;
  };
  Vector start = p0 / p0.sum();
  return integrate(rhs, start, cfg, renormalize);
}

}  // namespace lvgame

#endif  // LVGAME_SIMULATE_HPP_
