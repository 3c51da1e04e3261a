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

#ifndef LVGAME_REGRET_HPP_
#define LVGAME_REGRET_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "lvgame/errors.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

// Time-averaged regret of a strategy path against the best fixed pure
// strategy. Index k corresponds to times[k]; the t = 0 sample is omitted.
struct RegretSeries {
  std::vector<double> times;
  std::vector<double> avg_regret;
  std::vector<Eigen::Index> best_action;  // 0-based
  Matrix cumulative_payoffs;                // #times x m
};

namespace detail {

inline void check_regret_inputs(const PayoffMatrix& game, const Trajectory& traj) {
  if (game.A.rows() != game.A.cols()) throw ShapeError("regret: game not square");
  if (traj.states.cols() != game.m()) {
    throw ShapeError("regret: trajectory dimension does not match the game");
  }
  if (traj.states.rows() != static_cast<Eigen::Index>(traj.times.size())) {
    throw ShapeError("regret: trajectory times and states disagree");
  }
}

}  // namespace detail

// y(t) = int_0^t A p(s) ds by the composite trapezoid rule on the sample
// grid, with y(0) = 0. One row per sample.
inline Matrix cumulative_payoffs(const PayoffMatrix& game, const Trajectory& traj) {
  detail::check_regret_inputs(game, traj);
  const Eigen::Index rows = traj.states.rows();
  Matrix y = Matrix::Zero(rows, game.m());
  if (rows == 0) return y;
  Vector prev = game.A * traj.states.row(0).transpose();
  for (Eigen::Index k = 1; k < rows; ++k) {
    const Vector cur = game.A * traj.states.row(k).transpose();
    const double dt = traj.times[static_cast<std::size_t>(k)] -
                      traj.times[static_cast<std::size_t>(k - 1)];
    y.row(k) = y.row(k - 1) + (0.5 * dt * (prev + cur)).transpose();
    prev = cur;
  }
  return y;
}

inline RegretSeries time_avg_regret(const PayoffMatrix& game, const Trajectory& traj) {
  detail::check_regret_inputs(game, traj);
  const Eigen::Index rows = traj.states.rows();
  if (rows < 2) throw ShapeError("regret: trajectory needs at least 2 samples");

  const Matrix y = cumulative_payoffs(game, traj);
  RegretSeries out;
  out.cumulative_payoffs = y.bottomRows(rows - 1);

  // Realized payoff int_0^t p'Ap ds, same quadrature.
  auto realized_rate = [&](Eigen::Index k) {
    const Vector p = traj.states.row(k).transpose();
    return p.dot(game.A * p);
  };
  double realized = 0.0;
  double prev = realized_rate(0);
  for (Eigen::Index k = 1; k < rows; ++k) {
    const double cur = realized_rate(k);
    const double t = traj.times[static_cast<std::size_t>(k)];
    realized += 0.5 * (t - traj.times[static_cast<std::size_t>(k - 1)]) * (prev + cur);
    prev = cur;

    Eigen::Index best = 0;
    double best_value = y(k, 0);
    for (Eigen::Index i = 1; i < y.cols(); ++i) {
      if (y(k, i) > best_value) {
        best_value = y(k, i);
        best = i;
      }
    }
    out.times.push_back(t);
    out.avg_regret.push_back((best_value - realized) / t);
    out.best_action.push_back(best);
  }
  return out;
}

// max_i ln(1 / p_i(0)): the cumulative regret of game-time replicator
// dynamics never exceeds this.
inline double regret_bound(const Vector& p0) {
  return -std::log(p0.minCoeff());
}

}  // namespace lvgame

#endif  // LVGAME_REGRET_HPP_
