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

#ifndef LVGAME_LORENZ_HPP_
#define LVGAME_LORENZ_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "lvgame/embedding.hpp"
#include "lvgame/errors.hpp"
#include "lvgame/integrate.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

// Lorenz parameters plus the shift r that moves the attractor into the
// positive orthant.
struct LorenzParams {
  double sigma = 10.0;
  double rho = 28.0;
  double beta = 8.0 / 3.0;
  double r = 76.0;

  double eta() const { return rho + r; }
  double alpha() const { return r - rho * r - r * r; }
  double mu() const { return r * r + beta * r; }

  void check() const {
    if (!(sigma > 0.0) || !(rho > 0.0) || !(beta > 0.0) || !(r > 0.0)) {
      throw DomainError("Lorenz parameters must be positive");
    }
  }
};

// Heuristic trapping radius 2 (rho + sigma).
inline double default_shift_radius(double sigma, double rho, double /*beta*/) {
  return 2.0 * (rho + sigma);
}

inline Vector lorenz_rhs(const LorenzParams& p, const Vector& x) {
  Vector dx(3);
  dx << p.sigma * (x[1] - x[0]), x[0] * (p.rho - x[2]) - x[1],
      x[0] * x[1] - p.beta * x[2];
  return dx;
}

// Lorenz system translated by (r, r, r), written as a GLV system with ten
// monomials (the last one constant).
inline GlvSystem shifted_lorenz_glv(const LorenzParams& p) {
  p.check();
  const double s = p.sigma, r = p.r;
  GlvSystem sys;
  sys.lambda = Vector::Zero(3);
  sys.A.resize(3, 10);
  // clang-format off
  sys.A << s, 0,        0,  0, 0,          0,  0,  0, 0,      -s,
           0, p.eta(), -1,  r, p.alpha(),  0,  0,  0, 0,      -1,
           0, 0,        0,  0, 0,          1, -r, -r, p.mu(), -p.beta;
  sys.B.resize(10, 3);
  sys.B << -1,  1,  0,
            1, -1,  0,
            1, -1,  1,
            0, -1,  1,
            0, -1,  0,
            1,  1, -1,
            1,  0, -1,
            0,  1, -1,
            0,  0, -1,
            0,  0,  0;
  // clang-format on
  return sys;
}

// The 11 x 11 Lorenz payoff matrix transcribed entry by entry from its
// closed form in sigma, beta, r, eta, alpha, mu. Independent of embed().
inline Matrix lorenz_display_matrix(const LorenzParams& p) {
  const double s = p.sigma, b = p.beta, r = p.r;
  const double e = p.eta(), a = p.alpha(), m = p.mu();
  Matrix A(11, 11);
  // clang-format off
  A << -s,  e, -1,  r,  a,  0,  0,  0,  0, s - 1,         0,
        s, -e,  1, -r, -a,  0,  0,  0,  0, 1 - s,         0,
        s, -e,  1, -r, -a,  1, -r, -r,  m, 1 - s - b,     0,
        0, -e,  1, -r, -a,  1, -r, -r,  m, 1 - b,         0,
        0, -e,  1, -r, -a,  0,  0,  0,  0, 1,             0,
        s,  e, -1,  r,  a, -1,  r,  r, -m, b - s - 1,     0,
        s,  0,  0,  0,  0, -1,  r,  r, -m, b - s,         0,
        0,  e, -1,  r,  a, -1,  r,  r, -m, b - 1,         0,
        0,  0,  0,  0,  0, -1,  r,  r, -m, b,             0,
        0,  0,  0,  0,  0,  0,  0,  0,  0, 0,             0,
        0,  0,  0,  0,  0,  0,  0,  0,  0, 0,             0;
  // clang-format on
  return A;
}

inline GameEmbedding lorenz_game(const LorenzParams& p) {
  return embed(shifted_lorenz_glv(p));
}

// Is x (shifted coordinates) inside the sphere of radius r centred on the
// shifted point (0, 0, rho + sigma)?
inline bool in_trapping_sphere(const LorenzParams& p, const Vector& x) {
  const double a = x[0] - p.r, b = x[1] - p.r, c = x[2] - p.r - p.rho - p.sigma;
  return a * a + b * b + c * c <= p.r * p.r;
}

// Integrates the plain Lorenz system from x0 (unshifted coordinates) with
// boost.odeint's dense-output Dormand-Prince stepper and returns the
// samples shifted by (r, r, r). Shares nothing with the in-house engine.
inline Trajectory reference_lorenz(const LorenzParams& p, const Vector& x0,
                                   const IntegratorConfig& cfg) {
  namespace odeint = boost::numeric::odeint;
  cfg.check();
  if (x0.size() != 3) throw ShapeError("reference_lorenz: state must have length 3");
  using State = std::array<double, 3>;
  auto rhs = [&p](const State& x, State& dx, double /*t*/) {
    dx[0] = p.sigma * (x[1] - x[0]);
    dx[1] = x[0] * (p.rho - x[2]) - x[1];
    dx[2] = x[0] * x[1] - p.beta * x[2];
  };
  const std::vector<double> grid = sample_grid(cfg.t_end, cfg.sample_dt);
  Trajectory traj;
  traj.times = grid;
  traj.states.resize(static_cast<Eigen::Index>(grid.size()), 3);
  State x{x0[0], x0[1], x0[2]};
  std::size_t row = 0;
  auto observer = [&](const State& s, double /*t*/) {
    for (int k = 0; k < 3; ++k) {
      traj.states(static_cast<Eigen::Index>(row), k) = s[static_cast<std::size_t>(k)] + p.r;
    }
    ++row;
  };
  auto stepper = odeint::make_dense_output(
      cfg.abs_tol, cfg.rel_tol, odeint::runge_kutta_dopri5<State>());
  const std::size_t steps = odeint::integrate_times(
      stepper, rhs, x, grid.begin(), grid.end(), cfg.dt_init, observer);
  if (row != grid.size()) throw IntegrationError("reference_lorenz: missing samples");
  traj.meta.method = "odeint_dopri5";
  traj.meta.rel_tol = cfg.rel_tol;
  traj.meta.abs_tol = cfg.abs_tol;
  traj.meta.accepted_steps = steps;
  return traj;
}

}  // namespace lvgame

#endif  // LVGAME_LORENZ_HPP_
