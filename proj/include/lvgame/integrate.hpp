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

#ifndef LVGAME_INTEGRATE_HPP_
#define LVGAME_INTEGRATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "lvgame/errors.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

enum class Method { kRk4Fixed, kDp54Adaptive };

inline const char* method_name(Method method) {
  return method == Method::kRk4Fixed ? "rk4_fixed" : "dp54_adaptive";
}

struct IntegratorConfig {
  Method method = Method::kDp54Adaptive;
  double dt_init = 1e-3;  // initial step (adaptive) or the step (fixed)
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double t_end = 1.0;
  std::size_t max_steps = 50'000'000;
  double sample_dt = 0.01;

  void check() const {
    auto tol_ok = [](double tol) { return tol > 0.0 && tol <= 1e-2; };
    if (!tol_ok(rel_tol) || !tol_ok(abs_tol)) {
      throw DomainError("integrator: tolerances must lie in (0, 1e-2]");
    }
    if (!(t_end > 0.0)) throw DomainError("integrator: t_end must be positive");
    if (!(dt_init > 0.0)) throw DomainError("integrator: dt_init must be positive");
    if (!(sample_dt > 0.0)) throw DomainError("integrator: sample_dt must be positive");
    if (max_steps == 0) throw DomainError("integrator: max_steps must be positive");
  }
};

// Uniform output grid {0, dt, 2 dt, ..., t_end}. When t_end is not a
// multiple of dt the last point is t_end itself.
inline std::vector<double> sample_grid(double t_end, double sample_dt) {
  const double ratio = t_end / sample_dt;
  auto count = static_cast<std::size_t>(std::floor(ratio + 1e-9));
  std::vector<double> grid;
  grid.reserve(count + 2);
  for (std::size_t k = 0; k <= count; ++k) {
    grid.push_back(std::min(static_cast<double>(k) * sample_dt, t_end));
  }
  if (t_end - grid.back() > 1e-9 * sample_dt) grid.push_back(t_end);
  grid.back() = t_end;
  return grid;
}

inline std::string format_state(const Vector& x) {
  std::string out = "(";
  char buf[32];
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", x[i]);
    out += (i ? ", " : "");
    out += buf;
  }
  return out + ")";
}

// Leaves accepted states untouched.
struct NoProjection {
  bool operator()(double /*t*/, Vector& /*x*/) const { return false; }
};

namespace detail {

// Dormand-Prince 5(4) tableau with the order-4 continuous extension.
struct Dopri5 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113,
                          a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                          a76 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;
  static constexpr double d1 = -12715105075.0 / 11282082432.0,
                          d3 = 87487479700.0 / 32700410799.0,
                          d4 = -10690763975.0 / 1880347072.0,
                          d5 = 701980252875.0 / 199316789632.0,
                          d6 = -1453857185.0 / 822651844.0,
                          d7 = 69997945.0 / 29380423.0;
};

// Collects samples on the output grid as steps are accepted.
class Sampler {
 public:
  Sampler(std::vector<double> grid, Eigen::Index dim)
      : grid_(std::move(grid)), dim_(dim) {
    rows_.reserve(grid_.size());
  }

  bool pending() const { return next_ < grid_.size(); }
  double next_time() const { return grid_[next_]; }
  void push(Vector x) {
    rows_.push_back(std::move(x));
    ++next_;
  }

  Trajectory finish(IntegratorMeta meta) && {
    Trajectory traj;
    traj.times = std::move(grid_);
    traj.states.resize(static_cast<Eigen::Index>(rows_.size()), dim_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      traj.states.row(static_cast<Eigen::Index>(k)) = rows_[k].transpose();
    }
    traj.meta = std::move(meta);
    return traj;
  }

 private:
  std::vector<double> grid_;
  Eigen::Index dim_;
  std::vector<Vector> rows_;
  std::size_t next_ = 0;
};

inline bool finite(const Vector& v) { return v.allFinite(); }

}  // namespace detail

// Integrates the autonomous system dx/dt = rhs(x) from t = 0 to cfg.t_end
// and samples it on sample_grid(cfg.t_end, cfg.sample_dt).
//
// `rhs(x, dx)` writes the field into dx. `project(t, x)` runs on every
// accepted state and on every sample; it may rewrite the state (returning
// true) or throw to abort the run.
template <class Rhs, class Project = NoProjection>
Trajectory integrate(Rhs&& rhs, const Vector& x0, const IntegratorConfig& cfg,
                     Project&& project = {}) {
  cfg.check();
  const Eigen::Index dim = x0.size();
  IntegratorMeta meta;
  meta.method = method_name(cfg.method);
  meta.rel_tol = cfg.rel_tol;
  meta.abs_tol = cfg.abs_tol;

  detail::Sampler sampler(sample_grid(cfg.t_end, cfg.sample_dt), dim);

  auto eval = [&](const Vector& x, Vector& dx) {
    rhs(x, dx);
    ++meta.rhs_evals;
  };

  Vector y = x0;
  Vector k1(dim);
  eval(y, k1);
  if (!detail::finite(y) || !detail::finite(k1)) {
    throw IntegrationError("non-finite right-hand side at t=0, state " +
                           format_state(y));
  }
  {
    Vector first = y;
    project(0.0, first);
    sampler.push(std::move(first));
  }

  double t = 0.0;
  const double t_end = cfg.t_end;
  double h = std::min(cfg.dt_init, t_end);
  std::size_t attempts = 0;

  Vector k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
  Vector stage(dim), y1(dim), err(dim);
  Vector r2(dim), r3(dim), r4(dim), r5(dim);

  while (t < t_end) {
    if (++attempts > cfg.max_steps) {
      throw IntegrationError("max_steps exceeded at t=" + std::to_string(t) +
                             ", state " + format_state(y));
    }
    bool last = false;
    if (t + h >= t_end || t_end - (t + h) < 1e-12 * t_end) {
      h = t_end - t;
      last = true;
    }
    const double h_min = 1e-14 * std::max(1.0, std::abs(t));
    if (h < h_min) {
      throw IntegrationError("step size underflow at t=" + std::to_string(t) +
                             ", state " + format_state(y));
    }

    if (cfg.method == Method::kRk4Fixed) {
      stage = y + 0.5 * h * k1;
      eval(stage, k2);
      stage = y + 0.5 * h * k2;
      eval(stage, k3);
      stage = y + h * k3;
      eval(stage, k4);
      y1 = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      eval(y1, k7);
      if (!detail::finite(y1) || !detail::finite(k7)) {
        throw IntegrationError("non-finite right-hand side near t=" +
                               std::to_string(t + h) + ", state " +
                               format_state(y));
      }
      const double t_new = last ? t_end : t + h;
      // Cubic Hermite interpolation between (y, k1) and (y1, k7).
      while (sampler.pending() && sampler.next_time() <= t_new) {
        const double th = (sampler.next_time() - t) / h;
        const double th2 = th * th, th3 = th2 * th;
        Vector s = (2 * th3 - 3 * th2 + 1) * y + (th3 - 2 * th2 + th) * h * k1 +
                   (-2 * th3 + 3 * th2) * y1 + (th3 - th2) * h * k7;
        project(sampler.next_time(), s);
        sampler.push(std::move(s));
      }
      t = t_new;
      y = y1;
      k1 = k7;
      if (project(t, y)) eval(y, k1);
      ++meta.accepted_steps;
      h = cfg.dt_init;
      continue;
    }

    using T = detail::Dopri5;
    stage = y + h * (T::a21 * k1);
    eval(stage, k2);
    stage = y + h * (T::a31 * k1 + T::a32 * k2);
    eval(stage, k3);
    stage = y + h * (T::a41 * k1 + T::a42 * k2 + T::a43 * k3);
    eval(stage, k4);
    stage = y + h * (T::a51 * k1 + T::a52 * k2 + T::a53 * k3 + T::a54 * k4);
    eval(stage, k5);
    stage = y + h * (T::a61 * k1 + T::a62 * k2 + T::a63 * k3 + T::a64 * k4 +
                     T::a65 * k5);
    eval(stage, k6);
    y1 = y + h * (T::a71 * k1 + T::a73 * k3 + T::a74 * k4 + T::a75 * k5 +
                  T::a76 * k6);
    eval(y1, k7);

    bool ok = detail::finite(k2) && detail::finite(k3) && detail::finite(k4) &&
              detail::finite(k5) && detail::finite(k6) && detail::finite(y1) &&
              detail::finite(k7);
    double err_norm = 0.0;
    if (ok) {
      err = h * (T::e1 * k1 + T::e3 * k3 + T::e4 * k4 + T::e5 * k5 +
                 T::e6 * k6 + T::e7 * k7);
      double acc = 0.0;
      for (Eigen::Index i = 0; i < dim; ++i) {
        const double scale =
            cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
        const double r = err[i] / scale;
        acc += r * r;
      }
      err_norm = std::sqrt(acc / static_cast<double>(dim));
      ok = std::isfinite(err_norm);
    }
    if (!ok) {
      ++meta.rejected_steps;
      h *= 0.25;
      if (h < h_min) {
        throw IntegrationError("non-finite right-hand side near t=" +
                               std::to_string(t) + ", state " + format_state(y));
      }
      continue;
    }

    if (err_norm > 1.0) {
      ++meta.rejected_steps;
      h *= std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
      continue;
    }

    const double t_new = last ? t_end : t + h;
    if (sampler.pending() && sampler.next_time() <= t_new) {
      r2 = y1 - y;
      r3 = h * k1 - r2;
      r4 = r2 - h * k7 - r3;
      r5 = h * (T::d1 * k1 + T::d3 * k3 + T::d4 * k4 + T::d5 * k5 +
                T::d6 * k6 + T::d7 * k7);
      while (sampler.pending() && sampler.next_time() <= t_new) {
        const double th = (sampler.next_time() - t) / h;
        const double th1 = 1.0 - th;
        Vector s = y + th * (r2 + th1 * (r3 + th * (r4 + th1 * r5)));
        project(sampler.next_time(), s);
        sampler.push(std::move(s));
      }
    }

    t = t_new;
    y = y1;
    k1 = k7;
    if (project(t, y)) eval(y, k1);
    ++meta.accepted_steps;

    const double fac =
        err_norm == 0.0 ? 10.0 : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 10.0);
    h *= fac;
  }

  return std::move(sampler).finish(std::move(meta));
}

}  // namespace lvgame

#endif  // LVGAME_INTEGRATE_HPP_
