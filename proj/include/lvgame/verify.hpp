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

#ifndef LVGAME_VERIFY_HPP_
#define LVGAME_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <future>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lvgame/embedding.hpp"
#include "lvgame/fixtures.hpp"
#include "lvgame/integrate.hpp"
#include "lvgame/io.hpp"
#include "lvgame/lorenz.hpp"
#include "lvgame/random.hpp"
#include "lvgame/recover.hpp"
#include "lvgame/regret.hpp"
#include "lvgame/rhs.hpp"
#include "lvgame/simplex_attractor.hpp"
#include "lvgame/simulate.hpp"

namespace lvgame {

struct VerifyOptions {
  bool strict = false;  // every threshold 10x tighter
  std::uint64_t seed = kDefaultSeed;
  bool parallel = true;
  // Mutation hook: perturbs one Lorenz payoff entry before the
  // reproduction check.
  bool corrupt_lorenz_payoff = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }
};

namespace verify_detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline CheckResult below(std::string name, double value, double limit) {
  return {std::move(name), value < limit, "max " + sci(value) + " < " + sci(limit)};
}

inline CheckResult at_most(std::string name, double value, double limit) {
  return {std::move(name), value <= limit, "max " + sci(value) + " <= " + sci(limit)};
}

struct NamedGlv {
  std::string name;
  GlvSystem sys;
};

// Embedding fixtures: hand-made systems plus three random ones.
inline std::vector<NamedGlv> glv_fixtures(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NamedGlv> out;
  out.push_back({"logistic", fixtures::logistic()});
  out.push_back({"competition", fixtures::competition()});
  out.push_back({"fractional", fixtures::fractional()});
  GlvSystem deficient;
  deficient.lambda = (Vector(2) << 0.2, -0.1).finished();
  deficient.A = (Matrix(2, 1) << 0.5, -0.3).finished();
  deficient.B = (Matrix(1, 2) << 1.0, 1.0).finished();
  out.push_back({"rank-deficient", deficient});
  for (int n : {2, 3, 5}) {
    out.push_back({"random-" + std::to_string(n), fixtures::random_glv(rng, n)});
  }
  LorenzParams lp;
  out.push_back({"lorenz", shifted_lorenz_glv(lp)});
  return out;
}

inline Vector fd_pushforward(const GameEmbedding& e, const Vector& x, const Vector& v) {
  const double scale = x.cwiseAbs().maxCoeff() / std::max(v.cwiseAbs().maxCoeff(), 1e-300);
  const double h = 1e-6 * scale;
  return (forward_map(e, x + h * v) - forward_map(e, x - h * v)) / (2.0 * h);
}

// Infinity-norm distance from q to the polyline through the rows of P.
inline double polyline_distance(const Vector& q, const Matrix& P) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k + 1 < P.rows(); ++k) {
    const Vector a = P.row(k).transpose();
    const Vector d = P.row(k + 1).transpose() - a;
    const double len2 = d.squaredNorm();
    double s = len2 > 0.0 ? (q - a).dot(d) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, (a + s * d - q).cwiseAbs().maxCoeff());
  }
  return best;
}

inline IntegratorConfig config(double t_end, double tol, double sample_dt = 0.01) {
  IntegratorConfig cfg;
  cfg.t_end = t_end;
  cfg.rel_tol = cfg.abs_tol = tol;
  cfg.sample_dt = sample_dt;
  return cfg;
}

struct ReplicatorRun {
  std::string name;
  PayoffMatrix game;
  TimeMode mode;
  Trajectory traj;
};

}  // namespace verify_detail

inline VerifyReport run_verify(const VerifyOptions& opt = {}) {
  using namespace verify_detail;
  const double k = opt.strict ? 0.1 : 1.0;
  const auto glvs = glv_fixtures(opt.seed);
  std::vector<GameEmbedding> embeddings;
  for (const auto& f : glvs) embeddings.push_back(embed(f.sys));
  const GameEmbedding& logistic_e = embeddings.front();
  const GameEmbedding& lorenz_e = embeddings.back();
  const LorenzParams lp;
  const Vector lorenz_x0 = Vector::Constant(3, lp.r + 1.0);

  // Replicator runs shared by several checks.
  std::vector<std::function<ReplicatorRun()>> run_jobs;
  const double x0_logistic = 0.5;
  run_jobs.push_back([&] {
    const Vector p0 = forward_map(logistic_e, Vector::Constant(1, x0_logistic));
    return ReplicatorRun{"logistic/conjugate", logistic_e.game, TimeMode::kConjugate,
                         simulate_replicator(logistic_e.game, p0, TimeMode::kConjugate,
                                             config(10.0, 1e-10))};
  });
  run_jobs.push_back([&] {
    const Vector p0 = forward_map(logistic_e, Vector::Constant(1, x0_logistic));
    return ReplicatorRun{"logistic/game", logistic_e.game, TimeMode::kGame,
                         simulate_replicator(logistic_e.game, p0, TimeMode::kGame,
                                             config(10.0, 1e-10))};
  });
  run_jobs.push_back([&] {
    return ReplicatorRun{"lorenz/conjugate", lorenz_e.game, TimeMode::kConjugate,
                         simulate_replicator(lorenz_e.game, forward_map(lorenz_e, lorenz_x0),
                                             TimeMode::kConjugate, config(2.0, 1e-12))};
  });
  run_jobs.push_back([&] {
    return ReplicatorRun{"lorenz/game", lorenz_e.game, TimeMode::kGame,
                         simulate_replicator(lorenz_e.game, forward_map(lorenz_e, lorenz_x0),
                                             TimeMode::kGame, config(100.0, 1e-10))};
  });
  run_jobs.push_back([&] {
    Rng rng(opt.seed + 1);
    PayoffMatrix rps{Matrix(4, 4)};
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Eigen::Index i = 0; i < 16; ++i) rps.A.data()[i] = u(rng);
    return ReplicatorRun{"random-4/game", rps, TimeMode::kGame,
                         simulate_replicator(rps, sample_simplex(rng, 4), TimeMode::kGame,
                                             config(20.0, 1e-10))};
  });

  std::vector<ReplicatorRun> runs;
  if (opt.parallel) {
    std::vector<std::future<ReplicatorRun>> futures;
    for (auto& job : run_jobs) futures.push_back(std::async(std::launch::async, job));
    for (auto& f : futures) runs.push_back(f.get());
  } else {
    for (auto& job : run_jobs) runs.push_back(job());
  }
  auto run_named = [&runs](const std::string& name) -> const ReplicatorRun& {
    for (const auto& r : runs) {
      if (r.name == name) return r;
    }
    throw Error("no run " + name);
  };

  std::vector<std::pair<std::string, std::function<CheckResult(const std::string&)>>> checks;

  checks.emplace_back("core: fitness finite on the orthant", [&](const std::string& name) {
    Rng rng(opt.seed);
    bool ok = true;
    for (const auto& f : glvs) {
      for (int s = 0; s < 100; ++s) {
        const Vector x = sample_box(rng, f.sys.dim(), 0.1, 10.0);
        ok = ok && (eval_glv_rhs(f.sys, x).array() / x.array()).allFinite();
      }
    }
    return CheckResult{name, ok, ok ? "all finite" : "non-finite fitness"};
  });

  checks.emplace_back("core: replicator field tangent to the simplex",
                      [&](const std::string& name) {
    Rng rng(opt.seed);
    double worst = 0.0;
    for (const auto& e : embeddings) {
      for (int s = 0; s < 100; ++s) {
        const Vector p = forward_map(e, sample_box(rng, e.n, 0.5, 2.0));
        for (TimeMode mode : {TimeMode::kGame, TimeMode::kConjugate}) {
          const Vector dp = eval_replicator_rhs(e.game, p, mode);
          worst = std::max(worst, std::abs(dp.sum()) / std::max(1.0, dp.cwiseAbs().maxCoeff()));
        }
      }
    }
    return below(name, worst, 1e-12 * k);
  });

  checks.emplace_back("core: zero LV field", [&](const std::string& name) {
    const LvSystem zero{Matrix::Zero(4, 4)};
    const double v = eval_lv_rhs(zero, Vector::LinSpaced(4, 0.5, 2.0)).cwiseAbs().maxCoeff();
    return CheckResult{name, v == 0.0, "max " + sci(v)};
  });

  checks.emplace_back("attractor: corrected field points inward on faces",
                      [&](const std::string& name) {
    const double delta = 0.05;
    const int n = 3;
    // Scaled so |q_i| < delta / n^2 on the simplex.
    const PolynomialField q = [&] {
      PolynomialField f = fixtures::cyclic_field();
      for (auto& p : f.coords) p = scale(p, delta / (2.0 * n * n * 1.5));
      return f;
    }();
    const PolynomialField p = boundary_correct(q, delta);
    Rng rng(opt.seed);
    bool ok = true;
    double worst_shift = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int s = 0; s < 200; ++s) {
        const Vector rest = sample_simplex(rng, n - 1);
        Vector y(n);
        for (int j = 0, r = 0; j < n; ++j) y[j] = (j == i) ? 0.0 : rest[r++];
        const double pi = evaluate(p.coords[static_cast<std::size_t>(i)], y);
        const double qi = evaluate(q.coords[static_cast<std::size_t>(i)], y);
        ok = ok && pi > 0.0;
        worst_shift = std::max(worst_shift, std::abs(pi - qi - delta / n));
      }
    }
    return CheckResult{name, ok && worst_shift < 1e-14 * k,
                       "shift error " + sci(worst_shift)};
  });

  const PolynomialField corrected = boundary_correct(fixtures::cyclic_field(), 0.05);
  const GlvSystem lifted = lift_to_glv(corrected);

  checks.emplace_back("attractor: |y|_1 follows the logistic law", [&](const std::string& name) {
    Rng rng(opt.seed);
    std::uniform_real_distribution<double> mass(0.1, 1.9);
    double worst = 0.0;
    for (int s = 0; s < 5; ++s) {
      const double s0 = mass(rng);
      const Vector y0 = s0 * sample_simplex(rng, 3);
      const Trajectory tr = simulate_glv(lifted, y0, config(20.0, 1e-10, 0.05));
      for (std::size_t j = 0; j < tr.size(); ++j) {
        const double sum = tr.states.row(static_cast<Eigen::Index>(j)).sum();
        worst = std::max(worst, std::abs(sum - fixtures::logistic_solution(s0, tr.times[j])));
      }
    }
    return below(name, worst, 1e-6 * k);
  });

  checks.emplace_back("attractor: simplex forward invariant", [&](const std::string& name) {
    Rng rng(opt.seed + 7);
    double worst = 0.0;
    for (int s = 0; s < 3; ++s) {
      const Trajectory tr = simulate_glv(lifted, sample_simplex(rng, 3), config(20.0, 1e-10, 0.05));
      for (Eigen::Index j = 0; j < tr.states.rows(); ++j) {
        worst = std::max(worst, std::abs(tr.states.row(j).sum() - 1.0));
      }
    }
    return below(name, worst, 1e-8 * k);
  });

  checks.emplace_back("attractor: Gronwall bound holds", [&](const std::string& name) {
    const PolynomialField h = fixtures::cyclic_field();
    const double L = 1.5 * lipschitz_estimate(h, 2000, opt.seed);
    const Vector y0 = (Vector(3) << 0.5, 0.3, 0.2).finished();
    const Trajectory exact = simulate_glv(lift_to_glv(h), y0, config(1.0, 1e-12));
    double worst_ratio = 0.0;
    for (double delta : {1e-3, 1e-2}) {
      const Trajectory approx =
          simulate_glv(lift_to_glv(boundary_correct(h, delta)), y0, config(1.0, 1e-12));
      const double div = (exact.states - approx.states).cwiseAbs().maxCoeff();
      worst_ratio = std::max(worst_ratio, div / gronwall_epsilon(delta, L, 1.0));
    }
    return at_most(name, worst_ratio, k);
  });

  checks.emplace_back("embedding: f^-1(f(x)) = x", [&](const std::string& name) {
    Rng rng(opt.seed);
    double worst = 0.0;
    for (const auto& e : embeddings) {
      for (int s = 0; s < 1000; ++s) {
        const Vector x = sample_box(rng, e.n, 0.1, 10.0);
        worst = std::max(worst, (inverse_map(e, forward_map(e, x)) - x).cwiseAbs().maxCoeff());
      }
    }
    return below(name, worst, 1e-9 * k);
  });

  checks.emplace_back("embedding: pushforward of the GLV field", [&](const std::string& name) {
    Rng rng(opt.seed);
    double worst = 0.0;
    for (std::size_t f = 0; f < glvs.size(); ++f) {
      const auto& e = embeddings[f];
      for (int s = 0; s < 100; ++s) {
        const Vector x = glvs[f].name == "lorenz"
                             ? sample_box(rng, 3, lp.r - 20.0, lp.r + 20.0)
                             : sample_box(rng, e.n, 0.5, 2.0);
        const Vector v = eval_glv_rhs(glvs[f].sys, x);
        const Vector fd = fd_pushforward(e, x, v);
        const Vector rd = eval_replicator_rhs(e.game, forward_map(e, x), TimeMode::kConjugate);
        worst = std::max(worst, (fd - rd).cwiseAbs().maxCoeff() /
                                    std::max(rd.cwiseAbs().maxCoeff(), 1e-300));
      }
    }
    return below(name, worst, 1e-5 * k);
  });

  checks.emplace_back("embedding: dummy species stay at 1", [&](const std::string& name) {
    double worst = 0.0;
    for (const auto& f : glvs) {
      if (f.name.rfind("random", 0) == 0) continue;
      const PaddedGlv padded = pad_to_square(ensure_column_rank(absorb_lambda(f.sys)));
      const Eigen::Index size = padded.A_tilde.rows();
      if (size == padded.n) continue;
      Vector y0 = Vector::Ones(size);
      y0.head(padded.n) = f.name == "lorenz" ? lorenz_x0 : Vector::Constant(padded.n, 0.7);
      const Trajectory tr = simulate_glv(to_glv(padded), y0, config(1.0, 1e-10));
      const Matrix dummies = tr.states.rightCols(size - padded.n);
      worst = std::max(worst, (dummies.array() - 1.0).abs().maxCoeff());
    }
    return below(name, worst + 1e-300, 1e-10 * k);
  });

  checks.emplace_back("embedding: absorption and rank completion keep the field",
                      [&](const std::string& name) {
    Rng rng(opt.seed);
    double worst = 0.0;
    for (const auto& f : glvs) {
      const GlvSystem absorbed = absorb_lambda(f.sys);
      const GlvSystem ranked = ensure_column_rank(absorbed);
      for (int s = 0; s < 100; ++s) {
        const Vector x = sample_box(rng, f.sys.dim(), 0.1, 10.0);
        const Vector ref = eval_glv_rhs(f.sys, x);
        const double scale = std::max(ref.cwiseAbs().maxCoeff(), 1.0);
        worst = std::max(worst, (eval_glv_rhs(absorbed, x) - ref).cwiseAbs().maxCoeff() / scale);
        worst = std::max(worst, (eval_glv_rhs(ranked, x) - ref).cwiseAbs().maxCoeff() / scale);
      }
    }
    return below(name, worst + 1e-300, 1e-13 * k);
  });

  checks.emplace_back("embedding: game structure", [&](const std::string& name) {
    bool ok = true;
    double inv_err = 0.0;
    for (const auto& e : embeddings) {
      const Eigen::Index m = e.m();
      ok = ok && e.game.A.row(m - 1).isZero(0.0) && e.game.A.col(m - 1).isZero(0.0);
      inv_err = std::max(inv_err, (e.B_tilde * e.B_tilde_inv -
                                   Matrix::Identity(m - 1, m - 1)).cwiseAbs().maxCoeff());
    }
    return CheckResult{name, ok && inv_err < 1e-10 * k,
                       std::string(ok ? "zero border" : "nonzero border") +
                           ", inverse error " + sci(inv_err)};
  });

  checks.emplace_back("dynamics: replicator runs stay on the simplex",
                      [&](const std::string& name) {
    double drift = 0.0;
    double smallest = 1.0;
    for (const auto& r : runs) {
      for (Eigen::Index j = 0; j < r.traj.states.rows(); ++j) {
        drift = std::max(drift, std::abs(r.traj.states.row(j).sum() - 1.0));
      }
      smallest = std::min(smallest, r.traj.states.minCoeff());
    }
    return CheckResult{name, drift < 1e-9 * k && smallest > 0.0,
                       "drift " + sci(drift) + ", min p " + sci(smallest)};
  });

  checks.emplace_back("dynamics: recovered replicator orbit matches the GLV orbit",
                      [&](const std::string& name) {
    double worst = 0.0;
    for (std::size_t f = 0; f < 3; ++f) {
      const Vector x0 = Vector::Constant(glvs[f].sys.dim(), 0.5);
      const Trajectory x = simulate_glv(glvs[f].sys, x0, config(10.0, 1e-10));
      const Trajectory p = simulate_replicator(embeddings[f].game,
                                               forward_map(embeddings[f], x0),
                                               TimeMode::kConjugate, config(10.0, 1e-10));
      const Trajectory back = recover(embeddings[f], p);
      worst = std::max(worst, (back.states - x.states).cwiseAbs().maxCoeff());
    }
    return below(name, worst, 1e-6 * k);
  });

  checks.emplace_back("dynamics: both time modes trace one orbit", [&](const std::string& name) {
    const Matrix& conj = run_named("logistic/conjugate").traj.states;
    const Matrix& game = run_named("logistic/game").traj.states;
    double worst = 0.0;
    for (Eigen::Index j = 0; j < game.rows(); ++j) {
      worst = std::max(worst, polyline_distance(game.row(j).transpose(), conj));
    }
    return below(name, worst, 1e-4 * k);
  });

  checks.emplace_back("dynamics: halving tolerance halves the error", [&](const std::string& name) {
    auto error_at = [](double tol) {
      const Trajectory tr =
          simulate_glv(fixtures::logistic(), Vector::Constant(1, 0.5), config(10.0, tol, 0.01));
      double worst = 0.0;
      for (std::size_t j = 0; j < tr.size(); ++j) {
        worst = std::max(worst, std::abs(tr.states(static_cast<Eigen::Index>(j), 0) -
                                         fixtures::logistic_solution(0.5, tr.times[j])));
      }
      return worst;
    };
    const double tol = IntegratorConfig{}.rel_tol;
    const double ratio = error_at(tol) / error_at(0.5 * tol);
    return CheckResult{name, ratio >= 2.0, "ratio " + sci(ratio)};
  });

  checks.emplace_back("regret: cumulative regret within the KL bound",
                      [&](const std::string& name) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& r : runs) {
      if (r.mode != TimeMode::kGame) continue;
      const RegretSeries series = time_avg_regret(r.game, r.traj);
      const double bound = regret_bound(r.traj.states.row(0).transpose());
      for (std::size_t j = 0; j < series.times.size(); ++j) {
        worst = std::max(worst, series.times[j] * series.avg_regret[j] - bound);
      }
    }
    return at_most(name, worst, 1e-6 * k);
  });

  checks.emplace_back("regret: invariant under payoff shifts", [&](const std::string& name) {
    double worst = 0.0;
    for (const auto& r : runs) {
      const RegretSeries a = time_avg_regret(r.game, r.traj);
      PayoffMatrix shifted{r.game.A.array() + 3.7};
      const RegretSeries b = time_avg_regret(shifted, r.traj);
      for (std::size_t j = 0; j < a.times.size(); ++j) {
        worst = std::max(worst, std::abs(a.avg_regret[j] - b.avg_regret[j]));
      }
    }
    return below(name, worst, 1e-10 * k);
  });

  checks.emplace_back("regret: best action invariant under rescaling",
                      [&](const std::string& name) {
    bool ok = true;
    for (const auto& r : runs) {
      const RegretSeries a = time_avg_regret(r.game, r.traj);
      for (double c : {4.0, 0.5}) {
        const RegretSeries b = time_avg_regret(PayoffMatrix{c * r.game.A}, r.traj);
        ok = ok && a.best_action == b.best_action;
      }
    }
    return CheckResult{name, ok, ok ? "identical" : "argmax changed"};
  });

  checks.emplace_back("lorenz: payoff matrix reproduces the closed form",
                      [&](const std::string& name) {
    double worst = 0.0;
    bool zeros = true;
    for (double r : {50.0, 76.0, 100.0}) {
      LorenzParams p;
      p.r = r;
      Matrix built = lorenz_game(p).game.A;
      if (opt.corrupt_lorenz_payoff) built(0, 1) += 1.0;
      const Matrix display = lorenz_display_matrix(p);
      for (Eigen::Index i = 0; i < 11; ++i) {
        for (Eigen::Index j = 0; j < 11; ++j) {
          if (display(i, j) == 0.0) {
            zeros = zeros && built(i, j) == 0.0;
          } else {
            worst = std::max(worst, std::abs(built(i, j) - display(i, j)) / std::abs(display(i, j)));
          }
        }
      }
    }
    return CheckResult{name, zeros && worst <= 1e-12 * k,
                       std::string(zeros ? "zeros exact" : "zero pattern broken") +
                           ", max rel " + sci(worst)};
  });

  checks.emplace_back("lorenz: replicator orbit tracks the reference oracle",
                      [&](const std::string& name) {
    const Trajectory back = recover(lorenz_e, run_named("lorenz/conjugate").traj);
    const Trajectory ref =
        reference_lorenz(lp, lorenz_x0.array() - lp.r, config(2.0, 1e-12));
    return below(name, (back.states - ref.states).cwiseAbs().maxCoeff(), 1e-3 * k);
  });

  checks.emplace_back("lorenz: game-mode orbit stays interior", [&](const std::string& name) {
    const double smallest = run_named("lorenz/game").traj.states.minCoeff();
    return CheckResult{name, smallest > 1e-30, "min p " + sci(smallest)};
  });

  checks.emplace_back("lorenz: shifted orbit stays in the trapping sphere",
                      [&](const std::string& name) {
    const Trajectory tr = simulate_glv(shifted_lorenz_glv(lp), lorenz_x0, config(50.0, 1e-10));
    bool ok = true;
    for (std::size_t j = 0; j < tr.size(); ++j) ok = ok && in_trapping_sphere(lp, tr.state(j));
    return CheckResult{name, ok, ok ? "inside" : "left the sphere"};
  });

  checks.emplace_back("io: documents round-trip bit-exactly", [&](const std::string& name) {
    bool ok = true;
    for (std::size_t f = 0; f < glvs.size(); ++f) {
      const GlvSystem g = glv_from_document(parse_document(to_document(glvs[f].sys)));
      ok = ok && g.lambda == glvs[f].sys.lambda && g.A == glvs[f].sys.A && g.B == glvs[f].sys.B;
      const GameEmbedding e = embedding_from_document(parse_document(to_document(embeddings[f])));
      ok = ok && e.game.A == embeddings[f].game.A && e.n == embeddings[f].n &&
           e.B_bar == embeddings[f].B_bar && e.B_tilde == embeddings[f].B_tilde &&
           e.B_tilde_inv == embeddings[f].B_tilde_inv;
      const PayoffMatrix pm = game_from_document(parse_document(to_document(embeddings[f].game)));
      ok = ok && pm.A == embeddings[f].game.A;
    }
    return CheckResult{name, ok, ok ? "identical" : "mismatch"};
  });

  checks.emplace_back("io: CSV output is deterministic", [&](const std::string& name) {
    const Vector p0 = forward_map(logistic_e, Vector::Constant(1, 0.5));
    const std::string a = trajectory_csv(
        simulate_replicator(logistic_e.game, p0, TimeMode::kGame, config(5.0, 1e-10)));
    const std::string b = trajectory_csv(
        simulate_replicator(logistic_e.game, p0, TimeMode::kGame, config(5.0, 1e-10)));
    return CheckResult{name, a == b, a == b ? "byte-identical" : "differs"};
  });

  auto guarded = [](const std::string& name,
                    const std::function<CheckResult(const std::string&)>& fn) {
    try {
      return fn(name);
    } catch (const std::exception& e) {
      return CheckResult{name, false, std::string("threw: ") + e.what()};
    }
  };

  VerifyReport report;
  if (opt.parallel) {
    std::vector<std::future<CheckResult>> futures;
    for (const auto& [name, fn] : checks) {
      futures.push_back(std::async(std::launch::async, guarded, name, fn));
    }
    for (auto& f : futures) report.checks.push_back(f.get());
  } else {
    for (const auto& [name, fn] : checks) report.checks.push_back(guarded(name, fn));
  }
  return report;
}

}  // namespace lvgame

#endif  // LVGAME_VERIFY_HPP_
