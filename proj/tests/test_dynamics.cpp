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


#include <gtest/gtest.h>

#include <cmath>

#include "lvgame/embedding.hpp"
#include "lvgame/fixtures.hpp"
#include "lvgame/random.hpp"
#include "lvgame/recover.hpp"
#include "lvgame/simulate.hpp"

namespace lvgame {
namespace {

IntegratorConfig cfg(double t_end, double tol = 1e-10, double sample_dt = 0.01) {
  IntegratorConfig c;
  c.t_end = t_end;
  c.rel_tol = c.abs_tol = tol;
  c.sample_dt = sample_dt;
  return c;
}

TEST(SampleGrid, UniformWithExactEnd) {
  const auto g = sample_grid(1.0, 0.25);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  const auto h = sample_grid(1.0, 0.3);
  EXPECT_EQ(h.back(), 1.0);
  EXPECT_NEAR(h[h.size() - 2], 0.9, 1e-15);
}

TEST(Integrate, ConstantField) {
  for (Method m : {Method::kDp54Adaptive, Method::kRk4Fixed}) {
    IntegratorConfig c = cfg(3.0);
    c.method = m;
    const Vector x0 = (Vector(2) << 1.0, 2.0).finished();
    const Trajectory tr = integrate([](const Vector&, Vector& dx) { dx.setZero(); }, x0, c);
    for (std::size_t j = 0; j < tr.size(); ++j) EXPECT_EQ(tr.state(j), x0);
  }
}

TEST(Integrate, LogisticAndDecay) {
  for (Method m : {Method::kDp54Adaptive, Method::kRk4Fixed}) {
    IntegratorConfig c = cfg(1.0);
    c.method = m;
    const Trajectory a = integrate(
        [](const Vector& x, Vector& dx) { dx = (x.array() * (1.0 - x.array())).matrix(); },
        Vector::Constant(1, 0.5), c);
    EXPECT_NEAR(a.states(a.states.rows() - 1, 0), std::exp(1.0) / (1.0 + std::exp(1.0)), 1e-8);
    const Trajectory b =
        integrate([](const Vector& x, Vector& dx) { dx = -x; }, Vector::Ones(1), c);
    EXPECT_NEAR(b.states(b.states.rows() - 1, 0), std::exp(-1.0), 1e-8);
    EXPECT_EQ(b.times.back(), 1.0);
  }
}

TEST(Integrate, DenseOutputMatchesClosedFormOnTheGrid) {
  const Trajectory tr = integrate([](const Vector& x, Vector& dx) { dx = -x; }, Vector::Ones(1),
                                  cfg(5.0, 1e-10, 0.001));
  for (std::size_t j = 0; j < tr.size(); ++j) {
    EXPECT_NEAR(tr.states(static_cast<Eigen::Index>(j), 0), std::exp(-tr.times[j]), 1e-9);
  }
}

TEST(Integrate, RecordsMetadata) {
  const Trajectory tr =
      integrate([](const Vector& x, Vector& dx) { dx = -x; }, Vector::Ones(1), cfg(1.0));
  EXPECT_EQ(tr.meta.method, "dp54_adaptive");
  EXPECT_EQ(tr.meta.rel_tol, 1e-10);
  EXPECT_GT(tr.meta.accepted_steps, 0u);
  EXPECT_GT(tr.meta.rhs_evals, tr.meta.accepted_steps);
}

TEST(Integrate, RejectsBadConfig) {
  auto rhs = [](const Vector& x, Vector& dx) { dx = -x; };
  IntegratorConfig c = cfg(1.0);
  c.rel_tol = 0.0;
  EXPECT_THROW(integrate(rhs, Vector::Ones(1), c), DomainError);
  c = cfg(-1.0);
  EXPECT_THROW(integrate(rhs, Vector::Ones(1), c), DomainError);
  c = cfg(1.0);
  c.max_steps = 3;
  EXPECT_THROW(integrate(rhs, Vector::Ones(1), c), IntegrationError);
}

TEST(SimulateGlv, Stationary) {
  GlvSystem sys{Vector::Zero(2), Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
  const Vector x0 = (Vector(2) << 0.3, 4.0).finished();
  const Trajectory tr = simulate_glv(sys, x0, cfg(2.0));
  for (std::size_t j = 0; j < tr.size(); ++j) EXPECT_EQ(tr.state(j), x0);
}

TEST(SimulateGlv, LogisticClosedForm) {
  const Trajectory tr = simulate_glv(fixtures::logistic(), Vector::Constant(1, 0.5), cfg(10.0));
  for (std::size_t j = 0; j < tr.size(); ++j) {
    EXPECT_NEAR(tr.states(static_cast<Eigen::Index>(j), 0),
                fixtures::logistic_solution(0.5, tr.times[j]), 1e-8);
  }
}

TEST(SimulateGlv, BoundaryCollision) {
  // dx/dt = x (-x^-1) = -1 reaches zero at t = 0.5.
  GlvSystem sys{Vector::Zero(1), Matrix::Constant(1, 1, -1.0), Matrix::Constant(1, 1, -1.0)};
  EXPECT_THROW(simulate_glv(sys, Vector::Constant(1, 0.5), cfg(1.0)), BoundaryCollision);
  EXPECT_THROW(simulate_glv(sys, Vector::Constant(1, 0.0), cfg(1.0)), DomainError);
}

TEST(SimulateReplicator, ZeroGameIsConstant) {
  const Vector p0 = (Vector(3) << 0.2, 0.3, 0.5).finished();
  const Trajectory tr =
      simulate_replicator(PayoffMatrix{Matrix::Zero(3, 3)}, p0, TimeMode::kGame, cfg(5.0));
  for (std::size_t j = 0; j < tr.size(); ++j) {
    EXPECT_LT((tr.state(j) - p0).cwiseAbs().maxCoeff(), 1e-16);
  }
}

TEST(SimulateReplicator, StaysOnTheSimplex) {
  Rng rng(31);
  for (int s = 0; s < 5; ++s) {
    const PayoffMatrix g = fixtures::random_game(rng, 5, 2.0);
    const Trajectory tr =
        simulate_replicator(g, sample_simplex(rng, 5), TimeMode::kGame, cfg(10.0, 1e-10, 0.1));
    for (std::size_t j = 0; j < tr.size(); ++j) {
      EXPECT_LT(std::abs(tr.state(j).sum() - 1.0), 1e-12);
      EXPECT_GT(tr.state(j).minCoeff(), 0.0);
    }
  }
}

TEST(SimulateReplicator, LogisticConjugateMode) {
  const GameEmbedding e = embed(fixtures::logistic());
  const Vector p0 = forward_map(e, Vector::Constant(1, 0.5));
  const Trajectory tr = simulate_replicator(e.game, p0, TimeMode::kConjugate, cfg(10.0));
  const Trajectory x = recover(e, tr);
  ASSERT_EQ(x.times, tr.times);
  for (std::size_t j = 0; j < x.size(); ++j) {
    EXPECT_NEAR(x.states(static_cast<Eigen::Index>(j), 0),
                fixtures::logistic_solution(0.5, x.times[j]), 1e-6);
  }
}

TEST(SimulateReplicator, ConjugateOrbitMatchesGlv) {
  for (const GlvSystem& sys : {fixtures::competition(), fixtures::fractional()}) {
    const GameEmbedding e = embed(sys);
    const Vector x0 = Vector::Constant(sys.dim(), 0.7);
    const Trajectory direct = simulate_glv(sys, x0, cfg(10.0));
    const Trajectory rep =
        simulate_replicator(e.game, forward_map(e, x0), TimeMode::kConjugate, cfg(10.0));
    EXPECT_LT((recover(e, rep).states - direct.states).cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(SimulateReplicator, Underflow) {
  Matrix A = Matrix::Zero(2, 2);
  A(1, 0) = A(1, 1) = 1000.0;
  const Vector p0 = (Vector(2) << 0.5, 0.5).finished();
  EXPECT_THROW(simulate_replicator(PayoffMatrix{A}, p0, TimeMode::kGame, cfg(2.0)),
               SimplexUnderflow);
}

TEST(Recover, ConstantTrajectory) {
  const GameEmbedding e = embed(fixtures::competition());
  const Vector x = (Vector(2) << 0.4, 2.5).finished();
  Trajectory tr;
  tr.times = {0.0, 1.0, 2.0};
  tr.states = forward_map(e, x).transpose().replicate(3, 1);
  const Trajectory back = recover(e, tr);
  EXPECT_EQ(back.times, tr.times);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_LT((back.state(j) - x).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Recover, BoundarySampleNamesIndex) {
  const GameEmbedding e = embed(fixtures::logistic());
  Trajectory tr;
  tr.times = {0.0, 1.0};
  tr.states.resize(2, 3);
  tr.states << 1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0, 0.5, 0.5;
  try {
    recover(e, tr);
    FAIL() << "expected DomainError";
  } catch (const DomainError& err) {
    EXPECT_NE(std::string(err.what()).find("sample 1"), std::string::npos) << err.what();
  }
}

}  // namespace
}  // namespace lvgame
