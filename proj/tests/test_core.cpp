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
#include <limits>

#include "lvgame/fixtures.hpp"
#include "lvgame/lorenz.hpp"
#include "lvgame/polynomial.hpp"
#include "lvgame/random.hpp"
#include "lvgame/rhs.hpp"

namespace lvgame {
namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

TEST(GlvRhs, ZeroCoefficientsGiveZeroField) {
  GlvSystem sys{Vector::Zero(2), Matrix::Zero(2, 3), Matrix::Ones(3, 2)};
  EXPECT_EQ(eval_glv_rhs(sys, vec({0.5, 0.5})), Vector::Zero(2));
}

TEST(GlvRhs, Logistic) {
  EXPECT_DOUBLE_EQ(eval_glv_rhs(fixtures::logistic(), vec({0.25}))[0], 0.1875);
}

TEST(GlvRhs, ShiftedLorenzOriginIsAnEquilibrium) {
  LorenzParams p;
  const Vector dx = eval_glv_rhs(shifted_lorenz_glv(p), Vector::Constant(3, p.r));
  EXPECT_LT(dx.cwiseAbs().maxCoeff(), 1e-9);
}

TEST(GlvRhs, FractionalExponents) {
  // x1 (1 - x1^1.5 - 0.2 x2), x2 (0.5 - 0.5 x1^0.5 x2)
  const GlvSystem sys = fixtures::fractional();
  const Vector x = vec({2.0, 3.0});
  const Vector dx = eval_glv_rhs(sys, x);
  EXPECT_NEAR(dx[0], 2.0 * (1.0 - std::pow(2.0, 1.5) - 0.2 * 3.0), 1e-13);
  EXPECT_NEAR(dx[1], 3.0 * (0.5 - 0.5 * std::sqrt(2.0) * 3.0), 1e-13);
}

TEST(GlvRhs, RejectsBoundaryAndBadShapes) {
  EXPECT_THROW(eval_glv_rhs(fixtures::logistic(), vec({0.0})), DomainError);
  EXPECT_THROW(eval_glv_rhs(fixtures::logistic(), vec({-1.0})), DomainError);
  EXPECT_THROW(eval_glv_rhs(fixtures::logistic(), vec({1.0, 1.0})), ShapeError);
  GlvSystem bad{Vector::Zero(2), Matrix::Zero(2, 3), Matrix::Zero(2, 2)};
  EXPECT_THROW(eval_glv_rhs(bad, vec({1.0, 1.0})), ShapeError);
}

TEST(GlvRhs, FitnessFiniteOnTheOrthant) {
  Rng rng(kDefaultSeed);
  for (int n = 1; n <= 5; ++n) {
    const GlvSystem sys = fixtures::random_glv(rng, n);
    for (int s = 0; s < 50; ++s) {
      const Vector x = sample_box(rng, n, 1e-3, 1e3);
      EXPECT_TRUE((eval_glv_rhs(sys, x).array() / x.array()).allFinite());
    }
  }
}

TEST(LvRhs, HandValues) {
  Matrix A(2, 2);
  A << -1, 1, 0, 0;
  EXPECT_EQ(eval_lv_rhs(LvSystem{A}, vec({1, 1})), Vector::Zero(2));
  EXPECT_EQ(eval_lv_rhs(LvSystem{A}, vec({2, 1})), vec({-2, 0}));
  EXPECT_EQ(eval_lv_rhs(LvSystem{Matrix::Zero(2, 2)}, vec({1, 1})), Vector::Zero(2));
}

TEST(LvRhs, ZeroMatrixIsIdenticallyZero) {
  Rng rng(7);
  for (int s = 0; s < 20; ++s) {
    const Vector z = sample_box(rng, 4, 0.01, 100.0);
    EXPECT_EQ(eval_lv_rhs(LvSystem{Matrix::Zero(4, 4)}, z), Vector::Zero(4));
  }
}

TEST(ReplicatorRhs, HandValues) {
  const Vector u = Vector::Constant(3, 1.0 / 3.0);
  EXPECT_EQ(eval_replicator_rhs(PayoffMatrix{Matrix::Zero(3, 3)}, u, TimeMode::kGame),
            Vector::Zero(3));
  Matrix A = Matrix::Zero(3, 3);
  A(0, 0) = -1;
  A(0, 1) = 1;
  EXPECT_LT(eval_replicator_rhs(PayoffMatrix{A}, u, TimeMode::kGame).cwiseAbs().maxCoeff(),
            1e-17);
}

TEST(ReplicatorRhs, ConjugateModeDividesByLastComponent) {
  Rng rng(11);
  for (int s = 0; s < 20; ++s) {
    const PayoffMatrix g = fixtures::random_game(rng, 5);
    const Vector p = sample_simplex(rng, 5);
    const Vector game = eval_replicator_rhs(g, p, TimeMode::kGame);
    const Vector conj = eval_replicator_rhs(g, p, TimeMode::kConjugate);
    EXPECT_LT((conj - game / p[4]).cwiseAbs().maxCoeff(), 1e-14 * (1.0 + conj.norm()));
  }
}

TEST(ReplicatorRhs, TangentToTheSimplex) {
  Rng rng(13);
  for (int s = 0; s < 200; ++s) {
    const PayoffMatrix g = fixtures::random_game(rng, 6, 3.0);
    const Vector p = sample_simplex(rng, 6);
    for (TimeMode mode : {TimeMode::kGame, TimeMode::kConjugate}) {
      const Vector dp = eval_replicator_rhs(g, p, mode);
      EXPECT_LT(std::abs(dp.sum()), 1e-12 * std::max(1.0, dp.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(ReplicatorRhs, RejectsPointsOffTheSimplex) {
  const PayoffMatrix g{Matrix::Zero(3, 3)};
  EXPECT_THROW(eval_replicator_rhs(g, vec({0.5, 0.5, 0.5}), TimeMode::kGame), DomainError);
  EXPECT_THROW(eval_replicator_rhs(g, vec({0.5, 0.5, 0.0}), TimeMode::kGame), DomainError);
  EXPECT_THROW(eval_replicator_rhs(g, vec({0.5, 0.5}), TimeMode::kGame), ShapeError);
}

TEST(TwoPlayerPayoff, HandValues) {
  EXPECT_DOUBLE_EQ(expected_payoff_two_player(Matrix::Identity(2, 2), vec({1, 0}), vec({1, 0})),
                   1.0);
  EXPECT_DOUBLE_EQ(
      expected_payoff_two_player(Matrix::Zero(2, 3), vec({0.3, 0.7}), vec({0.2, 0.2, 0.6})),
      0.0);
  Matrix skew(2, 2);
  skew << 0, 1, -1, 0;
  EXPECT_DOUBLE_EQ(expected_payoff_two_player(skew, vec({0.5, 0.5}), vec({0.5, 0.5})), 0.0);
}

TEST(Validate, Reports) {
  EXPECT_TRUE(validate(shifted_lorenz_glv(LorenzParams{})).passed());

  PolynomialField leaky{2, {{make_constant(2, 1.0)}, {make_constant(2, -0.5)}}};
  const ValidationReport r = validate(leaky);
  EXPECT_FALSE(r.passed());
  bool tangency_failed = false;
  for (const auto& item : r.items) {
    if (item.invariant == "tangency") tangency_failed = !item.ok;
  }
  EXPECT_TRUE(tangency_failed);

  Matrix A = Matrix::Zero(3, 3);
  A(1, 2) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(validate(PayoffMatrix{A}).passed());
  EXPECT_TRUE(validate(PayoffMatrix{Matrix::Zero(3, 3)}).passed());
}

TEST(Polynomial, CanonicalizeMergesLikeTerms) {
  Polynomial p{make_variable(2, 0, 2.0), make_variable(2, 0, -2.0), make_constant(2, 1.0)};
  const Polynomial c = canonicalize(p);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].exponents, (std::vector<int>{0, 0}));
  EXPECT_DOUBLE_EQ(c[0].coeff, 1.0);
}

TEST(Polynomial, DerivativeAndJacobian) {
  // q(y) = 3 y1^2 y2
  Polynomial q{Monomial{3.0, {2, 1}}};
  const Vector y = vec({2.0, 5.0});
  EXPECT_DOUBLE_EQ(evaluate(derivative(q, 0), y), 60.0);
  EXPECT_DOUBLE_EQ(evaluate(derivative(q, 1), y), 12.0);
  EXPECT_EQ(degree(q), 3);

  const PolynomialField f{2, {q, scale(q, -1.0)}};
  const Matrix J = jacobian(f, y);
  EXPECT_DOUBLE_EQ(J(0, 0), 60.0);
  EXPECT_DOUBLE_EQ(J(1, 1), -12.0);
  EXPECT_TRUE(is_tangent(f));
}

}  // namespace
}  // namespace lvgame
