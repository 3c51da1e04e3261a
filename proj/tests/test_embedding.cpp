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
#include "lvgame/lorenz.hpp"
#include "lvgame/random.hpp"
#include "lvgame/simulate.hpp"

namespace lvgame {
namespace {

Matrix logistic_game() {
  Matrix A = Matrix::Zero(3, 3);
  A(0, 0) = -1;
  A(0, 1) = 1;
  return A;
}

// Padded Lorenz matrices and the completion inverse, entered by hand.
Matrix lorenz_A_tilde(const LorenzParams& p) {
  Matrix A = Matrix::Zero(10, 10);
  const double s = p.sigma, r = p.r;
  A.row(0) << s, 0, 0, 0, 0, 0, 0, 0, 0, -s;
  A.row(1) << 0, p.eta(), -1, r, p.alpha(), 0, 0, 0, 0, -1;
  A.row(2) << 0, 0, 0, 0, 0, 1, -r, -r, p.mu(), -p.beta;
  return A;
}

Matrix lorenz_B_tilde() {
  Matrix B(10, 10);
  // clang-format off
  B << -1,  1,  0, 0, 0, 0, 0, 0, 0, 0,
        1, -1,  0, 1, 0, 0, 0, 0, 0, 0,
        1, -1,  1, 0, 0, 0, 0, 0, 0, 0,
        0, -1,  1, 0, 0, 0, 0, 0, 0, 0,
        0, -1,  0, 0, 1, 0, 0, 0, 0, 0,
        1,  1, -1, 0, 0, 1, 0, 0, 0, 0,
        1,  0, -1, 0, 0, 0, 1, 0, 0, 0,
        0,  1, -1, 0, 0, 0, 0, 1, 0, 0,
        0,  0, -1, 0, 0, 0, 0, 0, 1, 0,
        0,  0,  0, 0, 0, 0, 0, 0, 0, 1;
  // clang-format on
  return B;
}

Matrix lorenz_B_tilde_inv() {
  Matrix B(10, 10);
  // clang-format off
  B << 0, 0,  1, -1, 0, 0, 0, 0, 0, 0,
       1, 0,  1, -1, 0, 0, 0, 0, 0, 0,
       1, 0,  1,  0, 0, 0, 0, 0, 0, 0,
       1, 1,  0,  0, 0, 0, 0, 0, 0, 0,
       1, 0,  1, -1, 1, 0, 0, 0, 0, 0,
       0, 0, -1,  2, 0, 1, 0, 0, 0, 0,
       1, 0,  0,  1, 0, 0, 1, 0, 0, 0,
       0, 0,  0,  1, 0, 0, 0, 1, 0, 0,
       1, 0,  1,  0, 0, 0, 0, 0, 1, 0,
       0, 0,  0,  0, 0, 0, 0, 0, 0, 1;
  // clang-format on
  return B;
}

TEST(AbsorbLambda, ZeroGrowthUnchanged) {
  const GlvSystem lor = shifted_lorenz_glv(LorenzParams{});
  const GlvSystem out = absorb_lambda(lor);
  EXPECT_EQ(out.A, lor.A);
  EXPECT_EQ(out.B, lor.B);
  EXPECT_EQ(out.lambda, lor.lambda);
}

TEST(AbsorbLambda, Logistic) {
  const GlvSystem out = absorb_lambda(fixtures::logistic());
  EXPECT_EQ(out.lambda, Vector::Zero(1));
  EXPECT_EQ(out.A, (Matrix(1, 2) << -1, 1).finished());
  EXPECT_EQ(out.B, (Matrix(2, 1) << 1, 0).finished());
}

TEST(AbsorbLambda, KeepsTheField) {
  Rng rng(21);
  for (const GlvSystem& sys : {fixtures::logistic(), fixtures::competition(),
                               fixtures::fractional(), fixtures::random_glv(rng, 4)}) {
    const GlvSystem out = ensure_column_rank(absorb_lambda(sys));
    for (int s = 0; s < 10; ++s) {
      const Vector x = sample_box(rng, sys.dim(), 0.1, 10.0);
      const Vector a = eval_glv_rhs(sys, x), b = eval_glv_rhs(out, x);
      EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-13 * std::max(1.0, a.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(EnsureColumnRank, FullRankUnchanged) {
  const GlvSystem lor = shifted_lorenz_glv(LorenzParams{});
  const GlvSystem out = ensure_column_rank(lor);
  EXPECT_EQ(out.A, lor.A);
  EXPECT_EQ(out.B, lor.B);
}

TEST(EnsureColumnRank, RankDeficient) {
  GlvSystem sys{Vector::Zero(2), (Matrix(2, 1) << -1, 2).finished(),
                (Matrix(1, 2) << 1, 1).finished()};
  const GlvSystem out = ensure_column_rank(sys);
  EXPECT_EQ(out.B.rows(), 2);
  EXPECT_EQ(Eigen::FullPivLU<Matrix>(out.B).rank(), 2);
  EXPECT_EQ(out.A.col(1), Vector::Zero(2));
  EXPECT_TRUE(out.B.row(1) == (Matrix(1, 2) << 1, 0).finished() ||
              out.B.row(1) == (Matrix(1, 2) << 0, 1).finished());
}

TEST(PadToSquare, LorenzMatchesHandMatrices) {
  for (double r : {50.0, 76.0, 100.0}) {
    LorenzParams p;
    p.r = r;
    const PaddedGlv padded = pad_to_square(ensure_column_rank(absorb_lambda(shifted_lorenz_glv(p))));
    EXPECT_EQ(padded.A_tilde, lorenz_A_tilde(p));
    EXPECT_EQ(padded.B_tilde, lorenz_B_tilde());
  }
}

TEST(PadToSquare, Logistic) {
  const PaddedGlv padded = pad_to_square(absorb_lambda(fixtures::logistic()));
  EXPECT_EQ(padded.A_tilde, (Matrix(2, 2) << -1, 1, 0, 0).finished());
  EXPECT_EQ(padded.B_tilde, Matrix::Identity(2, 2));
}

TEST(PadToSquare, SquareInputNotPadded) {
  GlvSystem sys{Vector::Zero(2), (Matrix(2, 2) << 1, 2, 3, 4).finished(),
                (Matrix(2, 2) << 2, 1, 0, 1).finished()};
  const PaddedGlv padded = pad_to_square(sys);
  EXPECT_EQ(padded.A_tilde, sys.A);
  EXPECT_EQ(padded.B_tilde, sys.B);
}

TEST(PadToSquare, IllConditionedIsSingular) {
  GlvSystem sys{Vector::Zero(2), Matrix::Ones(2, 2),
                (Matrix(2, 2) << 1, 1, 1, 1 + 1e-13).finished()};
  EXPECT_THROW(embed(sys), SingularityError);
}

TEST(QuasimonomialTransform, Logistic) {
  const LvSystem lv = quasimonomial_transform(pad_to_square(absorb_lambda(fixtures::logistic())));
  EXPECT_EQ(lv.A_hat, (Matrix(2, 2) << -1, 1, 0, 0).finished());
}

TEST(QuasimonomialTransform, PermutedDiagonal) {
  // B~ = ((0,2),(3,0)), A~ = ((1,2),(3,4)) -> A^ = B~ A~ = ((6,8),(3,6))
  PaddedGlv padded{(Matrix(2, 2) << 1, 2, 3, 4).finished(),
                   (Matrix(2, 2) << 0, 2, 3, 0).finished(), 2};
  const LvSystem lv = quasimonomial_transform(padded);
  EXPECT_LT((lv.A_hat - (Matrix(2, 2) << 6, 8, 3, 6).finished()).cwiseAbs().maxCoeff(), 1e-14);
  const Matrix back = padded.B_tilde * padded.B_tilde.inverse() * padded.A_tilde;
  EXPECT_LT((back - padded.A_tilde).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(QuasimonomialTransform, LorenzLeadingBlock) {
  const LorenzParams p;
  const LvSystem lv =
      quasimonomial_transform(pad_to_square(absorb_lambda(shifted_lorenz_glv(p))));
  EXPECT_EQ(lv.A_hat, lorenz_display_matrix(p).topLeftCorner(10, 10));
}

TEST(Compactify, Blocks) {
  EXPECT_EQ(compactify(LvSystem{Matrix::Zero(4, 4)}).A, Matrix::Zero(5, 5));
  EXPECT_EQ(compactify(LvSystem{(Matrix(2, 2) << -1, 1, 0, 0).finished()}).A, logistic_game());
}

TEST(Embed, LogisticGameAndMaps) {
  const GameEmbedding e = embed(fixtures::logistic());
  EXPECT_EQ(e.game.A, logistic_game());
  EXPECT_EQ(e.n, 1);
  for (double x : {0.1, 1.0, 3.5}) {
    const Vector p = forward_map(e, Vector::Constant(1, x));
    EXPECT_NEAR(p[0], x / (x + 2), 1e-15);
    EXPECT_NEAR(p[1], 1 / (x + 2), 1e-15);
    EXPECT_NEAR(p[2], 1 / (x + 2), 1e-15);
  }
  const Vector u = forward_map(e, Vector::Ones(1));
  EXPECT_LT((u - Vector::Constant(3, 1.0 / 3.0)).cwiseAbs().maxCoeff(), 1e-16);
  EXPECT_NEAR(inverse_map(e, Vector::Constant(3, 1.0 / 3.0))[0], 1.0, 1e-15);
}

TEST(Embed, ZeroCoefficients) {
  GlvSystem sys{Vector::Zero(2), Matrix::Zero(2, 3),
                (Matrix(3, 2) << 1, 0, 0, 1, 1, 1).finished()};
  EXPECT_EQ(embed(sys).game.A, Matrix::Zero(4, 4));
}

TEST(Embed, GameHasZeroLastRowAndColumn) {
  Rng rng(17);
  for (int n = 1; n <= 5; ++n) {
    const GameEmbedding e = embed(fixtures::random_glv(rng, n));
    EXPECT_EQ(e.game.A.row(e.m() - 1), Matrix::Zero(1, e.m()));
    EXPECT_EQ(e.game.A.col(e.m() - 1), Vector::Zero(e.m()));
  }
}

TEST(Embed, LorenzInverseMatchesHandMatrix) {
  const GameEmbedding e = lorenz_game(LorenzParams{});
  EXPECT_LT((e.B_tilde_inv - lorenz_B_tilde_inv()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ForwardMap, LorenzAtOnes) {
  const GameEmbedding e = lorenz_game(LorenzParams{});
  const Vector p = forward_map(e, Vector::Ones(3));
  EXPECT_LT((p - Vector::Constant(11, 1.0 / 11.0)).cwiseAbs().maxCoeff(), 1e-16);
}

TEST(ForwardMap, LorenzSymbolicForm) {
  const GameEmbedding e = lorenz_game(LorenzParams{});
  const Vector x = (Vector(3) << 2.0, 3.0, 5.0).finished();
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const Vector z = (Vector(10) << x2 / x1, x1 / x2, x1 * x3 / x2, x3 / x2, 1 / x2,
                    x1 * x2 / x3, x1 / x3, x2 / x3, 1 / x3, 1.0)
                       .finished();
  const double N = 1 + z.sum();
  const Vector p = forward_map(e, x);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(p[i], z[i] / N, 1e-15);
  EXPECT_NEAR(p[10], 1 / N, 1e-15);
}

TEST(ForwardMap, ShapeAndDomain) {
  const GameEmbedding e = embed(fixtures::competition());
  EXPECT_THROW(forward_map(e, Vector::Ones(3)), ShapeError);
  EXPECT_THROW(forward_map(e, (Vector(2) << 1.0, 0.0).finished()), DomainError);
  ASSERT_EQ(e.m(), 4);
  EXPECT_THROW(inverse_map(e, (Vector(4) << 0.5, 0.5, 0.0, 0.0).finished()), DomainError);
}

TEST(ForwardMap, RoundTrip) {
  Rng rng(kDefaultSeed);
  std::vector<GameEmbedding> es{embed(fixtures::logistic()), embed(fixtures::competition()),
                                embed(fixtures::fractional()), lorenz_game(LorenzParams{})};
  for (int n = 2; n <= 5; ++n) es.push_back(embed(fixtures::random_glv(rng, n)));
  for (const auto& e : es) {
    for (int s = 0; s < 200; ++s) {
      const Vector x = sample_box(rng, e.n, 0.1, 10.0);
      const Vector p = forward_map(e, x);
      EXPECT_LT(std::abs(p.sum() - 1.0), 1e-15);
      EXPECT_LT((inverse_map(e, p) - x).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(PaddedDynamics, DummySpeciesStayAtOne) {
  const PaddedGlv padded = pad_to_square(absorb_lambda(shifted_lorenz_glv(LorenzParams{})));
  const GlvSystem sys = to_glv(padded);
  Vector y0 = Vector::Ones(10);
  y0.head(3) << 77.0, 77.0, 77.0;
  IntegratorConfig c;
  c.t_end = 2.0;
  const Trajectory tr = simulate_glv(sys, y0, c);
  EXPECT_LT((tr.states.rightCols(7).array() - 1.0).abs().maxCoeff(), 1e-10);
}

}  // namespace
}  // namespace lvgame
