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

#ifndef LVGAME_EMBEDDING_HPP_
#define LVGAME_EMBEDDING_HPP_

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lvgame/errors.hpp"
#include "lvgame/rhs.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

// Condition numbers above this are treated as singular.
inline constexpr double kMaxConditionNumber = 1e12;

// Square GLV system obtained by padding: the first n rows of A_tilde are the
// source coefficients, the rest are zero, and B_tilde extends the source
// exponents to a nonsingular square matrix.
struct PaddedGlv {
  Matrix A_tilde;
  Matrix B_tilde;
  int n = 0;
};

namespace detail {

inline Eigen::Index column_rank(const Matrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  return Eigen::ColPivHouseholderQR<Matrix>(M).rank();
}

inline double condition_number(const Matrix& M) {
  if (M.rows() == 0) return 1.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& s = svd.singularValues();
  const double smallest = s[s.size() - 1];
  if (!(smallest > 0.0)) return std::numeric_limits<double>::infinity();
  return s[0] / smallest;
}

// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline void check_singularity(const Matrix& M, const char* name) {
  const double cond = condition_number(M);
  if (!(cond <= kMaxConditionNumber)) {
    throw SingularityError(std::string(name) +
                           " is numerically singular (condition number " +
                           std::to_string(cond) + ")");
  }
}

}  // namespace detail

// Folds a nonzero growth vector into the coefficient matrix as the
// coefficient of the constant monomial.
inline GlvSystem absorb_lambda(const GlvSystem& sys) {
  detail::check_glv_shape(sys);
  if (sys.lambda.isZero(0.0)) return sys;
  const Eigen::Index n = sys.dim();
  const Eigen::Index mp = sys.monomials();
  GlvSystem out;
  out.lambda = Vector::Zero(n);
  out.A.resize(n, mp + 1);
  out.A << sys.A, sys.lambda;
  out.B.resize(mp + 1, n);
  out.B << sys.B, Matrix::Zero(1, n);
  return out;
}

// Appends exponent rows e_i (with zero coefficient columns) until B has
// full column rank.
inline GlvSystem ensure_column_rank(const GlvSystem& sys) {
  detail::check_glv_shape(sys);
  if (!sys.lambda.isZero(0.0)) {
    throw DomainError("ensure_column_rank: growth vector must be absorbed first");
  }
  const Eigen::Index n = sys.dim();
  Eigen::Index rank = detail::column_rank(sys.B);
  if (rank == n) return sys;
  GlvSystem out = sys;
  for (Eigen::Index i = 0; i < n && rank < n; ++i) {
    Matrix candidate(out.B.rows() + 1, n);
    candidate << out.B, Matrix::Identity(n, n).row(i);
    const Eigen::Index r = detail::column_rank(candidate);
    if (r > rank) {
      out.B = std::move(candidate);
      Matrix A(n, out.A.cols() + 1);
      A << out.A, Vector::Zero(n);
      out.A = std::move(A);
      rank = r;
    }
  }
  return out;
}

// Rows of B chosen in order, each kept when it raises the rank.
inline std::vector<Eigen::Index> pivot_rows(const Matrix& B) {
  std::vector<Eigen::Index> chosen;
  Matrix acc(0, B.cols());
  for (Eigen::Index j = 0; j < B.rows() && acc.rows() < B.cols(); ++j) {
    Matrix candidate(acc.rows() + 1, B.cols());
    candidate << acc, B.row(j);
    if (detail::column_rank(candidate.transpose()) == candidate.rows()) {
      acc = std::move(candidate);
      chosen.push_back(j);
    }
  }
  return chosen;
}

// Squares the system. The completion columns of B_tilde are the standard
// basis vectors e_j for every row j that is not a pivot row of B, in
// increasing j; the completed matrix is then nonsingular by construction.
inline PaddedGlv pad_to_square(const GlvSystem& sys) {
  detail::check_glv_shape(sys);
  if (!sys.lambda.isZero(0.0)) {
    throw DomainError("pad_to_square: growth vector must be absorbed first");
  }
  const Eigen::Index n = sys.dim();
  const Eigen::Index size = sys.monomials();
  if (size < n) throw ShapeError("pad_to_square: fewer monomials than species");
  const std::vector<Eigen::Index> pivots = pivot_rows(sys.B);
  if (static_cast<Eigen::Index>(pivots.size()) < n) {
    throw SingularityError("pad_to_square: B does not have full column rank");
  }

  PaddedGlv out;
  out.n = static_cast<int>(n);
  out.A_tilde = Matrix::Zero(size, size);
  out.A_tilde.topRows(n) = sys.A;
  out.B_tilde = Matrix::Zero(size, size);
  out.B_tilde.leftCols(n) = sys.B;
  Eigen::Index col = n;
  std::size_t next_pivot = 0;
  for (Eigen::Index j = 0; j < size; ++j) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == j) {
      ++next_pivot;
      continue;
    }
    out.B_tilde(j, col++) = 1.0;
  }
  detail::check_singularity(out.B_tilde, "B_tilde");
  return out;
}

// The padded system as an ordinary GLV system on R^{m-1}.
inline GlvSystem to_glv(const PaddedGlv& padded) {
  return GlvSystem{Vector::Zero(padded.A_tilde.rows()), padded.A_tilde,
                   padded.B_tilde};
}

namespace detail {

inline Matrix checked_inverse(const Matrix& B_tilde) {
  check_singularity(B_tilde, "B_tilde");
  Matrix inv = B_tilde.fullPivLu().inverse();
  const Matrix eye = Matrix::Identity(B_tilde.rows(), B_tilde.cols());
  if (!((B_tilde * inv - eye).cwiseAbs().maxCoeff() <= 1e-10)) {
    throw SingularityError("B_tilde inverse failed the identity check");
  }
  return inv;
}

}  // namespace detail

// Change of variables z_i = prod_k y_k^{B_tilde(i,k)}; the transformed
// coefficient matrix is B_tilde * A_tilde and every monomial becomes linear.
inline LvSystem quasimonomial_transform(const PaddedGlv& padded) {
  detail::checked_inverse(padded.B_tilde);
  return LvSystem{padded.B_tilde * padded.A_tilde};
}

// Adds the compactifying species as a zero last row and column.
inline PayoffMatrix compactify(const LvSystem& lv) {
  const Eigen::Index d = lv.dim();
  PayoffMatrix game;
  game.A = Matrix::Zero(d + 1, d + 1);
  game.A.topLeftCorner(d, d) = lv.A_hat;
  return game;
}

inline GameEmbedding embed(const GlvSystem& sys) {
  detail::check_glv_shape(sys);
  const GlvSystem ranked = ensure_column_rank(absorb_lambda(sys));
  const PaddedGlv padded = pad_to_square(ranked);
  const LvSystem lv = quasimonomial_transform(padded);

  GameEmbedding e;
  e.game = compactify(lv);
  e.n = static_cast<int>(sys.dim());
  e.B_bar = ranked.B;
  e.B_tilde = padded.B_tilde;
  e.B_tilde_inv = detail::checked_inverse(padded.B_tilde);
  return e;
}

// x -> p with p_i = z_i / N, p_m = 1 / N, z_i = prod_k x_k^{B_bar(i,k)}.
inline Vector forward_map(const GameEmbedding& e, const Vector& x) {
  if (x.size() != e.n) throw ShapeError("forward_map: state dimension mismatch");
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0.0)) {
      throw DomainError("forward_map: component " + std::to_string(k) +
                        " is not strictly positive");
    }
  }
  static const double kMaxLog = std::log(std::numeric_limits<double>::max());
  const Eigen::Index size = e.B_bar.rows();
  const Vector log_x = x.array().log().matrix();
  const Vector log_z = e.B_bar * log_x;

  Vector z(size);
  detail::CompensatedSum total;
  total.add(1.0);
  for (Eigen::Index i = 0; i < size; ++i) {
    if (!(log_z[i] < kMaxLog)) {
      throw RangeError("forward_map: monomial " + std::to_string(i) + " overflows");
    }
    z[i] = std::exp(log_z[i]);
    total.add(z[i]);
  }
  const double norm = total.value();
  if (!std::isfinite(norm)) throw RangeError("forward_map: normalizer overflows");

  Vector p(size + 1);
  detail::CompensatedSum head;
  for (Eigen::Index i = 0; i < size; ++i) {
    p[i] = z[i] / norm;
    head.add(p[i]);
  }
  p[size] = 1.0 - head.value();
  if (!(p[size] > 0.0)) {
    throw RangeError("forward_map: compactifying coordinate lost to cancellation");
  }
  return p;
}

// p -> x with x_i = prod_k (p_k / p_m)^{B_tilde_inv(i,k)}, i < n.
inline Vector inverse_map(const GameEmbedding& e, const Vector& p) {
  if (p.size() != e.m()) throw ShapeError("inverse_map: strategy dimension mismatch");
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    if (!(p[k] > 0.0)) {
      throw DomainError("inverse_map: component " + std::to_string(k) +
                        " is not strictly positive");
    }
  }
  const Eigen::Index size = p.size() - 1;
  const double log_last = std::log(p[size]);
  Vector log_ratio(size);
  for (Eigen::Index k = 0; k < size; ++k) log_ratio[k] = std::log(p[k]) - log_last;
  return (e.B_tilde_inv.topRows(e.n) * log_ratio).array().exp().matrix();
}

}  // namespace lvgame

#endif  // LVGAME_EMBEDDING_HPP_
