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

#ifndef LVGAME_POLYNOMIAL_HPP_
#define LVGAME_POLYNOMIAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lvgame/errors.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

// Monomial bookkeeping for polynomial fields with non-negative integer
// exponents. Nothing here is symbolic beyond collecting like terms.

inline Monomial make_constant(int n, double c) {
  return Monomial{c, std::vector<int>(static_cast<std::size_t>(n), 0)};
}

inline Monomial make_variable(int n, int i, double c = 1.0) {
  Monomial mono = make_constant(n, c);
  mono.exponents[static_cast<std::size_t>(i)] = 1;
  return mono;
}

// Merges like terms, drops terms whose coefficient magnitude is at most
// `drop_tol`, and orders the result by exponent vector.
inline Polynomial canonicalize(const Polynomial& poly, double drop_tol = 0.0) {
  std::map<std::vector<int>, double> terms;
  for (const Monomial& mono : poly) terms[mono.exponents] += mono.coeff;
  Polynomial out;
  out.reserve(terms.size());
  for (auto& [exponents, coeff] : terms) {
    if (std::abs(coeff) > drop_tol) out.push_back(Monomial{coeff, exponents});
  }
  return out;
}

inline Polynomial add(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out.insert(out.end(), b.begin(), b.end());
  return canonicalize(out);
}

inline Polynomial scale(const Polynomial& a, double factor) {
  Polynomial out = a;
  for (Monomial& mono : out) mono.coeff *= factor;
  return canonicalize(out);
}

inline double evaluate(const Monomial& mono, const Vector& y) {
  double value = mono.coeff;
  for (std::size_t k = 0; k < mono.exponents.size(); ++k) {
    const int e = mono.exponents[k];
    const double base = y[static_cast<Eigen::Index>(k)];
    for (int r = 0; r < e; ++r) value *= base;
  }
  return value;
}

inline double evaluate(const Polynomial& poly, const Vector& y) {
  double value = 0.0;
  for (const Monomial& mono : poly) value += evaluate(mono, y);
  return value;
}

inline Polynomial derivative(const Polynomial& poly, int k) {
  Polynomial out;
  for (const Monomial& mono : poly) {
    const int e = mono.exponents[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    Monomial d = mono;
    d.coeff *= e;
    d.exponents[static_cast<std::size_t>(k)] = e - 1;
    out.push_back(std::move(d));
  }
  return canonicalize(out);
}

inline int degree(const Polynomial& poly) {
  int deg = 0;
  for (const Monomial& mono : poly) {
    int d = 0;
    for (int e : mono.exponents) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

// Sum of all coordinate polynomials after canonical aggregation.
inline Polynomial coordinate_sum(const PolynomialField& field) {
  Polynomial all;
  for (const Polynomial& poly : field.coords) {
    all.insert(all.end(), poly.begin(), poly.end());
  }
  return canonicalize(all);
}

inline bool is_tangent(const PolynomialField& field, double tol = 1e-12) {
  return canonicalize(coordinate_sum(field), tol).empty();
}

inline void check_field_shape(const PolynomialField& field) {
  if (field.n <= 0) throw ShapeError("polynomial field: n must be positive");
  if (field.coords.size() != static_cast<std::size_t>(field.n)) {
    throw ShapeError("polynomial field: expected " + std::to_string(field.n) +
                     " coordinate polynomials, got " +
                     std::to_string(field.coords.size()));
  }
  for (const Polynomial& poly : field.coords) {
    for (const Monomial& mono : poly) {
      if (mono.exponents.size() != static_cast<std::size_t>(field.n)) {
        throw ShapeError("polynomial field: exponent vector length mismatch");
      }
      for (int e : mono.exponents) {
        if (e < 0) throw ShapeError("polynomial field: negative exponent");
      }
    }
  }
}

inline Vector evaluate(const PolynomialField& field, const Vector& y) {
  if (y.size() != field.n) throw ShapeError("polynomial field: point dimension");
  Vector out(field.n);
  for (int i = 0; i < field.n; ++i) {
    out[i] = evaluate(field.coords[static_cast<std::size_t>(i)], y);
  }
  return out;
}

// Jacobian J(i,k) = d p_i / d y_k, evaluated at y.
inline Matrix jacobian(const PolynomialField& field, const Vector& y) {
  if (y.size() != field.n) throw ShapeError("polynomial field: point dimension");
  Matrix jac(field.n, field.n);
  for (int i = 0; i < field.n; ++i) {
    for (int k = 0; k < field.n; ++k) {
      jac(i, k) = evaluate(derivative(field.coords[static_cast<std::size_t>(i)], k), y);
    }
  }
  return jac;
}

}  // namespace lvgame

#endif  // LVGAME_POLYNOMIAL_HPP_
