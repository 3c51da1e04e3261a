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

#ifndef LVGAME_RANDOM_HPP_
#define LVGAME_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <random>

#include "lvgame/types.hpp"

namespace lvgame {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// Dirichlet(1, ..., 1) draw (uniform on the simplex) from normalized
// standard exponentials.
inline Vector sample_simplex(Rng& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = -std::log(1.0 - unit(rng));
  return v / v.sum();
}

inline Vector sample_box(Rng& rng, Eigen::Index n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

}  // namespace lvgame

#endif  // LVGAME_RANDOM_HPP_
