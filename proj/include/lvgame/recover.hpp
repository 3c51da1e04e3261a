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

#ifndef LVGAME_RECOVER_HPP_
#define LVGAME_RECOVER_HPP_

#include <string>

#include "lvgame/embedding.hpp"
#include "lvgame/errors.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

// Maps a replicator trajectory back to source coordinates sample by sample.
inline Trajectory recover(const GameEmbedding& e, const Trajectory& traj) {
  if (traj.states.cols() != e.m()) {
    throw ShapeError("recover: trajectory has " + std::to_string(traj.states.cols()) +
                     " columns, embedding expects " + std::to_string(e.m()));
  }
  Trajectory out;
  out.times = traj.times;
  out.meta = traj.meta;
  out.states.resize(traj.states.rows(), e.n);
  for (Eigen::Index k = 0; k < traj.states.rows(); ++k) {
    const Vector p = traj.states.row(k).transpose();
    if ((p.array() <= 0.0).any()) {
      throw DomainError("recover: sample " + std::to_string(k) +
                        " lies on the simplex boundary");
    }
    out.states.row(k) = inverse_map(e, p).transpose();
  }
  return out;
}

}  // namespace lvgame

#endif  // LVGAME_RECOVER_HPP_
