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

#ifndef LVGAME_LVGAME_HPP_
#define LVGAME_LVGAME_HPP_

#include "lvgame/embedding.hpp"
#include "lvgame/errors.hpp"
#include "lvgame/integrate.hpp"
#include "lvgame/io.hpp"
#include "lvgame/lorenz.hpp"
#include "lvgame/polynomial.hpp"
#include "lvgame/random.hpp"
#include "lvgame/recover.hpp"
#include "lvgame/regret.hpp"
#include "lvgame/rhs.hpp"
#include "lvgame/simplex_attractor.hpp"
#include "lvgame/simulate.hpp"
#include "lvgame/types.hpp"

#endif  // LVGAME_LVGAME_HPP_
