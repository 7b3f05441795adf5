// Copyright 2026 The greennet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREENNET_SIMPLEX_H_
#define GREENNET_SIMPLEX_H_

#include <span>
#include <string_view>
#include <vector>

#include "greennet/milp.h"

namespace greennet {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view ToString(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;  // one per model variable; empty unless optimal
  double objective = 0.0;
  int iterations = 0;
};

// Solves the continuous relaxation of `model` (binary variables relaxed to
// [0, 1]) with a dense two-phase bounded-variable primal simplex. Entering
// and leaving variables follow Bland's smallest-index rule, so the method
// cannot cycle and is fully deterministic. Rows without nonzero terms are
// dropped up front (or prove infeasibility if their sense fails).
//
// The returned point is re-checked against the original rows and bounds;
// a failed check raises NumericalError instead of returning a bad point.
LpResult SolveLpRelaxation(const MilpModel& model);

// Same, with per-variable bounds replacing the model's own. Used by
// branch-and-bound to fix binaries.
LpResult SolveLpRelaxation(const MilpModel& model,
                           std::span<const double> lower,
                           std::span<const double> upper);

}  // namespace greennet

#endif  // GREENNET_SIMPLEX_H_
