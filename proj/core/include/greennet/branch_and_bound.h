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

#ifndef GREENNET_BRANCH_AND_BOUND_H_
#define GREENNET_BRANCH_AND_BOUND_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "greennet/milp.h"

namespace greennet {

enum class BranchRule { kMostFractional, kLowestIndex };

struct SolveConfig {
  double integrality_tolerance = 1e-6;
  double feasibility_tolerance = kFeasibilityTolerance;
  std::int64_t node_limit = 1'000'000;
  double time_limit_seconds = 3600.0;
  BranchRule branch_rule = BranchRule::kMostFractional;
  // Open nodes are taken from the queue in rounds of `batch_size`; their LP
  // relaxations are independent and may be solved on `threads` workers. The
  // search depends only on batch_size, so any thread count gives the same
  // answer.
  int batch_size = 4;
  int threads = 1;

  // Throws InvalidArgumentError unless tolerances are in (0, 1e-2] and
  // limits are positive.
  void Validate() const;
};

enum class SolveStatus { kOptimal, kInfeasible, kLimitHit };

std::string_view ToString(SolveStatus status);

struct MilpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  // Incumbent assignment; empty when no integer-feasible point was found.
  std::vector<double> assignment;
  // Incumbent objective, +infinity without an incumbent.
  double objective = kInfinity;
  std::int64_t nodes_explored = 0;
  // Proven lower bound on the optimum (equal to objective when optimal).
  double bound = -kInfinity;

  bool has_incumbent() const { return !assignment.empty(); }
};

// Exact LP-based branch-and-bound. Nodes are chosen best-bound first, ties
// going to the deeper node and then to the older one; the branching variable
// is the binary chosen by `branch_rule` (ties to the lowest index). Each
// node's LP is solved from scratch by SolveLpRelaxation.
//
// Throws NumericalError if an LP solve cannot be trusted, and
// InvalidArgumentError if the root relaxation is unbounded.
MilpSolution BranchAndBound(const MilpModel& model,
                            const SolveConfig& config = {});

}  // namespace greennet

#endif  // GREENNET_BRANCH_AND_BOUND_H_
