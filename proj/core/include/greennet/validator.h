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

#ifndef GREENNET_VALIDATOR_H_
#define GREENNET_VALIDATOR_H_

#include <map>
#include <string>
#include <vector>

#include "greennet/milp.h"
#include "greennet/model_builder.h"
#include "greennet/network.h"
#include "greennet/solution.h"

namespace greennet {

struct FamilyViolation {
  std::string constraint;  // row name, e.g. "capacity[e=1]"
  int row = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  Sense sense = Sense::kLessEqual;
};

struct ValidationReport {
  ModelKind kind = ModelKind::kCorrected;
  // One entry per family of the model, empty when the family holds.
  std::map<std::string, std::vector<FamilyViolation>> families;
  bool is_feasible = true;
  double objective = 0.0;
  // cycles[d] lists closed loops carried by demand d alongside its path.
  // Informational only; they do not affect feasibility.
  std::vector<std::vector<std::vector<int>>> cycles;
};

// Evaluates `sol` against every row of the chosen model. Violations carry
// the exact lhs and rhs; the tolerance only decides pass or fail. Throws
// InvalidArgumentError on a malformed instance or mismatched solution shape.
ValidationReport Check(const NetworkInstance& inst, const Solution& sol,
                       ModelKind kind);

struct DemandRoute {
  std::vector<int> path;                  // links from source to target
  std::vector<std::vector<int>> cycles;   // leftover closed loops
};

// Splits the links carrying demand `d` into one simple source-to-target
// router path and a set of link-disjoint cycles. Throws InvalidArgumentError
// if the links do not balance at every router (+1 source, -1 target).
DemandRoute ExtractPaths(const NetworkInstance& inst, const Solution& sol,
                         int d);

std::string FormatReport(const ValidationReport& report);
std::string ReportToJson(const ValidationReport& report);

}  // namespace greennet

#endif  // GREENNET_VALIDATOR_H_
