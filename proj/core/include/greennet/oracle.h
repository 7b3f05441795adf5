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

#ifndef GREENNET_ORACLE_H_
#define GREENNET_ORACLE_H_

#include <cstdint>

#include "greennet/branch_and_bound.h"
#include "greennet/network.h"

namespace greennet {

inline constexpr std::int64_t kDefaultEnumerationLimit = 10'000'000;

// Ground-truth optimizer that never touches an LP. It works on the network
// directly:
//
//   1. every demand picks one simple router path from source to target;
//   2. links are grouped into classes that must share one energy state
//      (the out- and in-link of every port); a class touching a port that
//      has a link in only one direction must stay off;
//   3. every class picks "off" or one state, and the combination is kept
//      when each link's carried volume fits its state's capacity;
//   4. cards touched by a routed link and their routers are switched on.
//
// The cheapest surviving combination is returned in the VariableIndex
// layout of the corrected model; nodes_explored counts the combinations
// visited. Throws EnumerationLimitError when (paths per demand, multiplied)
// times (state choices per class, multiplied) exceeds `limit`, and
// InvalidArgumentError on a malformed instance.
MilpSolution OracleSolve(const NetworkInstance& inst,
                         std::int64_t limit = kDefaultEnumerationLimit);

}  // namespace greennet

#endif  // GREENNET_ORACLE_H_
