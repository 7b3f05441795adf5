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

#ifndef GREENNET_SOLUTION_H_
#define GREENNET_SOLUTION_H_

#include <cstdint>
#include <vector>

#include "greennet/network.h"

namespace greennet {

// An assignment of the four binary decision families in network terms.
struct Solution {
  std::vector<std::uint8_t> card_on;    // C: card c carries traffic
  std::vector<std::uint8_t> router_on;  // R: router r carries traffic
  BinaryMatrix link_state;              // E x K: link e runs in state k
  BinaryMatrix link_demand;             // E x D: demand d is routed over e
  double objective = 0.0;

  // All-zero solution sized for `inst`.
  static Solution Zero(const NetworkInstance& inst);

  bool operator==(const Solution&) const = default;
};

// Throws InvalidArgumentError unless every family has the instance's shape.
void RequireMatchingShape(const NetworkInstance& inst, const Solution& sol);

}  // namespace greennet

#endif  // GREENNET_SOLUTION_H_
