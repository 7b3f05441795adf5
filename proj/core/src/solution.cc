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

#include "greennet/solution.h"

#include <fmt/format.h>

#include "greennet/errors.h"

namespace greennet {

Solution Solution::Zero(const NetworkInstance& inst) {
  Solution sol;
  sol.card_on.assign(inst.num_cards, 0);
  sol.router_on.assign(inst.num_routers, 0);
  sol.link_state = BinaryMatrix(inst.num_links, inst.num_states);
  sol.link_demand = BinaryMatrix(inst.num_links, inst.num_demands());
  return sol;
}

void RequireMatchingShape(const NetworkInstance& inst, const Solution& sol) {
  const auto mismatch = [](const char* what, int got_r, int got_c, int want_r,
                           int want_c) {
    return InvalidArgumentError(
        fmt::format("solution {} has shape {}x{}, instance needs {}x{}", what,
                    got_r, got_c, want_r, want_c));
  };
  if (static_cast<int>(sol.card_on.size()) != inst.num_cards) {
    throw mismatch("card_on", static_cast<int>(sol.card_on.size()), 1,
                   inst.num_cards, 1);
  }
  if (static_cast<int>(sol.router_on.size()) != inst.num_routers) {
    throw mismatch("router_on", static_cast<int>(sol.router_on.size()), 1,
                   inst.num_routers, 1);
  }
  if (sol.link_state.rows() != inst.num_links ||
      sol.link_state.cols() != inst.num_states) {
    throw mismatch("link_state", sol.link_state.rows(), sol.link_state.cols(),
                   inst.num_links, inst.num_states);
  }
  if (sol.link_demand.rows() != inst.num_links ||
      sol.link_demand.cols() != inst.num_demands()) {
    throw mismatch("link_demand", sol.link_demand.rows(),
                   sol.link_demand.cols(), inst.num_links,
                   inst.num_demands());
  }
}

}  // namespace greennet
