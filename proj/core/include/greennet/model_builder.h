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

#ifndef GREENNET_MODEL_BUILDER_H_
#define GREENNET_MODEL_BUILDER_H_

#include <span>
#include <string_view>
#include <vector>

#include "greennet/milp.h"
#include "greennet/network.h"
#include "greennet/solution.h"

namespace greennet {

// kCorrected routes demands between routers and ties both directions of an
// edge to one energy state. kLegacy balances flow per port (with a designated
// source and target port per demand) and has no state coupling; it is kept
// only so the two can be compared.
enum class ModelKind { kCorrected, kLegacy };

std::string_view ToString(ModelKind kind);
// Accepts "corrected" or "legacy"; throws InvalidArgumentError otherwise.
ModelKind ParseModelKind(std::string_view text);

// Constraint family names, used as the prefix of every row name.
namespace family {
inline constexpr std::string_view kCardOut = "card_out";
inline constexpr std::string_view kCardIn = "card_in";
inline constexpr std::string_view kCardRouter = "card_router";
inline constexpr std::string_view kOneState = "one_state";
inline constexpr std::string_view kConserve = "conserve";
inline constexpr std::string_view kConservePort = "conserve_port";
inline constexpr std::string_view kCapacity = "capacity";
inline constexpr std::string_view kPortSymmetry = "port_symmetry";
}  // namespace family

// Families a model of the given kind contains, in row order.
std::vector<std::string_view> FamiliesOf(ModelKind kind);

// Fixed variable layout shared by both builders: all card variables, all
// router variables, link states (link-major), then link/demand routing
// (link-major).
class VariableIndex {
 public:
  VariableIndex() = default;
  VariableIndex(int cards, int routers, int links, int states, int demands)
      : cards_(cards), routers_(routers), links_(links), states_(states),
        demands_(demands) {}
  explicit VariableIndex(const NetworkInstance& inst)
      : VariableIndex(inst.num_cards, inst.num_routers, inst.num_links,
                      inst.num_states, inst.num_demands()) {}

  VarId card(int c) const { return VarId{c}; }
  VarId router(int r) const { return VarId{cards_ + r}; }
  VarId state(int e, int k) const {
    return VarId{cards_ + routers_ + e * states_ + k};
  }
  VarId route(int e, int d) const {
    return VarId{cards_ + routers_ + links_ * states_ + e * demands_ + d};
  }

  int size() const {
    return cards_ + routers_ + links_ * states_ + links_ * demands_;
  }

  bool operator==(const VariableIndex&) const = default;

 private:
  int cards_ = 0;
  int routers_ = 0;
  int links_ = 0;
  int states_ = 0;
  int demands_ = 0;
};

struct BuiltModel {
  MilpModel model;
  VariableIndex index;
};

// Both builders throw InvalidArgumentError on a malformed instance (which
// includes any demand whose source equals its target).
BuiltModel BuildCorrected(const NetworkInstance& inst);
BuiltModel BuildLegacy(const NetworkInstance& inst);
BuiltModel BuildModel(const NetworkInstance& inst, ModelKind kind);

// Port the legacy model uses as the source (or target) endpoint of demands
// at `router`: the lowest-indexed port on any of its cards, or -1 if none.
int LegacyEndpointPort(const NetworkInstance& inst, int router);

// Total power: link states, active cards, active routers.
double ObjectiveValue(const NetworkInstance& inst, const Solution& sol);

std::vector<double> ToAssignment(const VariableIndex& index,
                                 const NetworkInstance& inst,
                                 const Solution& sol);

// Rounds each entry to the nearest of {0, 1}; objective is recomputed.
Solution ToSolution(const NetworkInstance& inst, const VariableIndex& index,
                    std::span<const double> assignment);

}  // namespace greennet

#endif  // GREENNET_MODEL_BUILDER_H_
