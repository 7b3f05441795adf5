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

#include "greennet/model_builder.h"

#include <map>

#include <fmt/format.h>

#include "greennet/errors.h"

namespace greennet {

namespace {

// Accumulates coefficients per variable so each row lists a VarId once.
class RowBuilder {
 public:
  void Add(VarId var, double coefficient) { coef_[var.index] += coefficient; }

  LinearConstraint Build(std::string name, Sense sense, double rhs) const {
    LinearConstraint row{std::move(name), {}, sense, rhs};
    for (const auto& [index, coefficient] : coef_) {
      if (coefficient != 0.0) row.terms.push_back({VarId{index}, coefficient});
    }
    return row;
  }

 private:
  std::map<int, double> coef_;
};

std::string Name(std::string_view family_name, std::string_view indices) {
  return fmt::format("{}[{}]", family_name, indices);
}

VariableIndex AddVariables(const NetworkInstance& inst, MilpModel& model) {
  const VariableIndex index(inst);
  for (int c = 0; c < inst.num_cards; ++c) {
    model.AddVariable(Variable::Binary(fmt::format("x[c={}]", c)));
  }
  for (int r = 0; r < inst.num_routers; ++r) {
    model.AddVariable(Variable::Binary(fmt::format("z[r={}]", r)));
  }
  for (int e = 0; e < inst.num_links; ++e) {
    for (int k = 0; k < inst.num_states; ++k) {
      model.AddVariable(Variable::Binary(fmt::format("y[e={},k={}]", e, k)));
    }
  }
  for (int e = 0; e < inst.num_links; ++e) {
    for (int d = 0; d < inst.num_demands(); ++d) {
      model.AddVariable(Variable::Binary(fmt::format("u[e={},d={}]", e, d)));
    }
  }

  for (int e = 0; e < inst.num_links; ++e) {
    for (int k = 0; k < inst.num_states; ++k) {
      model.SetObjectiveCoefficient(index.state(e, k),
                                    inst.state_power(e, k));
    }
  }
  for (int c = 0; c < inst.num_cards; ++c) {
    model.SetObjectiveCoefficient(index.card(c), inst.card_power[c]);
  }
  for (int r = 0; r < inst.num_routers; ++r) {
    model.SetObjectiveCoefficient(index.router(r), inst.router_power[r]);
  }
  return index;
}

// sum_p l_cp sum_e (a_ep | b_ep) u_ed <= x_c for every demand and card.
void AddCardActivation(const NetworkInstance& inst, const VariableIndex& index,
                       MilpModel& model) {
  for (const bool outgoing : {true, false}) {
    const BinaryMatrix& incidence = outgoing ? inst.link_out : inst.link_in;
    const auto family_name = outgoing ? family::kCardOut : family::kCardIn;
    for (int d = 0; d < inst.num_demands(); ++d) {
      for (int c = 0; c < inst.num_cards; ++c) {
        RowBuilder row;
        for (int p = 0; p < inst.num_ports; ++p) {
          if (inst.card_port(c, p) == 0) continue;
          for (int e = 0; e < inst.num_links; ++e) {
            if (incidence(e, p) != 0) row.Add(index.route(e, d), 1.0);
          }
        }
        row.Add(index.card(c), -1.0);
        model.AddConstraint(row.Build(
            Name(family_name, fmt::format("d={},c={}", d, c)),
            Sense::kLessEqual, 0.0));
      }
    }
  }
}

// g_rc x_c <= z_r, emitted only where g_rc = 1.
void AddRouterActivation(const NetworkInstance& inst,
                         const VariableIndex& index, MilpModel& model) {
  for (int r = 0; r < inst.num_routers; ++r) {
    for (int c = 0; c < inst.num_cards; ++c) {
      if (inst.router_card(r, c) == 0) continue;
      RowBuilder row;
      row.Add(index.card(c), 1.0);
      row.Add(index.router(r), -1.0);
      model.AddConstraint(
          row.Build(Name(family::kCardRouter, fmt::format("r={},c={}", r, c)),
                    Sense::kLessEqual, 0.0));
    }
  }
}

void AddOneState(const NetworkInstance& inst, const VariableIndex& index,
                 MilpModel& model) {
  for (int e = 0; e < inst.num_links; ++e) {
    RowBuilder row;
    for (int k = 0; k < inst.num_states; ++k) row.Add(index.state(e, k), 1.0);
    model.AddConstraint(row.Build(Name(family::kOneState, fmt::format("e={}", e)),
                                  Sense::kLessEqual, 1.0));
  }
}

// sum_c g_rc sum_p l_cp sum_e (a_ep - b_ep) u_ed = +1 / -1 / 0.
void AddRouterConservation(const NetworkInstance& inst,
                           const VariableIndex& index, MilpModel& model) {
  for (int d = 0; d < inst.num_demands(); ++d) {
    const Demand& demand = inst.demands[d];
    for (int r = 0; r < inst.num_routers; ++r) {
      RowBuilder row;
      for (int c = 0; c < inst.num_cards; ++c) {
        if (inst.router_card(r, c) == 0) continue;
        for (int p = 0; p < inst.num_ports; ++p) {
          if (inst.card_port(c, p) == 0) continue;
          for (int e = 0; e < inst.num_links; ++e) {
            const int net = inst.link_out(e, p) - inst.link_in(e, p);
            if (net != 0) row.Add(index.route(e, d), net);
          }
        }
      }
      const double rhs =
          r == demand.source ? 1.0 : (r == demand.target ? -1.0 : 0.0);
      model.AddConstraint(
          row.Build(Name(family::kConserve, fmt::format("d={},r={}", d, r)),
                    Sense::kEqual, rhs));
    }
  }
}

// Faulty per-port balance: the port itself is treated as the flow node.
void AddPortConservation(const NetworkInstance& inst,
                         const VariableIndex& index, MilpModel& model) {
  for (int d = 0; d < inst.num_demands(); ++d) {
    const Demand& demand = inst.demands[d];
    const int source_port = LegacyEndpointPort(inst, demand.source);
    const int target_port = LegacyEndpointPort(inst, demand.target);
    if (source_port < 0 || target_port < 0) {
      throw InvalidArgumentError(fmt::format(
          "legacy model: demand {} has an endpoint router with no ports", d));
    }
    model.AddMetadata(fmt::format("legacy.source_port[d={}]", d),
                      std::to_string(source_port));
    model.AddMetadata(fmt::format("legacy.target_port[d={}]", d),
                      std::to_string(target_port));
    for (int p = 0; p < inst.num_ports; ++p) {
      RowBuilder row;
      for (int e = 0; e < inst.num_links; ++e) {
        const int net = inst.link_out(e, p) - inst.link_in(e, p);
        if (net != 0) row.Add(index.route(e, d), net);
      }
      const double rhs =
          p == source_port ? 1.0 : (p == target_port ? -1.0 : 0.0);
      model.AddConstraint(
          row.Build(Name(family::kConservePort, fmt::format("d={},p={}", d, p)),
                    Sense::kEqual, rhs));
    }
  }
}

// sum_d V_d u_ed <= sum_k M_ek y_ek.
void AddCapacity(const NetworkInstance& inst, const VariableIndex& index,
                 MilpModel& model) {
  for (int e = 0; e < inst.num_links; ++e) {
    RowBuilder row;
    for (int d = 0; d < inst.num_demands(); ++d) {
      row.Add(index.route(e, d), inst.demands[d].volume);
    }
    for (int k = 0; k < inst.num_states; ++k) {
      row.Add(index.state(e, k), -inst.state_capacity(e, k));
    }
    model.AddConstraint(row.Build(Name(family::kCapacity, fmt::format("e={}", e)),
                                  Sense::kLessEqual, 0.0));
  }
}

// sum_e a_ep y_ek = sum_e b_ep y_ek for every port and state.
void AddPortSymmetry(const NetworkInstance& inst, const VariableIndex& index,
                     MilpModel& model) {
  for (int p = 0; p < inst.num_ports; ++p) {
    for (int k = 0; k < inst.num_states; ++k) {
      RowBuilder row;
      for (int e = 0; e < inst.num_links; ++e) {
        const int net = inst.link_out(e, p) - inst.link_in(e, p);
        if (net != 0) row.Add(index.state(e, k), net);
      }
      model.AddConstraint(
          row.Build(Name(family::kPortSymmetry, fmt::format("p={},k={}", p, k)),
                    Sense::kEqual, 0.0));
    }
  }
}

}  // namespace

std::string_view ToString(ModelKind kind) {
  return kind == ModelKind::kCorrected ? "corrected" : "legacy";
}

ModelKind ParseModelKind(std::string_view text) {
  if (text == "corrected") return ModelKind::kCorrected;
  if (text == "legacy") return ModelKind::kLegacy;
  throw InvalidArgumentError(fmt::format(
      "unknown model kind '{}' (expected corrected or legacy)", text));
}

std::vector<std::string_view> FamiliesOf(ModelKind kind) {
  if (kind == ModelKind::kCorrected) {
    return {family::kCardOut,  family::kCardIn,   family::kCardRouter,
            family::kOneState, family::kConserve, family::kCapacity,
            family::kPortSymmetry};
  }
  return {family::kCardOut,  family::kCardIn,       family::kCardRouter,
          family::kOneState, family::kConservePort, family::kCapacity};
}

int LegacyEndpointPort(const NetworkInstance& inst, int router) {
  for (int p = 0; p < inst.num_ports; ++p) {
    for (int c = 0; c < inst.num_cards; ++c) {
      if (inst.card_port(c, p) != 0 && inst.router_card(router, c) != 0) {
        return p;
      }
    }
  }
  return -1;
}

BuiltModel BuildCorrected(const NetworkInstance& inst) {
  RequireValidInstance(inst);
  BuiltModel built;
  built.index = AddVariables(inst, built.model);
  AddCardActivation(inst, built.index, built.model);
  AddRouterActivation(inst, built.index, built.model);
  AddOneState(inst, built.index, built.model);
  AddRouterConservation(inst, built.index, built.model);
  AddCapacity(inst, built.index, built.model);
  AddPortSymmetry(inst, built.index, built.model);
  built.model.AddMetadata("model", "corrected");
  return built;
}

BuiltModel BuildLegacy(const NetworkInstance& inst) {
  RequireValidInstance(inst);
  BuiltModel built;
  built.model.AddMetadata("model", "legacy");
  built.model.AddMetadata(
      "legacy.endpoint_convention",
      "lowest-indexed port owned by the demand's source/target router");
  built.index = AddVariables(inst, built.model);
  AddCardActivation(inst, built.index, built.model);
  AddRouterActivation(inst, built.index, built.model);
  AddOneState(inst, built.index, built.model);
  AddPortConservation(inst, built.index, built.model);
  AddCapacity(inst, built.index, built.model);
  return built;
}

BuiltModel BuildModel(const NetworkInstance& inst, ModelKind kind) {
  return kind == ModelKind::kCorrected ? BuildCorrected(inst)
                                       : BuildLegacy(inst);
}

double ObjectiveValue(const NetworkInstance& inst, const Solution& sol) {
  RequireMatchingShape(inst, sol);
  double value = 0.0;
  for (int e = 0; e < inst.num_links; ++e) {
    for (int k = 0; k < inst.num_states; ++k) {
      value += inst.state_power(e, k) * sol.link_state(e, k);
    }
  }
  for (int c = 0; c < inst.num_cards; ++c) {
    value += inst.card_power[c] * sol.card_on[c];
  }
  for (int r = 0; r < inst.num_routers; ++r) {
    value += inst.router_power[r] * sol.router_on[r];
  }
  return value;
}

std::vector<double> ToAssignment(const VariableIndex& index,
                                 const NetworkInstance& inst,
                                 const Solution& sol) {
  RequireMatchingShape(inst, sol);
  std::vector<double> values(index.size(), 0.0);
  for (int c = 0; c < inst.num_cards; ++c) {
    values[index.card(c).index] = sol.card_on[c];
  }
  for (int r = 0; r < inst.num_routers; ++r) {
    values[index.router(r).index] = sol.router_on[r];
  }
  for (int e = 0; e < inst.num_links; ++e) {
    for (int k = 0; k < inst.num_states; ++k) {
      values[index.state(e, k).index] = sol.link_state(e, k);
    }
    for (int d = 0; d < inst.num_demands(); ++d) {
      values[index.route(e, d).index] = sol.link_demand(e, d);
    }
  }
  return values;
}

Solution ToSolution(const NetworkInstance& inst, const VariableIndex& index,
                    std::span<const double> assignment) {
  if (static_cast<int>(assignment.size()) != index.size()) {
    throw InvalidArgumentError(
        fmt::format("assignment has {} values, layout needs {}",
                    assignment.size(), index.size()));
  }
  const auto bit = [&](VarId id) -> std::uint8_t {
    return assignment[id.index] >= 0.5 ? 1 : 0;
  };
  Solution sol = Solution::Zero(inst);
  for (int c = 0; c < inst.num_cards; ++c) sol.card_on[c] = bit(index.card(c));
  for (int r = 0; r < inst.num_routers; ++r) {
    sol.router_on[r] = bit(index.router(r));
  }
  for (int e = 0; e < inst.num_links; ++e) {
    for (int k = 0; k < inst.num_states; ++k) {
      sol.link_state(e, k) = bit(index.state(e, k));
    }
    for (int d = 0; d < inst.num_demands(); ++d) {
      sol.link_demand(e, d) = bit(index.route(e, d));
    }
  }
  sol.objective = ObjectiveValue(inst, sol);
  return sol;
}

}  // namespace greennet
