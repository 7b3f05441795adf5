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

#include "greennet/validator.h"

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

#include "greennet/errors.h"
#include "greennet/instance_io.h"

namespace greennet {

namespace {

// Net number of demand-d links leaving minus entering each router.
std::vector<int> RouterBalance(const NetworkInstance& inst,
                               const Topology& topo, const Solution& sol,
                               int d) {
  std::vector<int> net(inst.num_routers, 0);
  for (int e = 0; e < inst.num_links; ++e) {
    if (sol.link_demand(e, d) == 0) continue;
    ++net[topo.LinkTail(e)];
    --net[topo.LinkHead(e)];
  }
  return net;
}

bool Balanced(const NetworkInstance& inst, const std::vector<int>& net,
              int d) {
  const Demand& demand = inst.demands[d];
  for (int r = 0; r < inst.num_routers; ++r) {
    const int want = r == demand.source ? 1 : (r == demand.target ? -1 : 0);
    if (net[r] != want) return false;
  }
  return true;
}

// Follows unused links out of the stack's top router, cutting off a cycle
// whenever the walk returns to a router already on the stack. Stops once
// the walk reaches `stop`, or, when `stop` is -1, once the stack unwinds to
// its starting router.
void Walk(const Topology& topo, const std::vector<std::vector<int>>& out,
          std::vector<bool>& consumed, int start, int stop,
          std::vector<int>& stack_links,
          std::vector<std::vector<int>>& cycles) {
  std::vector<int> stack_routers{start};
  std::vector<int> position(out.size(), -1);
  position[start] = 0;
  int current = start;
  while (stop < 0 || current != stop) {
    int next_link = -1;
    for (const int e : out[current]) {
      if (!consumed[e]) {
        next_link = e;
        break;
      }
    }
    if (next_link < 0) {
      throw InvalidArgumentError(
          fmt::format("route walk stranded at router {}", current));
    }
    consumed[next_link] = true;
    const int next = topo.LinkHead(next_link);
    if (position[next] >= 0) {
      const int at = position[next];
      std::vector<int> cycle(stack_links.begin() + at, stack_links.end());
      cycle.push_back(next_link);
      cycles.push_back(std::move(cycle));
      stack_links.resize(at);
      for (std::size_t i = at + 1; i < stack_routers.size(); ++i) {
        position[stack_routers[i]] = -1;
      }
      stack_routers.resize(at + 1);
      if (stop < 0 && stack_links.empty()) return;
    } else {
      stack_links.push_back(next_link);
      position[next] = static_cast<int>(stack_routers.size());
      stack_routers.push_back(next);
    }
    current = next;
  }
}

}  // namespace

ValidationReport Check(const NetworkInstance& inst, const Solution& sol,
                       ModelKind kind) {
  const BuiltModel built = BuildModel(inst, kind);
  RequireMatchingShape(inst, sol);
  const std::vector<double> assignment = ToAssignment(built.index, inst, sol);
  const Evaluation eval = built.model.Evaluate(assignment);

  ValidationReport report;
  report.kind = kind;
  for (const auto name : FamiliesOf(kind)) report.families[std::string(name)];
  for (const Violation& v : eval.violations) {
    const LinearConstraint& row = built.model.constraint(v.constraint);
    report.families[std::string(ConstraintFamily(row.name))].push_back(
        {row.name, v.constraint, v.lhs, v.rhs, row.sense});
  }
  report.is_feasible = eval.feasible();
  report.objective = ObjectiveValue(inst, sol);

  const Topology topo = DeriveTopology(inst);
  report.cycles.resize(inst.num_demands());
  for (int d = 0; d < inst.num_demands(); ++d) {
    if (Balanced(inst, RouterBalance(inst, topo, sol, d), d)) {
      report.cycles[d] = ExtractPaths(inst, sol, d).cycles;
    }
  }
  return report;
}

DemandRoute ExtractPaths(const NetworkInstance& inst, const Solution& sol,
                         int d) {
  RequireValidInstance(inst);
  RequireMatchingShape(inst, sol);
  if (d < 0 || d >= inst.num_demands()) {
    throw InvalidArgumentError(fmt::format(
        "demand {} out of range [0, {})", d, inst.num_demands()));
  }
  const Topology topo = DeriveTopology(inst);
  const std::vector<int> net = RouterBalance(inst, topo, sol, d);
  const Demand& demand = inst.demands[d];
  for (int r = 0; r < inst.num_routers; ++r) {
    const int want = r == demand.source ? 1 : (r == demand.target ? -1 : 0);
    if (net[r] != want) {
      throw InvalidArgumentError(fmt::format(
          "demand {} is not conserved at router {}: net outflow {}, expected "
          "{}",
          d, r, net[r], want));
    }
  }

  std::vector<std::vector<int>> out(inst.num_routers);
  std::vector<bool> consumed(inst.num_links, true);
  for (int e = 0; e < inst.num_links; ++e) {
    if (sol.link_demand(e, d) == 0) continue;
    out[topo.LinkTail(e)].push_back(e);
    consumed[e] = false;
  }

  DemandRoute route;
  Walk(topo, out, consumed, demand.source, demand.target, route.path,
       route.cycles);
  for (int e = 0; e < inst.num_links; ++e) {
    if (consumed[e]) continue;
    std::vector<int> scratch;
    Walk(topo, out, consumed, topo.LinkTail(e), -1, scratch, route.cycles);
  }
  return route;
}

std::string FormatReport(const ValidationReport& report) {
  std::string out;
  out += fmt::format("model: {}\n", ToString(report.kind));
  out += fmt::format("feasible: {}\n", report.is_feasible ? "yes" : "no");
  out += fmt::format("objective: {}\n", report.objective);
  for (const auto& [name, violations] : report.families) {
    if (violations.empty()) {
      out += fmt::format("  {:<14} ok\n", name);
      continue;
    }
    out += fmt::format("  {:<14} {} violated\n", name, violations.size());
    for (const auto& v : violations) {
      out += fmt::format("    {}: lhs {} {} rhs {}\n", v.constraint, v.lhs,
                         SenseSymbol(v.sense), v.rhs);
    }
  }
  for (std::size_t d = 0; d < report.cycles.size(); ++d) {
    for (const auto& cycle : report.cycles[d]) {
      out += fmt::format("  demand {} carries cycle over links {}\n", d,
                         fmt::join(cycle, ","));
    }
  }
  return out;
}

std::string ReportToJson(const ValidationReport& report) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["model"] = ToString(report.kind);
  doc["is_feasible"] = report.is_feasible;
  doc["objective"] = report.objective;
  nlohmann::ordered_json families = nlohmann::ordered_json::object();
  for (const auto& [name, violations] : report.families) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
      list.push_back({{"constraint", v.constraint},
                      {"row", v.row},
                      {"lhs", v.lhs},
                      {"sense", SenseSymbol(v.sense)},
                      {"rhs", v.rhs}});
    }
    families[name] = std::move(list);
  }
  doc["families"] = std::move(families);
  doc["cycles"] = report.cycles;
  return doc.dump(2) + "\n";
}

}  // namespace greennet
