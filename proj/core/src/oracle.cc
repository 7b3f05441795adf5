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

#include "greennet/oracle.h"

#include <numeric>
#include <vector>

#include <fmt/format.h>

#include "greennet/errors.h"
#include "greennet/model_builder.h"

namespace greennet {

namespace {

using Path = std::vector<int>;  // links in travel order

void CollectPaths(const Topology& topo,
                  const std::vector<std::vector<int>>& out_links, int at,
                  int target, std::vector<bool>& visited, Path& current,
                  std::vector<Path>& paths) {
  if (at == target) {
    paths.push_back(current);
    return;
  }
  for (const int e : out_links[at]) {
    const int next = topo.LinkHead(e);
    if (visited[next]) continue;
    visited[next] = true;
    current.push_back(e);
    CollectPaths(topo, out_links, next, target, visited, current, paths);
    current.pop_back();
    visited[next] = false;
  }
}

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

struct StateClass {
  std::vector<int> links;
  bool forced_off = false;
};

// Links joined at a port (one leaving, one entering) must share a state.
std::vector<StateClass> StateClasses(const NetworkInstance& inst,
                                     const Topology& topo) {
  std::vector<int> parent(inst.num_links);
  std::iota(parent.begin(), parent.end(), 0);
  for (int p = 0; p < inst.num_ports; ++p) {
    const int out = topo.port_out_link[p];
    const int in = topo.port_in_link[p];
    if (out >= 0 && in >= 0) parent[Find(parent, out)] = Find(parent, in);
  }
  std::vector<int> class_of_root(inst.num_links, -1);
  std::vector<StateClass> classes;
  for (int e = 0; e < inst.num_links; ++e) {
    const int root = Find(parent, e);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of_root[root]].links.push_back(e);
  }
  for (int p = 0; p < inst.num_ports; ++p) {
    const int out = topo.port_out_link[p];
    const int in = topo.port_in_link[p];
    if ((out >= 0) == (in >= 0)) continue;
    const int lone = out >= 0 ? out : in;
    classes[class_of_root[Find(parent, lone)]].forced_off = true;
  }
  return classes;
}

// Multiplies counts, saturating just above `limit`.
std::int64_t BoundedProduct(std::int64_t a, std::int64_t b,
                            std::int64_t limit) {
  if (a == 0 || b == 0) return 0;
  if (a > (limit + 1) / b + 1) return limit + 1;
  return std::min(a * b, limit + 1);
}

}  // namespace

MilpSolution OracleSolve(const NetworkInstance& inst, std::int64_t limit) {
  RequireValidInstance(inst);
  const Topology topo = DeriveTopology(inst);
  const int R = inst.num_routers;
  const int C = inst.num_cards;
  const int E = inst.num_links;
  const int K = inst.num_states;
  const int D = inst.num_demands();

  std::vector<std::vector<int>> out_links(R);
  for (int e = 0; e < E; ++e) out_links[topo.LinkTail(e)].push_back(e);

  std::vector<std::vector<Path>> paths(D);
  for (int d = 0; d < D; ++d) {
    std::vector<bool> visited(R, false);
    visited[inst.demands[d].source] = true;
    Path current;
    CollectPaths(topo, out_links, inst.demands[d].source,
                 inst.demands[d].target, visited, current, paths[d]);
  }
  const std::vector<StateClass> classes = StateClasses(inst, topo);

  std::int64_t combinations = 1;
  for (const auto& options : paths) {
    combinations = BoundedProduct(combinations,
                                  static_cast<std::int64_t>(options.size()),
                                  limit);
  }
  for (const auto& cls : classes) {
    combinations = BoundedProduct(combinations, cls.forced_off ? 1 : K + 1,
                                  limit);
  }
  if (combinations > limit) {
    throw EnumerationLimitError(fmt::format(
        "oracle would enumerate more than {} combinations", limit));
  }

  MilpSolution result;
  if (combinations == 0) {
    result.status = SolveStatus::kInfeasible;
    result.bound = kInfinity;
    return result;
  }

  std::vector<int> path_choice(D, 0);
  std::vector<int> state_choice(classes.size(), 0);  // 0 = off, k+1 = state k
  std::vector<int> best_paths;
  std::vector<int> best_states;
  double best_cost = kInfinity;
  std::int64_t visited = 0;

  std::vector<double> load(E);
  std::vector<bool> routed(E);
  while (true) {
    std::fill(load.begin(), load.end(), 0.0);
    std::fill(routed.begin(), routed.end(), false);
    for (int d = 0; d < D; ++d) {
      for (const int e : paths[d][path_choice[d]]) {
        load[e] += inst.demands[d].volume;
        routed[e] = true;
      }
    }
    std::vector<bool> card_on(C, false);
    for (int e = 0; e < E; ++e) {
      if (!routed[e]) continue;
      card_on[topo.port_card[topo.link_tail_port[e]]] = true;
      card_on[topo.port_card[topo.link_head_port[e]]] = true;
    }
    std::vector<bool> router_on(R, false);
    double hardware_cost = 0.0;
    for (int c = 0; c < C; ++c) {
      if (!card_on[c]) continue;
      hardware_cost += inst.card_power[c];
      router_on[topo.card_router[c]] = true;
    }
    for (int r = 0; r < R; ++r) {
      if (router_on[r]) hardware_cost += inst.router_power[r];
    }

    std::fill(state_choice.begin(), state_choice.end(), 0);
    while (true) {
      ++visited;
      bool fits = true;
      double cost = hardware_cost;
      for (std::size_t i = 0; i < classes.size() && fits; ++i) {
        const int choice = state_choice[i];
        for (const int e : classes[i].links) {
          const double capacity =
              choice == 0 ? 0.0 : inst.state_capacity(e, choice - 1);
          if (load[e] > capacity + 1e-9) {
            fits = false;
            break;
          }
          if (choice > 0) cost += inst.state_power(e, choice - 1);
        }
      }
      if (fits && cost < best_cost - 1e-12) {
        best_cost = cost;
        best_paths = path_choice;
        best_states = state_choice;
      }
      // Next state combination.
      std::size_t i = 0;
      for (; i < classes.size(); ++i) {
        const int options = classes[i].forced_off ? 1 : K + 1;
        if (++state_choice[i] < options) break;
        state_choice[i] = 0;
      }
      if (i == classes.size()) break;
    }

    // Next path combination.
    int d = 0;
    for (; d < D; ++d) {
      if (++path_choice[d] < static_cast<int>(paths[d].size())) break;
      path_choice[d] = 0;
    }
    if (d == D) break;
  }

  result.nodes_explored = visited;
  if (best_cost == kInfinity) {
    result.status = SolveStatus::kInfeasible;
    result.bound = kInfinity;
    return result;
  }

  Solution sol = Solution::Zero(inst);
  for (int d = 0; d < D; ++d) {
    for (const int e : paths[d][best_paths[d]]) {
      sol.link_demand(e, d) = 1;
      sol.card_on[topo.port_card[topo.link_tail_port[e]]] = 1;
      sol.card_on[topo.port_card[topo.link_head_port[e]]] = 1;
    }
  }
  for (int c = 0; c < C; ++c) {
    if (sol.card_on[c]) sol.router_on[topo.card_router[c]] = 1;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (best_states[i] == 0) continue;
    for (const int e : classes[i].links) {
      sol.link_state(e, best_states[i] - 1) = 1;
    }
  }

  const VariableIndex index(inst);
  result.status = SolveStatus::kOptimal;
  result.assignment = ToAssignment(index, inst, sol);
  result.objective = best_cost;
  result.bound = best_cost;
  return result;
}

}  // namespace greennet
