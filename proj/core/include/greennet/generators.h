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

#ifndef GREENNET_GENERATORS_H_
#define GREENNET_GENERATORS_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "greennet/network.h"

namespace greennet {

// Per-link state table and fixed hardware costs applied to every generated
// component. The defaults are the project's canonical fixture: two states
// with (power, capacity) = (1, 1) and (5, 10), cards at 2 W, routers at 3 W.
struct CostTemplate {
  std::vector<double> state_power{1.0, 5.0};
  std::vector<double> state_capacity{1.0, 10.0};
  double card_power = 2.0;
  double router_power = 3.0;
};

// Incrementally assembles a well-formed hierarchy. Indices are handed out
// densely in call order.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(int num_states) : num_states_(num_states) {}

  int AddRouter(double power);
  int AddCard(int router, double power);
  int AddPort(int card);
  // Throws InvalidArgumentError unless both rows have num_states entries.
  int AddLink(int out_port, int in_port, std::vector<double> power,
              std::vector<double> capacity);
  void AddDemand(Demand demand) { demands_.push_back(demand); }

  NetworkInstance Build() const;

 private:
  struct Link {
    int out_port;
    int in_port;
    std::vector<double> power;
    std::vector<double> capacity;
  };

  int num_states_;
  std::vector<double> router_power_;
  std::vector<int> card_router_;
  std::vector<double> card_power_;
  std::vector<int> port_card_;
  std::vector<Link> links_;
  std::vector<Demand> demands_;
};

// Routers 0..n-1 in a path, one card each. Edge i joins router i and i+1
// through port 2i (on router i) and port 2i+1 (on router i+1); link 2i runs
// i -> i+1 and link 2i+1 runs back. Throws InvalidArgumentError if n < 2.
NetworkInstance GenerateLine(int n, std::vector<Demand> demands = {},
                             const CostTemplate& costs = {});

// GenerateLine plus a closing edge between router n-1 and router 0.
NetworkInstance GenerateRing(int n, std::vector<Demand> demands = {},
                             const CostTemplate& costs = {});

// The two-router line with a single unit demand from router 0 to router 1.
NetworkInstance CanonicalInstance();

enum class Shape { kLine, kRing, kRandom };

std::string_view ToString(Shape shape);
Shape ParseShape(std::string_view text);

struct GenSpec {
  Shape shape = Shape::kLine;
  int num_routers = 2;
  CostTemplate costs;
  std::vector<Demand> demands;

  // Extra demands drawn uniformly over ordered router pairs, with integer
  // volumes in [min_volume, max_volume].
  int random_demands = 0;
  int min_volume = 1;
  int max_volume = 4;
  std::uint64_t seed = 0;

  // Random shape only: a random spanning tree plus `extra_edges` distinct
  // router pairs, each edge being two opposite links on fresh ports placed
  // on a random card of each endpoint. `one_way_links` adds single directed
  // links with no reverse partner.
  int max_cards_per_router = 2;
  int extra_edges = 0;
  int one_way_links = 0;
  // Draw every link's per-state power in [1, max_state_power] and capacity
  // in [1, max_state_capacity] (integers) instead of using the template.
  bool randomize_costs = false;
  int max_state_power = 5;
  int max_state_capacity = 10;
};

// Deterministic for a fixed GenSpec. Throws InvalidArgumentError when it
// cannot be met (fewer than two routers, more extra edges than free router
// pairs, empty volume range, ...).
NetworkInstance Generate(const GenSpec& spec);

}  // namespace greennet

#endif  // GREENNET_GENERATORS_H_
