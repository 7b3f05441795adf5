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

#include "greennet/generators.h"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "greennet/errors.h"

namespace greennet {

namespace {

void CheckTemplate(const CostTemplate& costs) {
  if (costs.state_power.size() != costs.state_capacity.size()) {
    throw InvalidArgumentError(
        "cost template needs one capacity per state power");
  }
}

// One card per router, ports and links per edge as documented on
// GenerateLine.
NetworkInstance BuildChain(int n, bool closed, std::vector<Demand> demands,
                           const CostTemplate& costs) {
  if (n < 2) {
    throw InvalidArgumentError(
        fmt::format("need at least 2 routers, got {}", n));
  }
  CheckTemplate(costs);
  NetworkBuilder builder(static_cast<int>(costs.state_power.size()));
  std::vector<int> card(n);
  for (int r = 0; r < n; ++r) {
    builder.AddRouter(costs.router_power);
    card[r] = builder.AddCard(r, costs.card_power);
  }
  const int edges = closed ? n : n - 1;
  for (int i = 0; i < edges; ++i) {
    const int a = i;
    const int b = (i + 1) % n;
    const int port_a = builder.AddPort(card[a]);
    const int port_b = builder.AddPort(card[b]);
    builder.AddLink(port_a, port_b, costs.state_power, costs.state_capacity);
    builder.AddLink(port_b, port_a, costs.state_power, costs.state_capacity);
  }
  for (const Demand& d : demands) builder.AddDemand(d);
  return builder.Build();
}

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

int NetworkBuilder::AddRouter(double power) {
  router_power_.push_back(power);
  return static_cast<int>(router_power_.size()) - 1;
}

int NetworkBuilder::AddCard(int router, double power) {
  if (router < 0 || router >= static_cast<int>(router_power_.size())) {
    throw InvalidArgumentError(fmt::format("no router {}", router));
  }
  card_router_.push_back(router);
  card_power_.push_back(power);
  return static_cast<int>(card_router_.size()) - 1;
}

int NetworkBuilder::AddPort(int card) {
  if (card < 0 || card >= static_cast<int>(card_router_.size())) {
    throw InvalidArgumentError(fmt::format("no card {}", card));
  }
  port_card_.push_back(card);
  return static_cast<int>(port_card_.size()) - 1;
}

int NetworkBuilder::AddLink(int out_port, int in_port,
                            std::vector<double> power,
                            std::vector<double> capacity) {
  const int ports = static_cast<int>(port_card_.size());
  if (out_port < 0 || out_port >= ports || in_port < 0 || in_port >= ports) {
    throw InvalidArgumentError(
        fmt::format("link endpoints {} -> {} out of range", out_port, in_port));
  }
  if (static_cast<int>(power.size()) != num_states_ ||
      static_cast<int>(capacity.size()) != num_states_) {
    throw InvalidArgumentError(
        fmt::format("link state rows need {} entries", num_states_));
  }
  links_.push_back({out_port, in_port, std::move(power), std::move(capacity)});
  return static_cast<int>(links_.size()) - 1;
}

NetworkInstance NetworkBuilder::Build() const {
  NetworkInstance inst;
  inst.num_routers = static_cast<int>(router_power_.size());
  inst.num_cards = static_cast<int>(card_router_.size());
  inst.num_ports = static_cast<int>(port_card_.size());
  inst.num_links = static_cast<int>(links_.size());
  inst.num_states = num_states_;
  inst.card_port = BinaryMatrix(inst.num_cards, inst.num_ports);
  inst.router_card = BinaryMatrix(inst.num_routers, inst.num_cards);
  inst.link_out = BinaryMatrix(inst.num_links, inst.num_ports);
  inst.link_in = BinaryMatrix(inst.num_links, inst.num_ports);
  inst.state_power = RealMatrix(inst.num_links, inst.num_states);
  inst.state_capacity = RealMatrix(inst.num_links, inst.num_states);
  for (int p = 0; p < inst.num_ports; ++p) inst.card_port(port_card_[p], p) = 1;
  for (int c = 0; c < inst.num_cards; ++c) {
    inst.router_card(card_router_[c], c) = 1;
  }
  for (int e = 0; e < inst.num_links; ++e) {
    inst.link_out(e, links_[e].out_port) = 1;
    inst.link_in(e, links_[e].in_port) = 1;
    for (int k = 0; k < num_states_; ++k) {
      inst.state_power(e, k) = links_[e].power[k];
      inst.state_capacity(e, k) = links_[e].capacity[k];
    }
  }
  inst.card_power = card_power_;
  inst.router_power = router_power_;
  inst.demands = demands_;
  return inst;
}

NetworkInstance GenerateLine(int n, std::vector<Demand> demands,
                             const CostTemplate& costs) {
  return BuildChain(n, false, std::move(demands), costs);
}

NetworkInstance GenerateRing(int n, std::vector<Demand> demands,
                             const CostTemplate& costs) {
  return BuildChain(n, true, std::move(demands), costs);
}

NetworkInstance CanonicalInstance() {
  return GenerateLine(2, {Demand{0, 1, 1.0}});
}

std::string_view ToString(Shape shape) {
  switch (shape) {
    case Shape::kLine:
      return "line";
    case Shape::kRing:
      return "ring";
    case Shape::kRandom:
      return "random";
  }
  return "unknown";
}

Shape ParseShape(std::string_view text) {
  for (const auto shape : {Shape::kLine, Shape::kRing, Shape::kRandom}) {
    if (text == ToString(shape)) return shape;
  }
  throw InvalidArgumentError(fmt::format(
      "unknown shape '{}' (expected line, ring or random)", text));
}

NetworkInstance Generate(const GenSpec& spec) {
  if (spec.num_routers < 2) {
    throw InvalidArgumentError(
        fmt::format("need at least 2 routers, got {}", spec.num_routers));
  }
  if (spec.random_demands < 0 || spec.extra_edges < 0 ||
      spec.one_way_links < 0) {
    throw InvalidArgumentError("generator counts must be nonnegative");
  }
  if (spec.random_demands > 0 &&
      (spec.min_volume < 1 || spec.min_volume > spec.max_volume)) {
    throw InvalidArgumentError(
        fmt::format("volume range [{}, {}] is empty or not positive",
                    spec.min_volume, spec.max_volume));
  }
  CheckTemplate(spec.costs);
  std::mt19937_64 rng(spec.seed);

  NetworkInstance inst;
  if (spec.shape != Shape::kRandom) {
    inst = BuildChain(spec.num_routers, spec.shape == Shape::kRing,
                      spec.demands, spec.costs);
  } else {
    if (spec.max_cards_per_router < 1) {
      throw InvalidArgumentError("max_cards_per_router must be at least 1");
    }
    if (spec.randomize_costs &&
        (spec.max_state_power < 1 || spec.max_state_capacity < 1)) {
      throw InvalidArgumentError("random cost ranges must be at least 1");
    }
    const int n = spec.num_routers;
    const int states = static_cast<int>(spec.costs.state_power.size());
    NetworkBuilder builder(states);
    std::vector<std::vector<int>> cards(n);
    for (int r = 0; r < n; ++r) {
      builder.AddRouter(spec.costs.router_power);
      const int count = Uniform(rng, 1, spec.max_cards_per_router);
      for (int i = 0; i < count; ++i) {
        cards[r].push_back(builder.AddCard(r, spec.costs.card_power));
      }
    }

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> used;
    for (int r = 1; r < n; ++r) {
      const int parent = Uniform(rng, 0, r - 1);
      edges.emplace_back(parent, r);
      used.emplace(parent, r);
    }
    std::vector<std::pair<int, int>> spare;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!used.contains({a, b})) spare.emplace_back(a, b);
      }
    }
    if (spec.extra_edges > static_cast<int>(spare.size())) {
      throw InvalidArgumentError(fmt::format(
          "cannot add {} extra edges: only {} router pairs are free",
          spec.extra_edges, spare.size()));
    }
    std::shuffle(spare.begin(), spare.end(), rng);
    edges.insert(edges.end(), spare.begin(),
                 spare.begin() + spec.extra_edges);

    const auto state_rows = [&] {
      std::pair<std::vector<double>, std::vector<double>> rows{
          spec.costs.state_power, spec.costs.state_capacity};
      if (spec.randomize_costs) {
        for (int k = 0; k < states; ++k) {
          rows.first[k] = Uniform(rng, 1, spec.max_state_power);
          rows.second[k] = Uniform(rng, 1, spec.max_state_capacity);
        }
      }
      return rows;
    };
    const auto new_port = [&](int router) {
      const auto& own = cards[router];
      const int pick = Uniform(rng, 0, static_cast<int>(own.size()) - 1);
      return builder.AddPort(own[pick]);
    };

    for (const auto& [a, b] : edges) {
      const int port_a = new_port(a);
      const int port_b = new_port(b);
      auto forward = state_rows();
      builder.AddLink(port_a, port_b, std::move(forward.first),
                      std::move(forward.second));
      auto backward = state_rows();
      builder.AddLink(port_b, port_a, std::move(backward.first),
                      std::move(backward.second));
    }
    for (int i = 0; i < spec.one_way_links; ++i) {
      const int a = Uniform(rng, 0, n - 1);
      int b = Uniform(rng, 0, n - 2);
      if (b >= a) ++b;
      const int port_a = new_port(a);
      const int port_b = new_port(b);
      auto rows = state_rows();
      builder.AddLink(port_a, port_b, std::move(rows.first),
                      std::move(rows.second));
    }
    for (const Demand& d : spec.demands) builder.AddDemand(d);
    inst = builder.Build();
  }

  for (int i = 0; i < spec.random_demands; ++i) {
    Demand d;
    d.source = Uniform(rng, 0, inst.num_routers - 1);
    d.target = Uniform(rng, 0, inst.num_routers - 2);
    if (d.target >= d.source) ++d.target;
    d.volume = Uniform(rng, spec.min_volume, spec.max_volume);
    inst.demands.push_back(d);
  }
  return inst;
}

}  // namespace greennet
