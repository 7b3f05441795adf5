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

#ifndef GREENNET_NETWORK_H_
#define GREENNET_NETWORK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace greennet {

// Dense row-major matrix. Sizes in this library are tiny, so every incidence
// and state table is stored densely with (row, column) order matching the
// subscripts of the underlying model (e.g. card_port(c, p)).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[Offset(r, c)]; }
  const T& operator()(int r, int c) const { return data_[Offset(r, c)]; }

  std::span<T> row(int r) {
    return std::span<T>(data_).subspan(Offset(r, 0), cols_);
  }
  std::span<const T> row(int r) const {
    return std::span<const T>(data_).subspan(Offset(r, 0), cols_);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t Offset(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using BinaryMatrix = Matrix<std::uint8_t>;
using RealMatrix = Matrix<double>;

// An unsplittable traffic requirement between two routers.
struct Demand {
  int source = 0;
  int target = 0;
  double volume = 0.0;

  bool operator==(const Demand&) const = default;
};

// Problem data for one backbone network: a router -> card -> port hierarchy,
// directed links between ports, per-link energy states, and demands.
//
// The struct is a plain value. Nothing is checked on construction; call
// ValidateInstance() before handing an instance to a model builder.
struct NetworkInstance {
  int num_routers = 0;
  int num_cards = 0;
  int num_ports = 0;
  int num_links = 0;
  int num_states = 0;

  BinaryMatrix card_port;    // C x P: port p sits on card c.
  BinaryMatrix router_card;  // R x C: card c sits in router r.
  BinaryMatrix link_out;     // E x P: link e leaves port p.
  BinaryMatrix link_in;      // E x P: link e enters port p.

  RealMatrix state_power;     // E x K, watts drawn by link e in state k.
  RealMatrix state_capacity;  // E x K, throughput of link e in state k.
  std::vector<double> card_power;    // C, fixed watts for an active card.
  std::vector<double> router_power;  // R, fixed watts for an active router.

  std::vector<Demand> demands;

  int num_demands() const { return static_cast<int>(demands.size()); }

  bool operator==(const NetworkInstance&) const = default;
};

// Structural problems found in an instance. Each issue is a short sentence
// naming the offending indices, e.g. "port 0 belongs to no card".
struct InstanceReport {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
  std::string ToString() const;
};

// Checks dimensions, incidence invariants (ownership is a tree, each link has
// one tail and one head port on different routers, each port has at most one
// link per direction), numeric ranges, and demands. Never throws.
InstanceReport ValidateInstance(const NetworkInstance& inst);

// Throws InvalidArgumentError listing every issue if the instance is not
// well-formed.
void RequireValidInstance(const NetworkInstance& inst);

// Lookup tables derived from the incidence matrices. -1 marks "none".
// Requires a well-formed instance.
struct Topology {
  std::vector<int> port_card;      // P
  std::vector<int> card_router;    // C
  std::vector<int> link_tail_port; // E, the port link e leaves
  std::vector<int> link_head_port; // E, the port link e enters
  std::vector<int> port_out_link;  // P
  std::vector<int> port_in_link;   // P

  int PortRouter(int port) const { return card_router[port_card[port]]; }
  int LinkTail(int link) const { return PortRouter(link_tail_port[link]); }
  int LinkHead(int link) const { return PortRouter(link_head_port[link]); }
};

Topology DeriveTopology(const NetworkInstance& inst);

// Two opposite directed links joining the same pair of ports: `forward`
// leaves port_a and enters port_b, `backward` does the reverse.
struct EdgePair {
  int forward = 0;
  int backward = 0;
  int port_a = 0;
  int port_b = 0;

  bool operator==(const EdgePair&) const = default;
};

struct EdgePairing {
  std::vector<EdgePair> pairs;  // ordered by forward link index
  std::vector<int> unpaired;    // links with no reverse partner, ascending

  // Reverse partner of `link`, or -1 when the link is unpaired.
  int PartnerOf(int link) const;
};

EdgePairing DeriveEdgePairs(const NetworkInstance& inst);

// Links leaving and entering a router through any port of any of its cards.
// Both lists are ascending.
struct RouterLinks {
  std::vector<int> out_links;
  std::vector<int> in_links;
};

// Throws InvalidArgumentError when `router` is out of range.
RouterLinks GetRouterLinks(const NetworkInstance& inst, int router);

}  // namespace greennet

#endif  // GREENNET_NETWORK_H_
