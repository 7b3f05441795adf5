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

#include "greennet/network.h"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "greennet/errors.h"

namespace greennet {

namespace {

int ColumnSum(const BinaryMatrix& m, int col) {
  int sum = 0;
  for (int r = 0; r < m.rows(); ++r) sum += m(r, col);
  return sum;
}

int RowSum(const BinaryMatrix& m, int row) {
  int sum = 0;
  for (const auto v : m.row(row)) sum += v;
  return sum;
}

// Index of the single 1 in column `col`, or -1 when there is not exactly one.
int ColumnOwner(const BinaryMatrix& m, int col) {
  int owner = -1;
  for (int r = 0; r < m.rows(); ++r) {
    if (m(r, col) == 0) continue;
    if (owner >= 0) return -1;
    owner = r;
  }
  return owner;
}

int RowOwner(const BinaryMatrix& m, int row) {
  int owner = -1;
  for (int c = 0; c < m.cols(); ++c) {
    if (m(row, c) == 0) continue;
    if (owner >= 0) return -1;
    owner = c;
  }
  return owner;
}

std::string Plural(int n, const char* noun) {
  return fmt::format("{} {}{}", n, noun, n == 1 ? "" : "s");
}

void CheckShape(const char* what, int rows, int cols, int want_rows,
                int want_cols, std::vector<std::string>& issues) {
  if (rows != want_rows || cols != want_cols) {
    issues.push_back(fmt::format("{} has shape {}x{}, expected {}x{}", what,
                                 rows, cols, want_rows, want_cols));
  }
}

bool IsBinary(const BinaryMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto v : m.row(r)) {
      if (v > 1) return false;
    }
  }
  return true;
}

}  // namespace

std::string InstanceReport::ToString() const {
  std::string out;
  for (const auto& issue : issues) {
    out += issue;
    out += '\n';
  }
  return out;
}

InstanceReport ValidateInstance(const NetworkInstance& inst) {
  InstanceReport report;
  auto& issues = report.issues;

  const int R = inst.num_routers;
  const int C = inst.num_cards;
  const int P = inst.num_ports;
  const int E = inst.num_links;
  const int K = inst.num_states;
  if (R < 0 || C < 0 || P < 0 || E < 0 || K < 0) {
    issues.push_back("component counts must be nonnegative");
    return report;
  }

  CheckShape("card_port", inst.card_port.rows(), inst.card_port.cols(), C, P,
             issues);
  CheckShape("router_card", inst.router_card.rows(), inst.router_card.cols(),
             R, C, issues);
  CheckShape("link_out", inst.link_out.rows(), inst.link_out.cols(), E, P,
             issues);
  CheckShape("link_in", inst.link_in.rows(), inst.link_in.cols(), E, P,
             issues);
  CheckShape("state_power", inst.state_power.rows(), inst.state_power.cols(),
             E, K, issues);
  CheckShape("state_capacity", inst.state_capacity.rows(),
             inst.state_capacity.cols(), E, K, issues);
  if (static_cast<int>(inst.card_power.size()) != C) {
    issues.push_back(fmt::format("card_power has {} entries, expected {}",
                                 inst.card_power.size(), C));
  }
  if (static_cast<int>(inst.router_power.size()) != R) {
    issues.push_back(fmt::format("router_power has {} entries, expected {}",
                                 inst.router_power.size(), R));
  }
  // Every later check indexes the matrices; stop on shape errors.
  if (!issues.empty()) return report;

  for (const auto* m : {&inst.card_port, &inst.router_card, &inst.link_out,
                        &inst.link_in}) {
    if (!IsBinary(*m)) {
      issues.push_back("incidence matrices must hold only 0 and 1");
      return report;
    }
  }

  for (int p = 0; p < P; ++p) {
    const int n = ColumnSum(inst.card_port, p);
    if (n == 0) {
      issues.push_back(fmt::format("port {} belongs to no card", p));
    } else if (n > 1) {
      issues.push_back(
          fmt::format("port {} belongs to {}", p, Plural(n, "card")));
    }
  }
  for (int c = 0; c < C; ++c) {
    const int n = ColumnSum(inst.router_card, c);
    if (n == 0) {
      issues.push_back(fmt::format("card {} belongs to no router", c));
    } else if (n > 1) {
      issues.push_back(
          fmt::format("card {} belongs to {}", c, Plural(n, "router")));
    }
  }
  for (int e = 0; e < E; ++e) {
    const int n_out = RowSum(inst.link_out, e);
    if (n_out == 0) {
      issues.push_back(fmt::format("link {} outgoing from no port", e));
    } else if (n_out > 1) {
      issues.push_back(
          fmt::format("link {} outgoing from {}", e, Plural(n_out, "port")));
    }
    const int n_in = RowSum(inst.link_in, e);
    if (n_in == 0) {
      issues.push_back(fmt::format("link {} incoming to no port", e));
    } else if (n_in > 1) {
      issues.push_back(
          fmt::format("link {} incoming to {}", e, Plural(n_in, "port")));
    }
  }
  for (int p = 0; p < P; ++p) {
    const int n_out = ColumnSum(inst.link_out, p);
    if (n_out > 1) {
      issues.push_back(fmt::format("port {} has {} outgoing links", p, n_out));
    }
    const int n_in = ColumnSum(inst.link_in, p);
    if (n_in > 1) {
      issues.push_back(fmt::format("port {} has {} incoming links", p, n_in));
    }
  }

  // Self-loop checks need unambiguous ownership along the whole chain.
  for (int e = 0; e < E; ++e) {
    const int tail = RowOwner(inst.link_out, e);
    const int head = RowOwner(inst.link_in, e);
    if (tail < 0 || head < 0) continue;
    if (tail == head) {
      issues.push_back(
          fmt::format("link {} leaves and enters port {}", e, tail));
      continue;
    }
    const int tail_card = ColumnOwner(inst.card_port, tail);
    const int head_card = ColumnOwner(inst.card_port, head);
    if (tail_card < 0 || head_card < 0) continue;
    const int tail_router = ColumnOwner(inst.router_card, tail_card);
    const int head_router = ColumnOwner(inst.router_card, head_card);
    if (tail_router >= 0 && tail_router == head_router) {
      issues.push_back(fmt::format("link {} connects router {} to itself", e,
                                   tail_router));
    }
  }

  for (int e = 0; e < E; ++e) {
    for (int k = 0; k < K; ++k) {
      const double xi = inst.state_power(e, k);
      if (!std::isfinite(xi) || xi < 0.0) {
        issues.push_back(fmt::format(
            "link {} state {} power must be finite and nonnegative", e, k));
      }
      const double cap = inst.state_capacity(e, k);
      if (!std::isfinite(cap) || cap < 0.0) {
        issues.push_back(fmt::format(
            "link {} state {} capacity must be finite and nonnegative", e, k));
      }
    }
  }
  for (int c = 0; c < C; ++c) {
    const double w = inst.card_power[c];
    if (!std::isfinite(w) || w < 0.0) {
      issues.push_back(
          fmt::format("card {} power must be finite and nonnegative", c));
    }
  }
  for (int r = 0; r < R; ++r) {
    const double t = inst.router_power[r];
    if (!std::isfinite(t) || t < 0.0) {
      issues.push_back(
          fmt::format("router {} power must be finite and nonnegative", r));
    }
  }

  for (int d = 0; d < inst.num_demands(); ++d) {
    const Demand& dem = inst.demands[d];
    bool in_range = true;
    if (dem.source < 0 || dem.source >= R) {
      issues.push_back(fmt::format("demand {} source router {} out of range",
                                   d, dem.source));
      in_range = false;
    }
    if (dem.target < 0 || dem.target >= R) {
      issues.push_back(fmt::format("demand {} target router {} out of range",
                                   d, dem.target));
      in_range = false;
    }
    if (in_range && dem.source == dem.target) {
      issues.push_back(fmt::format(
          "demand {} has identical source and target router {}", d,
          dem.source));
    }
    if (!std::isfinite(dem.volume) || dem.volume <= 0.0) {
      issues.push_back(
          fmt::format("demand {} volume must be positive and finite", d));
    }
  }
  return report;
}

void RequireValidInstance(const NetworkInstance& inst) {
  const InstanceReport report = ValidateInstance(inst);
  if (!report.ok()) {
    throw InvalidArgumentError("malformed network instance:\n" +
                               report.ToString());
  }
}

Topology DeriveTopology(const NetworkInstance& inst) {
  Topology topo;
  topo.port_card.assign(inst.num_ports, -1);
  topo.card_router.assign(inst.num_cards, -1);
  topo.link_tail_port.assign(inst.num_links, -1);
  topo.link_head_port.assign(inst.num_links, -1);
  topo.port_out_link.assign(inst.num_ports, -1);
  topo.port_in_link.assign(inst.num_ports, -1);

  for (int p = 0; p < inst.num_ports; ++p) {
    topo.port_card[p] = ColumnOwner(inst.card_port, p);
  }
  for (int c = 0; c < inst.num_cards; ++c) {
    topo.card_router[c] = ColumnOwner(inst.router_card, c);
  }
  for (int e = 0; e < inst.num_links; ++e) {
    topo.link_tail_port[e] = RowOwner(inst.link_out, e);
    topo.link_head_port[e] = RowOwner(inst.link_in, e);
    if (topo.link_tail_port[e] >= 0) {
      topo.port_out_link[topo.link_tail_port[e]] = e;
    }
    if (topo.link_head_port[e] >= 0) {
      topo.port_in_link[topo.link_head_port[e]] = e;
    }
  }
  return topo;
}

int EdgePairing::PartnerOf(int link) const {
  for (const auto& pair : pairs) {
    if (pair.forward == link) return pair.backward;
    if (pair.backward == link) return pair.forward;
  }
  return -1;
}

EdgePairing DeriveEdgePairs(const NetworkInstance& inst) {
  const Topology topo = DeriveTopology(inst);
  EdgePairing result;
  std::vector<bool> paired(inst.num_links, false);
  for (int e1 = 0; e1 < inst.num_links; ++e1) {
    if (paired[e1]) continue;
    const int port_a = topo.link_tail_port[e1];
    const int port_b = topo.link_head_port[e1];
    // At most one link leaves port_b, so the partner is unique if it exists.
    const int e2 = port_b >= 0 ? topo.port_out_link[port_b] : -1;
    if (e2 >= 0 && e2 != e1 && !paired[e2] &&
        topo.link_head_port[e2] == port_a) {
      paired[e1] = paired[e2] = true;
      result.pairs.push_back({e1, e2, port_a, port_b});
    }
  }
  for (int e = 0; e < inst.num_links; ++e) {
    if (!paired[e]) result.unpaired.push_back(e);
  }
  return result;
}

RouterLinks GetRouterLinks(const NetworkInstance& inst, int router) {
  if (router < 0 || router >= inst.num_routers) {
    throw InvalidArgumentError(
        fmt::format("router {} out of range [0, {})", router,
                    inst.num_routers));
  }
  RouterLinks links;
  // Walks the g_rc * l_cp * a_ep (resp. b_ep) chain directly.
  for (int e = 0; e < inst.num_links; ++e) {
    int out = 0;
    int in = 0;
    for (int c = 0; c < inst.num_cards; ++c) {
      if (inst.router_card(router, c) == 0) continue;
      for (int p = 0; p < inst.num_ports; ++p) {
        if (inst.card_port(c, p) == 0) continue;
        out += inst.link_out(e, p);
        in += inst.link_in(e, p);
      }
    }
    if (out > 0) links.out_links.push_back(e);
    if (in > 0) links.in_links.push_back(e);
  }
  return links;
}

}  // namespace greennet
