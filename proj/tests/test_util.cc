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

#include "test_util.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace greennet::testing {

BruteForceResult BruteForceBinary(const MilpModel& model) {
  const int n = model.num_variables();
  for (const Variable& v : model.variables()) {
    if (v.kind != VarKind::kBinary) {
      throw std::invalid_argument("brute force needs an all-binary model");
    }
  }
  if (n > 24) throw std::invalid_argument("too many variables to enumerate");
  BruteForceResult best;
  std::vector<double> x(n, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int j = 0; j < n; ++j) x[j] = (mask >> j) & 1U ? 1.0 : 0.0;
    // Test data are small integers, so a tight tolerance is exact here.
    bool ok = true;
    for (int i = 0; i < model.num_constraints() && ok; ++i) {
      const double lhs = model.RowActivity(i, x);
      const LinearConstraint& row = model.constraint(i);
      switch (row.sense) {
        case Sense::kLessEqual:
          ok = lhs <= row.rhs + 1e-9;
          break;
        case Sense::kGreaterEqual:
          ok = lhs >= row.rhs - 1e-9;
          break;
        case Sense::kEqual:
          ok = std::abs(lhs - row.rhs) <= 1e-9;
          break;
      }
    }
    if (!ok) continue;
    ++best.feasible_count;
    const double obj = model.ObjectiveValue(x);
    if (!best.feasible || obj < best.objective - 1e-12) {
      best.feasible = true;
      best.objective = obj;
      best.assignment = x;
    }
  }
  return best;
}

GenSpec RandomSmallSpec(std::uint64_t seed, int max_routers, int max_links,
                        int max_demands) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  const auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  GenSpec spec;
  spec.shape = Shape::kRandom;
  spec.seed = seed;
  spec.num_routers = uniform(2, max_routers);
  const int n = spec.num_routers;
  int budget = max_links - 2 * (n - 1);
  const int free_pairs = n * (n - 1) / 2 - (n - 1);
  spec.extra_edges = uniform(0, std::max(0, std::min(free_pairs, budget / 2)));
  budget -= 2 * spec.extra_edges;
  spec.one_way_links = budget > 0 && uniform(0, 3) == 0 ? 1 : 0;
  spec.max_cards_per_router = uniform(1, 2);

  const int states = uniform(1, 2);
  if (states == 1) {
    spec.costs.state_power = {static_cast<double>(uniform(1, 4))};
    spec.costs.state_capacity = {static_cast<double>(uniform(1, 8))};
  }
  spec.randomize_costs = uniform(0, 1) == 1;
  spec.max_state_power = 6;
  spec.max_state_capacity = 8;
  spec.costs.card_power = uniform(0, 3);
  spec.costs.router_power = uniform(0, 4);

  spec.random_demands = uniform(0, max_demands);
  spec.min_volume = 1;
  spec.max_volume = 4;
  return spec;
}

std::optional<ExternalResult> SolveWithHighs(const std::string& lp_path,
                                             bool relax) {
  const std::string command = std::string(GREENNET_PYTHON) + " " +
                              GREENNET_HIGHS_SCRIPT + " '" + lp_path + "'" +
                              (relax ? " --relax" : "") + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return std::nullopt;
  std::string output;
  char buffer[256];
  while (std::fgets(buffer, sizeof buffer, pipe) != nullptr) output += buffer;
  if (pclose(pipe) != 0) return std::nullopt;
  std::istringstream in(output);
  ExternalResult result;
  std::string key;
  while (in >> key) {
    if (key == "status") in >> result.status;
    if (key == "objective") in >> result.objective;
  }
  if (result.status.empty()) return std::nullopt;
  return result;
}

std::string TempPath(const std::string& stem) {
  static std::atomic<int> counter{0};
  const auto dir = std::filesystem::temp_directory_path();
  return (dir / ("greennet_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++) + "_" + stem))
      .string();
}

std::vector<std::string> FixturePaths() {
  std::vector<std::string> paths;
  for (const auto& entry :
       std::filesystem::directory_iterator(GREENNET_FIXTURE_DIR)) {
    if (entry.path().string().ends_with(".gni.json")) {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace greennet::testing
