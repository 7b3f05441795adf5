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

#include "greennet/branch_and_bound.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <queue>
#include <thread>

#include <fmt/format.h>

#include "greennet/errors.h"
#include "greennet/simplex.h"

namespace greennet {

namespace {

// Bound comparisons against the incumbent.
constexpr double kPruneTolerance = 1e-9;

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
  double bound = -kInfinity;  // parent's LP objective
  int depth = 0;
  std::int64_t id = 0;
};

// Orders the priority queue so the top is the best-bound node, then the
// deepest, then the oldest.
struct WorseNode {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

// Binary to branch on, or -1 when every binary is within tolerance of 0/1.
int SelectBranchVariable(const MilpModel& model, const std::vector<double>& x,
                         const SolveConfig& config) {
  int best = -1;
  double best_score = config.integrality_tolerance;
  for (int j = 0; j < model.num_variables(); ++j) {
    if (model.variables()[j].kind != VarKind::kBinary) continue;
    const double frac = x[j] - std::floor(x[j]);
    const double score = std::min(frac, 1.0 - frac);
    if (score <= config.integrality_tolerance) continue;
    if (config.branch_rule == BranchRule::kLowestIndex) return j;
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

std::vector<LpResult> SolveBatch(const MilpModel& model,
                                 const std::vector<Node>& batch, int threads) {
  std::vector<LpResult> results(batch.size());
  const int workers =
      std::min<int>(threads, static_cast<int>(batch.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      results[i] = SolveLpRelaxation(model, batch[i].lower, batch[i].upper);
    }
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < batch.size(); i += workers) {
            results[i] =
                SolveLpRelaxation(model, batch[i].lower, batch[i].upper);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

}  // namespace

void SolveConfig::Validate() const {
  const auto check_tolerance = [](double tol, const char* what) {
    if (!(tol > 0.0 && tol <= 1e-2)) {
      throw InvalidArgumentError(
          fmt::format("{} must lie in (0, 1e-2], got {}", what, tol));
    }
  };
  check_tolerance(integrality_tolerance, "integrality tolerance");
  check_tolerance(feasibility_tolerance, "feasibility tolerance");
  if (node_limit <= 0) throw InvalidArgumentError("node limit must be positive");
  if (!(time_limit_seconds > 0.0)) {
    throw InvalidArgumentError("time limit must be positive");
  }
  if (batch_size <= 0) throw InvalidArgumentError("batch size must be positive");
  if (threads <= 0) throw InvalidArgumentError("thread count must be positive");
}

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kLimitHit:
      return "limit-hit";
  }
  return "unknown";
}

MilpSolution BranchAndBound(const MilpModel& model, const SolveConfig& config) {
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  const auto out_of_time = [&] {
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    return elapsed.count() > config.time_limit_seconds;
  };

  MilpSolution solution;
  std::priority_queue<Node, std::vector<Node>, WorseNode> open;
  std::int64_t next_id = 0;
  {
    Node root;
    root.lower.resize(model.num_variables());
    root.upper.resize(model.num_variables());
    for (int j = 0; j < model.num_variables(); ++j) {
      root.lower[j] = model.variables()[j].lower;
      root.upper[j] = model.variables()[j].upper;
    }
    root.id = next_id++;
    open.push(std::move(root));
  }

  bool limit_hit = false;
  while (!open.empty()) {
    // The top has the smallest bound; if it cannot improve, nothing can.
    if (open.top().bound >= solution.objective - kPruneTolerance) break;
    if (solution.nodes_explored >= config.node_limit || out_of_time()) {
      limit_hit = true;
      break;
    }
    const std::int64_t room = config.node_limit - solution.nodes_explored;
    std::vector<Node> batch;
    while (!open.empty() &&
           static_cast<std::int64_t>(batch.size()) <
               std::min<std::int64_t>(config.batch_size, room)) {
      Node node = open.top();
      open.pop();
      if (node.bound >= solution.objective - kPruneTolerance) continue;
      batch.push_back(std::move(node));
    }
    if (batch.empty()) continue;

    const std::vector<LpResult> results =
        SolveBatch(model, batch, config.threads);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++solution.nodes_explored;
      const Node& node = batch[i];
      const LpResult& lp = results[i];
      if (lp.status == LpStatus::kInfeasible) continue;
      if (lp.status == LpStatus::kUnbounded) {
        throw InvalidArgumentError(
            "LP relaxation is unbounded; every variable needs finite bounds");
      }
      if (lp.objective >= solution.objective - kPruneTolerance) continue;

      int branch = SelectBranchVariable(model, lp.values, config);
      if (branch < 0) {
        std::vector<double> candidate = lp.values;
        for (int j = 0; j < model.num_variables(); ++j) {
          if (model.variables()[j].kind == VarKind::kBinary) {
            candidate[j] = std::round(candidate[j]);
          }
        }
        const Evaluation eval =
            model.Evaluate(candidate, config.feasibility_tolerance);
        if (eval.feasible()) {
          if (eval.objective < solution.objective - kPruneTolerance) {
            solution.objective = eval.objective;
            solution.assignment = std::move(candidate);
          }
          continue;
        }
        // Rounding within the integrality tolerance broke a row; split on
        // the binary that moved furthest, if any did.
        double worst = 0.0;
        for (int j = 0; j < model.num_variables(); ++j) {
          if (model.variables()[j].kind != VarKind::kBinary) continue;
          const double moved = std::abs(lp.values[j] - candidate[j]);
          if (moved > worst && node.lower[j] != node.upper[j]) {
            worst = moved;
            branch = j;
          }
        }
        if (branch < 0) continue;
      }

      Node down{node.lower, node.upper, lp.objective, node.depth + 1,
                next_id++};
      down.upper[branch] = 0.0;
      Node up{node.lower, node.upper, lp.objective, node.depth + 1, next_id++};
      up.lower[branch] = 1.0;
      open.push(std::move(down));
      open.push(std::move(up));
    }
  }

  if (limit_hit) {
    solution.status = SolveStatus::kLimitHit;
    double bound = solution.objective;
    while (!open.empty()) {
      bound = std::min(bound, open.top().bound);
      open.pop();
    }
    solution.bound = bound;
  } else if (solution.has_incumbent()) {
    solution.status = SolveStatus::kOptimal;
    solution.bound = solution.objective;
  } else {
    solution.status = SolveStatus::kInfeasible;
    solution.bound = kInfinity;
  }
  return solution;
}

}  // namespace greennet
