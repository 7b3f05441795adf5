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

#include "greennet/simplex.h"

#include <cmath>
#include <functional>
#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "greennet/generators.h"
#include "greennet/lp_format.h"
#include "greennet/instance_io.h"
#include "greennet/model_builder.h"
#include "test_util.h"

namespace greennet {
namespace {

struct Halfspace {
  std::vector<double> a;
  Sense sense;
  double b;
};

// Solves the square system rows * x = rhs; nullopt when singular.
std::optional<std::vector<double>> SolveSquare(std::vector<std::vector<double>> m,
                                               std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) < 1e-9) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Minimum over all vertices of a bounded polyhedron. Every variable must
// have finite bounds. nullopt when the polyhedron is empty.
std::optional<double> VertexEnumerationMinimum(const MilpModel& model) {
  const int n = model.num_variables();
  std::vector<Halfspace> all;
  for (const auto& row : model.constraints()) {
    Halfspace h{std::vector<double>(n, 0.0), row.sense, row.rhs};
    for (const Term& t : row.terms) h.a[t.var.index] += t.coefficient;
    all.push_back(h);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> unit(n, 0.0);
    unit[j] = 1.0;
    all.push_back({unit, Sense::kGreaterEqual, model.variables()[j].lower});
    all.push_back({unit, Sense::kLessEqual, model.variables()[j].upper});
  }
  const auto feasible = [&](const std::vector<double>& x) {
    for (const Halfspace& h : all) {
      double lhs = 0.0;
      for (int j = 0; j < n; ++j) lhs += h.a[j] * x[j];
      if (h.sense != Sense::kGreaterEqual && lhs > h.b + 1e-7) return false;
      if (h.sense != Sense::kLessEqual && lhs < h.b - 1e-7) return false;
    }
    return true;
  };
  std::optional<double> best;
  const int total = static_cast<int>(all.size());
  std::vector<int> pick(n);
  // Iterate over all n-subsets of the halfspaces.
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == n) {
      std::vector<std::vector<double>> m;
      std::vector<double> rhs;
      for (int i : pick) {
        m.push_back(all[i].a);
        rhs.push_back(all[i].b);
      }
      const auto x = SolveSquare(m, rhs);
      if (!x || !feasible(*x)) return;
      const double obj = model.ObjectiveValue(*x);
      if (!best || obj < *best) best = obj;
      return;
    }
    for (int i = start; i < total; ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return best;
}

MilpModel RandomLp(std::mt19937_64& rng) {
  const auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  MilpModel m;
  const int n = uniform(1, 4);
  for (int j = 0; j < n; ++j) {
    const int lo = uniform(-2, 1);
    m.AddVariable(Variable::Continuous("x" + std::to_string(j), lo,
                                       lo + uniform(0, 3)));
    m.SetObjectiveCoefficient(VarId{j}, uniform(-3, 3));
  }
  const int rows = uniform(0, 4);
  for (int i = 0; i < rows; ++i) {
    LinearConstraint row{"r" + std::to_string(i), {},
                         static_cast<Sense>(uniform(0, 2)), 0.0};
    for (int j = 0; j < n; ++j) {
      const int c = uniform(-3, 3);
      if (c != 0) row.terms.push_back({VarId{j}, static_cast<double>(c)});
    }
    row.rhs = uniform(-3, 4);
    m.AddConstraint(std::move(row));
  }
  return m;
}

TEST(SolveLpRelaxation, BoundTight) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Binary("x0"));
  m.SetObjectiveCoefficient(x, 1.0);
  m.AddConstraint({"c", {{x, 1.0}}, Sense::kGreaterEqual, 0.5});
  const LpResult r = SolveLpRelaxation(m);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.5, 1e-12);
  EXPECT_NEAR(r.values[0], 0.5, 1e-12);
}

TEST(SolveLpRelaxation, NoDemandsGivesZero) {
  const BuiltModel built = BuildCorrected(GenerateRing(3));
  const LpResult r = SolveLpRelaxation(built.model);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, 0.0);
  for (const double v : r.values) EXPECT_EQ(v, 0.0);
}

TEST(SolveLpRelaxation, Infeasible) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Binary("x"));
  const VarId y = m.AddVariable(Variable::Binary("y"));
  m.AddConstraint({"c", {{x, 1.0}, {y, 1.0}}, Sense::kGreaterEqual, 3.0});
  EXPECT_EQ(SolveLpRelaxation(m).status, LpStatus::kInfeasible);
}

TEST(SolveLpRelaxation, Unbounded) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Continuous("x", 0, kInfinity));
  const VarId y = m.AddVariable(Variable::Continuous("y", 0, 1));
  m.SetObjectiveCoefficient(x, -1.0);
  m.AddConstraint({"c", {{x, 1.0}, {y, -1.0}}, Sense::kGreaterEqual, 0.0});
  EXPECT_EQ(SolveLpRelaxation(m).status, LpStatus::kUnbounded);
}

TEST(SolveLpRelaxation, FreeVariables) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Continuous("x", -kInfinity, kInfinity));
  m.SetObjectiveCoefficient(x, 1.0);
  m.AddConstraint({"c", {{x, 2.0}}, Sense::kGreaterEqual, -3.0});
  const LpResult r = SolveLpRelaxation(m);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -1.5, 1e-12);
}

// Beale's LP cycles under the textbook largest-coefficient rule.
TEST(SolveLpRelaxation, BealeCyclingExampleTerminates) {
  MilpModel m;
  std::vector<VarId> x;
  for (int j = 0; j < 4; ++j) {
    x.push_back(m.AddVariable(
        Variable::Continuous("x" + std::to_string(j), 0, kInfinity)));
  }
  const double cost[] = {-0.75, 20.0, -0.5, 6.0};
  for (int j = 0; j < 4; ++j) m.SetObjectiveCoefficient(x[j], cost[j]);
  m.AddConstraint({"r0",
                   {{x[0], 0.25}, {x[1], -8}, {x[2], -1}, {x[3], 9}},
                   Sense::kLessEqual, 0});
  m.AddConstraint({"r1",
                   {{x[0], 0.5}, {x[1], -12}, {x[2], -0.5}, {x[3], 3}},
                   Sense::kLessEqual, 0});
  m.AddConstraint({"r2", {{x[2], 1}}, Sense::kLessEqual, 1});
  const LpResult r = SolveLpRelaxation(m);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -1.25, 1e-9);
}

TEST(SolveLpRelaxation, BoundOverride) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Binary("x"));
  m.SetObjectiveCoefficient(x, 1.0);
  const std::vector<double> lo{1.0}, hi{1.0};
  const LpResult fixed = SolveLpRelaxation(m, lo, hi);
  ASSERT_EQ(fixed.status, LpStatus::kOptimal);
  EXPECT_EQ(fixed.objective, 1.0);
  const std::vector<double> crossed_lo{1.0}, crossed_hi{0.0};
  EXPECT_EQ(SolveLpRelaxation(m, crossed_lo, crossed_hi).status,
            LpStatus::kInfeasible);
}

TEST(SolveLpRelaxation, MatchesVertexEnumeration) {
  std::mt19937_64 rng(2024);
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const MilpModel m = RandomLp(rng);
    const auto expected = VertexEnumerationMinimum(m);
    const LpResult r = SolveLpRelaxation(m);
    if (!expected) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(r.objective, *expected, 1e-7) << "trial " << trial;
    EXPECT_TRUE(m.Evaluate(r.values).feasible()) << "trial " << trial;
    for (int j = 0; j < m.num_variables(); ++j) {
      EXPECT_GE(r.values[j], m.variables()[j].lower - 1e-9);
      EXPECT_LE(r.values[j], m.variables()[j].upper + 1e-9);
    }
    ++optimal;
  }
  // Both outcomes must actually be exercised.
  EXPECT_GT(optimal, 100);
  EXPECT_GT(infeasible, 20);
}

TEST(SolveLpRelaxation, CanonicalBoundBelowMilpOptimum) {
  const BuiltModel built = BuildCorrected(CanonicalInstance());
  const LpResult r = SolveLpRelaxation(built.model);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_LE(r.objective, 12.0 + 1e-9);
}

TEST(SolveLpRelaxation, CanonicalAgreesWithHighs) {
  const BuiltModel built = BuildCorrected(CanonicalInstance());
  const std::string path = testing::TempPath("canonical_relax.lp");
  WriteTextFile(path, ExportLp(built.model));
  const auto external = testing::SolveWithHighs(path, /*relax=*/true);
  if (!external) GTEST_SKIP() << "python3 with highspy not available";
  EXPECT_EQ(external->status, "optimal");
  EXPECT_NEAR(SolveLpRelaxation(built.model).objective, external->objective,
              1e-7);
}

TEST(SolveLpRelaxation, Deterministic) {
  const BuiltModel built = BuildCorrected(
      GenerateRing(4, {{0, 2, 3.0}, {1, 3, 1.0}}));
  const LpResult a = SolveLpRelaxation(built.model);
  const LpResult b = SolveLpRelaxation(built.model);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.iterations, b.iterations);
}

}  // namespace
}  // namespace greennet
