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

#include "greennet/milp.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "greennet/errors.h"

namespace greennet {
namespace {

MilpModel TwoVars() {
  MilpModel m;
  m.AddVariable(Variable::Binary("x_0"));
  m.AddVariable(Variable::Binary("x_1"));
  return m;
}

TEST(MilpModel, VariableIdsAreDense) {
  MilpModel m;
  EXPECT_EQ(m.AddVariable(Variable::Binary("x_0")).index, 0);
  EXPECT_EQ(m.AddVariable(Variable::Continuous("y", -1, 2)).index, 1);
  EXPECT_EQ(m.num_variables(), 2);
  EXPECT_EQ(m.objective().size(), 2u);
}

TEST(MilpModel, RejectsBadBounds) {
  MilpModel m;
  EXPECT_THROW(m.AddVariable(Variable::Continuous("y", 2, 1)),
               InvalidArgumentError);
  EXPECT_THROW(m.AddVariable(Variable::Continuous(
                   "y", std::numeric_limits<double>::quiet_NaN(), 1)),
               InvalidArgumentError);
  EXPECT_THROW(m.AddVariable({"b", VarKind::kBinary, 0, 2}),
               InvalidArgumentError);
  EXPECT_EQ(m.num_variables(), 0);
}

TEST(MilpModel, AddConstraintReturnsIndex) {
  MilpModel m = TwoVars();
  EXPECT_EQ(m.AddConstraint({"c", {{VarId{0}, 1}, {VarId{1}, 1}},
                             Sense::kLessEqual, 1}),
            0);
  EXPECT_EQ(m.AddConstraint({"d", {{VarId{0}, 1}}, Sense::kEqual, 0}), 1);
}

TEST(MilpModel, RejectsOutOfRangeVariable) {
  MilpModel m = TwoVars();
  EXPECT_THROW(m.AddConstraint({"c", {{VarId{5}, 1}}, Sense::kLessEqual, 1}),
               InvalidArgumentError);
  EXPECT_THROW(m.SetObjectiveCoefficient(VarId{2}, 1.0), InvalidArgumentError);
}

TEST(MilpModel, RejectsDuplicateVariable) {
  MilpModel m = TwoVars();
  EXPECT_THROW(m.AddConstraint({"c", {{VarId{0}, 1}, {VarId{0}, 2}},
                                Sense::kLessEqual, 1}),
               InvalidArgumentError);
}

TEST(MilpModel, RejectsNonFiniteData) {
  MilpModel m = TwoVars();
  EXPECT_THROW(
      m.AddConstraint({"c", {{VarId{0}, kInfinity}}, Sense::kLessEqual, 1}),
      InvalidArgumentError);
  EXPECT_THROW(
      m.AddConstraint({"c", {{VarId{0}, 1}}, Sense::kLessEqual, kInfinity}),
      InvalidArgumentError);
}

TEST(MilpModel, EmptyConstraintIsVacuous) {
  MilpModel m = TwoVars();
  m.AddConstraint({"empty", {}, Sense::kLessEqual, 1});
  EXPECT_TRUE(m.Evaluate(std::vector<double>{1, 1}).feasible());
}

TEST(Evaluate, ObjectiveOfSingleVariable) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Binary("x_0"));
  m.SetObjectiveCoefficient(x, 1.0);
  const Evaluation ev = m.Evaluate(std::vector<double>{1.0});
  EXPECT_DOUBLE_EQ(ev.objective, 1.0);
  EXPECT_TRUE(ev.feasible());
}

TEST(Evaluate, ViolationReportsSignedSlack) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Binary("x_0"));
  m.AddConstraint({"c", {{x, 1}}, Sense::kLessEqual, 0});
  const Evaluation ev = m.Evaluate(std::vector<double>{1.0});
  ASSERT_EQ(ev.violations.size(), 1u);
  EXPECT_EQ(ev.violations[0].constraint, 0);
  EXPECT_DOUBLE_EQ(ev.violations[0].slack, 1.0);
  EXPECT_DOUBLE_EQ(ev.violations[0].lhs, 1.0);
  EXPECT_DOUBLE_EQ(ev.violations[0].rhs, 0.0);
}

TEST(Evaluate, GreaterEqualViolationHasNegativeSlack) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Continuous("x", 0, 10));
  m.AddConstraint({"c", {{x, 1}}, Sense::kGreaterEqual, 3});
  const Evaluation ev = m.Evaluate(std::vector<double>{1.0});
  ASSERT_EQ(ev.violations.size(), 1u);
  EXPECT_DOUBLE_EQ(ev.violations[0].slack, -2.0);
}

TEST(Evaluate, EqualityWithinTolerance) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Continuous("x", 0, 2));
  m.AddConstraint({"c", {{x, 1}}, Sense::kEqual, 1});
  EXPECT_TRUE(
      m.Evaluate(std::vector<double>{1 + kFeasibilityTolerance / 2}).feasible());
  EXPECT_FALSE(
      m.Evaluate(std::vector<double>{1 + 2 * kFeasibilityTolerance}).feasible());
}

TEST(Evaluate, BoundViolationsAreNotRowViolations) {
  MilpModel m;
  const VarId x = m.AddVariable(Variable::Binary("x"));
  m.AddConstraint({"c", {{x, 1}}, Sense::kLessEqual, 5});
  EXPECT_TRUE(m.Evaluate(std::vector<double>{3.0}).feasible());
}

TEST(Evaluate, LengthMismatchAndNonFinite) {
  MilpModel m = TwoVars();
  EXPECT_THROW(m.Evaluate(std::vector<double>{1.0}), InvalidArgumentError);
  EXPECT_THROW(
      m.Evaluate(std::vector<double>{1.0, std::nan("")}), InvalidArgumentError);
}

TEST(ConstraintFamily, PrefixBeforeBracket) {
  EXPECT_EQ(ConstraintFamily("conserve[d=0,r=2]"), "conserve");
  EXPECT_EQ(ConstraintFamily("plain"), "plain");
}

TEST(SenseSymbol, AllSenses) {
  EXPECT_EQ(SenseSymbol(Sense::kLessEqual), "<=");
  EXPECT_EQ(SenseSymbol(Sense::kEqual), "=");
  EXPECT_EQ(SenseSymbol(Sense::kGreaterEqual), ">=");
}

}  // namespace
}  // namespace greennet
