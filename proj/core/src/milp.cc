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
#include <unordered_set>

#include <fmt/format.h>

#include "greennet/errors.h"

namespace greennet {

std::string_view SenseSymbol(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual:
      return "<=";
    case Sense::kEqual:
      return "=";
    case Sense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

std::string_view ConstraintFamily(std::string_view name) {
  const auto bracket = name.find('[');
  return bracket == std::string_view::npos ? name : name.substr(0, bracket);
}

VarId MilpModel::AddVariable(Variable variable) {
  if (std::isnan(variable.lower) || std::isnan(variable.upper)) {
    throw InvalidArgumentError(
        fmt::format("variable '{}' has a NaN bound", variable.name));
  }
  if (variable.lower > variable.upper) {
    throw InvalidArgumentError(
        fmt::format("variable '{}' has lower bound {} above upper bound {}",
                    variable.name, variable.lower, variable.upper));
  }
  if (variable.kind == VarKind::kBinary &&
      (variable.lower != 0.0 || variable.upper != 1.0)) {
    throw InvalidArgumentError(fmt::format(
        "binary variable '{}' must have bounds [0, 1]", variable.name));
  }
  variables_.push_back(std::move(variable));
  objective_.push_back(0.0);
  return VarId{num_variables() - 1};
}

void MilpModel::CheckVar(VarId var) const {
  if (var.index < 0 || var.index >= num_variables()) {
    throw InvalidArgumentError(fmt::format(
        "variable id {} out of range [0, {})", var.index, num_variables()));
  }
}

int MilpModel::AddConstraint(LinearConstraint constraint) {
  std::unordered_set<int> seen;
  for (const Term& term : constraint.terms) {
    CheckVar(term.var);
    if (!seen.insert(term.var.index).second) {
      throw InvalidArgumentError(
          fmt::format("constraint '{}' lists variable {} twice",
                      constraint.name, term.var.index));
    }
    if (!std::isfinite(term.coefficient)) {
      throw InvalidArgumentError(fmt::format(
          "constraint '{}' has a non-finite coefficient", constraint.name));
    }
  }
  if (!std::isfinite(constraint.rhs)) {
    throw InvalidArgumentError(fmt::format(
        "constraint '{}' has a non-finite right-hand side", constraint.name));
  }
  constraints_.push_back(std::move(constraint));
  return num_constraints() - 1;
}

void MilpModel::SetObjectiveCoefficient(VarId var, double coefficient) {
  CheckVar(var);
  if (!std::isfinite(coefficient)) {
    throw InvalidArgumentError("objective coefficient must be finite");
  }
  objective_[var.index] = coefficient;
}

void MilpModel::AddMetadata(std::string key, std::string value) {
  metadata_.emplace_back(std::move(key), std::move(value));
}

void MilpModel::CheckAssignment(std::span<const double> assignment) const {
  if (static_cast<int>(assignment.size()) != num_variables()) {
    throw InvalidArgumentError(
        fmt::format("assignment has {} values, model has {} variables",
                    assignment.size(), num_variables()));
  }
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (!std::isfinite(assignment[j])) {
      throw InvalidArgumentError(
          fmt::format("assignment value {} is not finite", j));
    }
  }
}

double MilpModel::ObjectiveValue(std::span<const double> assignment) const {
  CheckAssignment(assignment);
  double value = 0.0;
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    value += objective_[j] * assignment[j];
  }
  return value;
}

double MilpModel::RowActivity(int row,
                              std::span<const double> assignment) const {
  double lhs = 0.0;
  for (const Term& term : constraints_[row].terms) {
    lhs += term.coefficient * assignment[term.var.index];
  }
  return lhs;
}

Evaluation MilpModel::Evaluate(std::span<const double> assignment,
                               double tolerance) const {
  Evaluation eval;
  eval.objective = ObjectiveValue(assignment);
  for (int i = 0; i < num_constraints(); ++i) {
    const LinearConstraint& row = constraints_[i];
    const double lhs = RowActivity(i, assignment);
    const double slack = lhs - row.rhs;
    bool violated = false;
    switch (row.sense) {
      case Sense::kLessEqual:
        violated = slack > tolerance;
        break;
      case Sense::kGreaterEqual:
        violated = slack < -tolerance;
        break;
      case Sense::kEqual:
        violated = std::abs(slack) > tolerance;
        break;
    }
    if (violated) eval.violations.push_back({i, lhs, row.rhs, slack});
  }
  return eval;
}

}  // namespace greennet
