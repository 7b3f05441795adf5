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

#ifndef GREENNET_MILP_H_
#define GREENNET_MILP_H_

#include <compare>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace greennet {

// Absolute tolerance for constraint checks and objective comparisons.
inline constexpr double kFeasibilityTolerance = 1e-6;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Dense, 0-based position in a model's variable table.
struct VarId {
  int index = 0;

  auto operator<=>(const VarId&) const = default;
};

enum class VarKind { kBinary, kContinuous };

struct Variable {
  std::string name;
  VarKind kind = VarKind::kContinuous;
  double lower = 0.0;
  double upper = kInfinity;

  static Variable Binary(std::string name) {
    return {std::move(name), VarKind::kBinary, 0.0, 1.0};
  }
  static Variable Continuous(std::string name, double lower, double upper) {
    return {std::move(name), VarKind::kContinuous, lower, upper};
  }
};

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

std::string_view SenseSymbol(Sense sense);

struct Term {
  VarId var;
  double coefficient = 0.0;
};

struct LinearConstraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

// Family prefix of a constraint name: "conserve[d=0,r=2]" -> "conserve".
std::string_view ConstraintFamily(std::string_view name);

struct Violation {
  int constraint = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  // lhs - rhs. Positive for a violated <= row, negative for a violated >=
  // row, either sign for an equality.
  double slack = 0.0;
};

struct Evaluation {
  double objective = 0.0;
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
};

// A minimization MILP over binary and bounded continuous variables. Building
// is single-writer; once built the model is only read.
class MilpModel {
 public:
  // Throws InvalidArgumentError on NaN bounds, lower > upper, or a binary
  // variable whose bounds are not [0, 1].
  VarId AddVariable(Variable variable);

  // Throws InvalidArgumentError on an out-of-range or repeated VarId, or a
  // non-finite coefficient or right-hand side. Returns the row index.
  int AddConstraint(LinearConstraint constraint);

  // Replaces the objective coefficient of `var`.
  void SetObjectiveCoefficient(VarId var, double coefficient);

  // Free-form key/value notes carried into exports (e.g. conventions a
  // builder had to pick).
  void AddMetadata(std::string key, std::string value);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }

  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(VarId id) const { return variables_[id.index]; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  const LinearConstraint& constraint(int row) const {
    return constraints_[row];
  }
  // Dense objective, one coefficient per variable.
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const {
    return metadata_;
  }

  double ObjectiveValue(std::span<const double> assignment) const;

  // Objective plus every row whose sense fails by more than `tolerance`.
  // Variable bounds are not checked here. Throws InvalidArgumentError on a
  // length mismatch or non-finite values.
  Evaluation Evaluate(std::span<const double> assignment,
                      double tolerance = kFeasibilityTolerance) const;

  // Left-hand side of one row.
  double RowActivity(int row, std::span<const double> assignment) const;

 private:
  void CheckVar(VarId var) const;
  void CheckAssignment(std::span<const double> assignment) const;

  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  std::vector<double> objective_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

}  // namespace greennet

#endif  // GREENNET_MILP_H_
