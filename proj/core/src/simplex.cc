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

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "greennet/errors.h"

namespace greennet {

namespace {

// Tableau entries at or below this magnitude are never pivoted on.
constexpr double kPivotTolerance = 1e-10;
constexpr double kReducedCostTolerance = 1e-9;
constexpr double kPhaseOneTolerance = 1e-7;
constexpr double kVerifyTolerance = 1e-6;

// Dense tableau over structural, slack and artificial columns. Row i of the
// tableau is B^-1 times row i of [A | I | S], where S holds the sign of each
// artificial column.
class BoundedSimplex {
 public:
  BoundedSimplex(const MilpModel& model, std::span<const double> lower,
                 std::span<const double> upper)
      : model_(model), n_(model.num_variables()) {
    for (int i = 0; i < model.num_constraints(); ++i) {
      const auto& row = model.constraint(i);
      const bool vacuous = std::all_of(
          row.terms.begin(), row.terms.end(),
          [](const Term& t) { return t.coefficient == 0.0; });
      if (!vacuous) {
        rows_.push_back(i);
        continue;
      }
      const bool holds =
          (row.sense == Sense::kLessEqual && 0.0 <= row.rhs + 1e-9) ||
          (row.sense == Sense::kGreaterEqual && 0.0 >= row.rhs - 1e-9) ||
          (row.sense == Sense::kEqual && std::abs(row.rhs) <= 1e-9);
      if (!holds) trivially_infeasible_ = true;
    }
    m_ = static_cast<int>(rows_.size());
    cols_ = n_ + 2 * m_;

    lo_.assign(cols_, 0.0);
    hi_.assign(cols_, kInfinity);
    value_.assign(cols_, 0.0);
    row_of_.assign(cols_, -1);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = lower[j];
      hi_[j] = upper[j];
      if (std::isfinite(lo_[j])) {
        value_[j] = lo_[j];
      } else if (std::isfinite(hi_[j])) {
        value_[j] = hi_[j];
      }
    }

    tableau_.assign(static_cast<std::size_t>(m_) * cols_, 0.0);
    beta_.assign(m_, 0.0);
    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      const auto& row = model.constraint(rows_[i]);
      const int slack = n_ + i;
      switch (row.sense) {
        case Sense::kLessEqual:
          lo_[slack] = 0.0;
          hi_[slack] = kInfinity;
          break;
        case Sense::kGreaterEqual:
          lo_[slack] = -kInfinity;
          hi_[slack] = 0.0;
          break;
        case Sense::kEqual:
          lo_[slack] = 0.0;
          hi_[slack] = 0.0;
          break;
      }
      double residual = row.rhs;
      for (const Term& t : row.terms) {
        residual -= t.coefficient * value_[t.var.index];
      }
      const double sign = residual >= 0.0 ? 1.0 : -1.0;
      for (const Term& t : row.terms) at(i, t.var.index) = sign * t.coefficient;
      at(i, slack) = sign;
      const int artificial = n_ + m_ + i;
      at(i, artificial) = 1.0;
      basis_[i] = artificial;
      row_of_[artificial] = i;
      beta_[i] = std::abs(residual);
    }
  }

  LpResult Solve() {
    LpResult result;
    if (trivially_infeasible_) {
      result.status = LpStatus::kInfeasible;
      return result;
    }

    // Phase one: drive the artificial columns to zero.
    std::vector<double> cost(cols_, 0.0);
    for (int i = 0; i < m_; ++i) cost[n_ + m_ + i] = 1.0;
    if (!Iterate(cost)) {
      throw NumericalError("phase one reported an unbounded ray");
    }
    double infeasibility = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ + m_) infeasibility += beta_[i];
    }
    if (infeasibility > kPhaseOneTolerance) {
      result.status = LpStatus::kInfeasible;
      result.iterations = iterations_;
      return result;
    }

    // Phase two: artificials are pinned to zero and never re-enter.
    for (int i = 0; i < m_; ++i) {
      const int artificial = n_ + m_ + i;
      hi_[artificial] = 0.0;
      value_[artificial] = 0.0;
      if (row_of_[artificial] >= 0) beta_[row_of_[artificial]] = 0.0;
    }
    std::fill(cost.begin(), cost.end(), 0.0);
    for (int j = 0; j < n_; ++j) cost[j] = model_.objective()[j];
    result.iterations = iterations_;
    if (!Iterate(cost)) {
      result.status = LpStatus::kUnbounded;
      result.iterations = iterations_;
      return result;
    }

    result.status = LpStatus::kOptimal;
    result.iterations = iterations_;
    result.values.resize(n_);
    for (int j = 0; j < n_; ++j) {
      double v = row_of_[j] >= 0 ? beta_[row_of_[j]] : value_[j];
      result.values[j] = std::clamp(v, lo_[j], hi_[j]);
    }
    Verify(result.values);
    result.objective = model_.ObjectiveValue(result.values);
    return result;
  }

 private:
  double& at(int i, int j) {
    return tableau_[static_cast<std::size_t>(i) * cols_ + j];
  }

  // Returns false when the objective is unbounded below.
  bool Iterate(const std::vector<double>& cost) {
    const int max_iterations = 1000 + 50 * (cols_ + m_);
    std::vector<double> reduced(cols_);
    while (true) {
      if (++iterations_ > max_iterations) {
        throw NumericalError(fmt::format(
            "simplex exceeded {} iterations without converging",
            max_iterations));
      }

      for (int j = 0; j < cols_; ++j) reduced[j] = cost[j];
      for (int i = 0; i < m_; ++i) {
        const double cb = cost[basis_[i]];
        if (cb == 0.0) continue;
        const double* row = &tableau_[static_cast<std::size_t>(i) * cols_];
        for (int j = 0; j < cols_; ++j) reduced[j] -= cb * row[j];
      }

      // Bland: first improving nonbasic column.
      int entering = -1;
      double direction = 0.0;
      for (int j = 0; j < cols_; ++j) {
        if (row_of_[j] >= 0) continue;
        if (reduced[j] < -kReducedCostTolerance && value_[j] < hi_[j]) {
          entering = j;
          direction = 1.0;
          break;
        }
        if (reduced[j] > kReducedCostTolerance && value_[j] > lo_[j]) {
          entering = j;
          direction = -1.0;
          break;
        }
      }
      if (entering < 0) return true;

      double step = hi_[entering] - lo_[entering];  // bound flip
      int leaving_row = -1;
      for (int i = 0; i < m_; ++i) {
        const double alpha = at(i, entering);
        if (std::abs(alpha) <= kPivotTolerance) continue;
        const double rate = alpha * direction;
        const int b = basis_[i];
        double limit = kInfinity;
        if (rate > 0.0 && std::isfinite(lo_[b])) {
          limit = (beta_[i] - lo_[b]) / rate;
        } else if (rate < 0.0 && std::isfinite(hi_[b])) {
          limit = (hi_[b] - beta_[i]) / -rate;
        }
        if (!std::isfinite(limit)) continue;
        limit = std::max(limit, 0.0);
        const bool better = limit < step - 1e-12;
        const bool tie = !better && limit <= step + 1e-12 && leaving_row >= 0 &&
                         b < basis_[leaving_row];
        if (better || tie) {
          step = limit;
          leaving_row = i;
        }
      }
      if (!std::isfinite(step)) return false;

      for (int i = 0; i < m_; ++i) {
        beta_[i] -= direction * step * at(i, entering);
      }
      value_[entering] += direction * step;

      if (leaving_row < 0) {
        value_[entering] = direction > 0.0 ? hi_[entering] : lo_[entering];
        continue;
      }
      Pivot(leaving_row, entering, direction);
    }
  }

  void Pivot(int r, int entering, double direction) {
    const int leaving = basis_[r];
    const double rate = at(r, entering) * direction;
    value_[leaving] = rate > 0.0 ? lo_[leaving] : hi_[leaving];
    row_of_[leaving] = -1;

    const double pivot = at(r, entering);
    if (std::abs(pivot) <= kPivotTolerance) {
      throw NumericalError(fmt::format(
          "pivot magnitude {:.3g} below tolerance with no alternative",
          std::abs(pivot)));
    }
    double* prow = &tableau_[static_cast<std::size_t>(r) * cols_];
    for (int j = 0; j < cols_; ++j) prow[j] /= pivot;
    prow[entering] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &tableau_[static_cast<std::size_t>(i) * cols_];
      const double factor = row[entering];
      if (factor == 0.0) continue;
      for (int j = 0; j < cols_; ++j) row[j] -= factor * prow[j];
      row[entering] = 0.0;
    }
    basis_[r] = entering;
    row_of_[entering] = r;
    beta_[r] = value_[entering];
  }

  void Verify(const std::vector<double>& x) const {
    for (int j = 0; j < n_; ++j) {
      if (x[j] < lo_[j] - kVerifyTolerance || x[j] > hi_[j] + kVerifyTolerance) {
        throw NumericalError(
            fmt::format("simplex point leaves the bounds of variable {}", j));
      }
    }
    for (int i = 0; i < model_.num_constraints(); ++i) {
      const auto& row = model_.constraint(i);
      double lhs = 0.0;
      double scale = 1.0;
      for (const Term& t : row.terms) {
        lhs += t.coefficient * x[t.var.index];
        scale = std::max(scale, std::abs(t.coefficient * x[t.var.index]));
      }
      const double tol = kVerifyTolerance * std::max(scale, std::abs(row.rhs));
      const double slack = lhs - row.rhs;
      const bool ok = (row.sense == Sense::kLessEqual && slack <= tol) ||
                      (row.sense == Sense::kGreaterEqual && slack >= -tol) ||
                      (row.sense == Sense::kEqual && std::abs(slack) <= tol);
      if (!ok) {
        throw NumericalError(fmt::format(
            "simplex point violates row '{}' by {:.3g}", row.name, slack));
      }
    }
  }

  const MilpModel& model_;
  int n_;
  int m_ = 0;
  int cols_ = 0;
  bool trivially_infeasible_ = false;
  int iterations_ = 0;
  std::vector<int> rows_;  // model rows kept in the tableau
  std::vector<double> tableau_;
  std::vector<double> beta_;  // values of basic columns, by row
  std::vector<int> basis_;
  std::vector<int> row_of_;     // tableau row of a basic column, else -1
  std::vector<double> value_;   // values of nonbasic columns
  std::vector<double> lo_;
  std::vector<double> hi_;
};

}  // namespace

std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpResult SolveLpRelaxation(const MilpModel& model) {
  std::vector<double> lower(model.num_variables());
  std::vector<double> upper(model.num_variables());
  for (int j = 0; j < model.num_variables(); ++j) {
    lower[j] = model.variables()[j].lower;
    upper[j] = model.variables()[j].upper;
  }
  return SolveLpRelaxation(model, lower, upper);
}

LpResult SolveLpRelaxation(const MilpModel& model,
                           std::span<const double> lower,
                           std::span<const double> upper) {
  if (static_cast<int>(lower.size()) != model.num_variables() ||
      static_cast<int>(upper.size()) != model.num_variables()) {
    throw InvalidArgumentError("bound vectors must match the variable count");
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    if (lower[j] > upper[j]) {
      LpResult result;
      result.status = LpStatus::kInfeasible;
      return result;
    }
  }
  return BoundedSimplex(model, lower, upper).Solve();
}

}  // namespace greennet
