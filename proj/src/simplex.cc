// Copyright 2026 The Authors.
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

#include "subrank/simplex.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace subrank {
namespace {

constexpr double kDriveOutTol = 1e-7;
constexpr double kSingularTol = 1e-12;

}  // namespace

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kPivotLimit:
      return "pivot limit";
  }
  return "unknown";
}

DenseSimplex::DenseSimplex(SimplexOptions options) : options_(options) {}

int DenseSimplex::AddColumn(double lower, double upper, double cost,
                            bool artificial) {
  const int j = static_cast<int>(columns_.size());
  columns_.push_back({lower, upper, cost, artificial});
  const bool upper_start = !std::isfinite(lower);
  at_upper_.push_back(upper_start);
  x_.push_back(upper_start ? upper : lower);
  basic_row_.push_back(-1);
  reduced_.push_back(0.0);
  costs_.push_back(artificial ? 0.0 : cost);
  for (auto& row : tableau_) row.push_back(0.0);
  return j;
}

int DenseSimplex::AddVariable(double lower, double upper, double cost) {
  if (has_basis_ || num_structural_ != static_cast<int>(columns_.size())) {
    std::abort();
  }
  if (!std::isfinite(lower) && !std::isfinite(upper)) std::abort();
  ++num_structural_;
  return AddColumn(lower, upper, cost, false);
}

int DenseSimplex::AddRow(std::span<const Term> terms, RowSense sense,
                         double rhs) {
  const int r = static_cast<int>(rows_.size());
  rows_.push_back({{terms.begin(), terms.end()}, sense, rhs});
  if (has_basis_) AppendRowToTableau(r);
  return r;
}

bool DenseSimplex::IsFixed(int j) const {
  return columns_[j].upper - columns_[j].lower <= options_.pivot_tol;
}

double DenseSimplex::NonbasicValue(int j) const {
  return at_upper_[j] ? columns_[j].upper : columns_[j].lower;
}

std::vector<double> DenseSimplex::OriginalRow(int r) const {
  const Row& row = rows_[r];
  std::vector<double> dense(columns_.size(), 0.0);
  for (const auto& [j, a] : row.terms) dense[j] += a;
  if (row.slack >= 0) dense[row.slack] = 1.0;
  if (row.artificial >= 0) dense[row.artificial] = row.artificial_sign;
  return dense;
}

namespace {

void SlackBounds(RowSense sense, double& lower, double& upper) {
  switch (sense) {
    case RowSense::kLessEqual:
      lower = 0.0;
      upper = kInfinity;
      break;
    case RowSense::kGreaterEqual:
      lower = -kInfinity;
      upper = 0.0;
      break;
    case RowSense::kEqual:
      lower = upper = 0.0;
      break;
  }
}

}  // namespace

void DenseSimplex::AppendRowToTableau(int r) {
  Row& row = rows_[r];
  double lower = 0.0;
  double upper = 0.0;
  SlackBounds(row.sense, lower, upper);
  row.slack = AddColumn(lower, upper, 0.0, false);
  std::vector<double> dense = OriginalRow(r);
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    const double coef = dense[basis_[i]];
    if (coef == 0.0) continue;
    const std::vector<double>& ti = tableau_[i];
    for (size_t k = 0; k < dense.size(); ++k) {
      if (ti[k] != 0.0) dense[k] -= coef * ti[k];
    }
    dense[basis_[i]] = 0.0;
  }
  double activity = 0.0;
  for (const auto& [j, a] : row.terms) activity += a * x_[j];
  x_[row.slack] = row.rhs - activity;
  basic_row_[row.slack] = static_cast<int>(basis_.size());
  basis_.push_back(row.slack);
  tableau_.push_back(std::move(dense));
}

void DenseSimplex::Pivot(int r, int j) {
  std::vector<double>& prow = tableau_[r];
  const double inv = 1.0 / prow[j];
  std::vector<int> nonzeros;
  for (size_t k = 0; k < prow.size(); ++k) {
    if (prow[k] == 0.0) continue;
    prow[k] *= inv;
    nonzeros.push_back(static_cast<int>(k));
  }
  prow[j] = 1.0;
  for (size_t i = 0; i < tableau_.size(); ++i) {
    if (static_cast<int>(i) == r) continue;
    std::vector<double>& row = tableau_[i];
    const double f = row[j];
    if (f == 0.0) continue;
    for (int k : nonzeros) row[k] -= f * prow[k];
    row[j] = 0.0;
  }
  const double f = reduced_[j];
  if (f != 0.0) {
    for (int k : nonzeros) reduced_[k] -= f * prow[k];
    reduced_[j] = 0.0;
  }
  basic_row_[basis_[r]] = -1;
  basis_[r] = j;
  basic_row_[j] = r;
  ++pivots_;
}

void DenseSimplex::ComputeReducedCosts(const std::vector<double>& costs) {
  reduced_ = costs;
  for (size_t i = 0; i < basis_.size(); ++i) {
    const double cb = costs[basis_[i]];
    if (cb == 0.0) continue;
    const std::vector<double>& row = tableau_[i];
    for (size_t k = 0; k < row.size(); ++k) reduced_[k] -= cb * row[k];
  }
  for (int b : basis_) reduced_[b] = 0.0;
}

LpStatus DenseSimplex::Primal(const std::vector<double>& costs) {
  ComputeReducedCosts(costs);
  const int num_columns = static_cast<int>(columns_.size());
  int degenerate_run = 0;
  while (true) {
    if (pivots_ >= options_.max_pivots) return LpStatus::kPivotLimit;
    const bool bland = degenerate_run > options_.degenerate_limit;
    int entering = -1;
    double best = 0.0;
    double dir = 0.0;
    for (int j = 0; j < num_columns; ++j) {
      if (basic_row_[j] >= 0 || IsFixed(j)) continue;
      const double d = reduced_[j];
      double score = 0.0;
      double candidate_dir = 0.0;
      if (!at_upper_[j] && d < -options_.optimality_tol) {
        score = -d;
        candidate_dir = 1.0;
      } else if (at_upper_[j] && d > options_.optimality_tol) {
        score = d;
        candidate_dir = -1.0;
      } else {
        continue;
      }
      if (entering < 0 || (!bland && score > best)) {
        entering = j;
        best = score;
        dir = candidate_dir;
        if (bland) break;
      }
    }
    if (entering < 0) return LpStatus::kOptimal;

    const Column& ec = columns_[entering];
    double theta = ec.upper - ec.lower;
    int leaving_row = -1;
    double leaving_alpha = 0.0;
    for (size_t i = 0; i < basis_.size(); ++i) {
      const double a = tableau_[i][entering] * dir;
      const int b = basis_[i];
      const Column& bc = columns_[b];
      double limit;
      if (a > options_.pivot_tol) {
        if (!std::isfinite(bc.lower)) continue;
        limit = (x_[b] - bc.lower) / a;
      } else if (a < -options_.pivot_tol) {
        if (!std::isfinite(bc.upper)) continue;
        limit = (bc.upper - x_[b]) / -a;
      } else {
        continue;
      }
      limit = std::max(limit, 0.0);
      bool take;
      if (leaving_row < 0) {
        take = limit < theta;
      } else if (limit < theta - 1e-12) {
        take = true;
      } else if (limit <= theta + 1e-12) {
        take = bland ? b < basis_[leaving_row]
                     : std::abs(a) > std::abs(leaving_alpha);
      } else {
        take = false;
      }
      if (take) {
        theta = limit;
        leaving_row = static_cast<int>(i);
        leaving_alpha = a;
      }
    }
    if (!std::isfinite(theta)) return LpStatus::kUnbounded;

    degenerate_run = theta <= 1e-12 ? degenerate_run + 1 : 0;
    const double step = dir * theta;
    if (step != 0.0) {
      x_[entering] += step;
      for (size_t i = 0; i < basis_.size(); ++i) {
        x_[basis_[i]] -= tableau_[i][entering] * step;
      }
    }
    if (leaving_row < 0) {
      at_upper_[entering] = !at_upper_[entering];
      x_[entering] = NonbasicValue(entering);
      ++pivots_;
      continue;
    }
    const int leaving = basis_[leaving_row];
    at_upper_[leaving] = leaving_alpha < 0.0;
    x_[leaving] = NonbasicValue(leaving);
    Pivot(leaving_row, entering);
  }
}

LpStatus DenseSimplex::Dual() {
  const int num_columns = static_cast<int>(columns_.size());
  while (true) {
    if (pivots_ >= options_.max_pivots) return LpStatus::kPivotLimit;
    int r = -1;
    double worst = options_.feasibility_tol;
    bool increase = false;
    for (size_t i = 0; i < basis_.size(); ++i) {
      const int b = basis_[i];
      const double below = columns_[b].lower - x_[b];
      const double above = x_[b] - columns_[b].upper;
      if (below > worst) {
        worst = below;
        r = static_cast<int>(i);
        increase = true;
      } else if (above > worst) {
        worst = above;
        r = static_cast<int>(i);
        increase = false;
      }
    }
    if (r < 0) return LpStatus::kOptimal;

    const std::vector<double>& row = tableau_[r];
    int entering = -1;
    double best_ratio = kInfinity;
    double best_alpha = 0.0;
    for (int j = 0; j < num_columns; ++j) {
      if (basic_row_[j] >= 0 || IsFixed(j)) continue;
      const double alpha = row[j];
      if (std::abs(alpha) <= options_.pivot_tol) continue;
      const double s = at_upper_[j] ? -1.0 : 1.0;
      if (increase ? alpha * s >= 0.0 : alpha * s <= 0.0) continue;
      const double ratio = std::max(0.0, reduced_[j] * s) / std::abs(alpha);
      if (ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 &&
           std::abs(alpha) > std::abs(best_alpha))) {
        entering = j;
        best_ratio = std::min(best_ratio, ratio);
        best_alpha = alpha;
      }
    }
    if (entering < 0) return LpStatus::kInfeasible;

    const int leaving = basis_[r];
    const double target =
        increase ? columns_[leaving].lower : columns_[leaving].upper;
    const double step = (x_[leaving] - target) / best_alpha;
    x_[entering] += step;
    for (size_t i = 0; i < basis_.size(); ++i) {
      x_[basis_[i]] -= tableau_[i][entering] * step;
    }
    at_upper_[leaving] = !increase;
    x_[leaving] = target;
    Pivot(r, entering);
  }
}

void DenseSimplex::DriveOutArtificials() {
  for (size_t r = 0; r < basis_.size(); ++r) {
    const int b = basis_[r];
    if (!columns_[b].artificial) continue;
    int entering = -1;
    double best = kDriveOutTol;
    for (size_t j = 0; j < columns_.size(); ++j) {
      if (basic_row_[j] >= 0 || columns_[j].artificial) continue;
      const double a = std::abs(tableau_[r][j]);
      if (a > best) {
        best = a;
        entering = static_cast<int>(j);
      }
    }
    if (entering < 0) continue;
    const double step = x_[b] / tableau_[r][entering];
    x_[entering] += step;
    for (size_t i = 0; i < basis_.size(); ++i) {
      x_[basis_[i]] -= tableau_[i][entering] * step;
    }
    x_[b] = 0.0;
    at_upper_[b] = false;
    Pivot(static_cast<int>(r), entering);
  }
}

LpStatus DenseSimplex::Solve() {
  columns_.resize(num_structural_);
  at_upper_.resize(num_structural_);
  x_.resize(num_structural_);
  basic_row_.assign(num_structural_, -1);
  reduced_.assign(num_structural_, 0.0);
  costs_.resize(num_structural_);
  tableau_.clear();
  basis_.clear();
  has_basis_ = false;
  for (int j = 0; j < num_structural_; ++j) {
    at_upper_[j] = !std::isfinite(columns_[j].lower);
    x_[j] = NonbasicValue(j);
  }

  bool needs_phase_one = false;
  for (Row& row : rows_) {
    double lower = 0.0;
    double upper = 0.0;
    SlackBounds(row.sense, lower, upper);
    row.slack = AddColumn(lower, upper, 0.0, false);
    row.artificial = -1;
    double activity = 0.0;
    for (const auto& [j, a] : row.terms) activity += a * x_[j];
    const double slack = row.rhs - activity;
    if (slack >= lower - options_.feasibility_tol &&
        slack <= upper + options_.feasibility_tol) {
      x_[row.slack] = slack;
      basis_.push_back(row.slack);
      continue;
    }
    const double clamped = std::clamp(slack, lower, upper);
    at_upper_[row.slack] = clamped == upper && std::isfinite(upper) &&
                           !(clamped == lower && std::isfinite(lower));
    x_[row.slack] = clamped;
    const double residual = slack - clamped;
    row.artificial_sign = residual > 0.0 ? 1.0 : -1.0;
    row.artificial = AddColumn(0.0, kInfinity, 0.0, true);
    x_[row.artificial] = std::abs(residual);
    basis_.push_back(row.artificial);
    needs_phase_one = true;
  }
  for (size_t r = 0; r < rows_.size(); ++r) {
    std::vector<double> dense = OriginalRow(static_cast<int>(r));
    const double coef = dense[basis_[r]];
    if (coef != 1.0) {
      for (double& v : dense) v /= coef;
    }
    tableau_.push_back(std::move(dense));
    basic_row_[basis_[r]] = static_cast<int>(r);
  }
  has_basis_ = true;

  if (needs_phase_one) {
    std::vector<double> phase_one(columns_.size(), 0.0);
    for (size_t j = 0; j < columns_.size(); ++j) {
      if (columns_[j].artificial) phase_one[j] = 1.0;
    }
    const LpStatus status = Primal(phase_one);
    if (status == LpStatus::kPivotLimit) return status;
    double infeasibility = 0.0;
    for (size_t j = 0; j < columns_.size(); ++j) {
      if (columns_[j].artificial) infeasibility += x_[j];
    }
    const double scale = 1.0 + static_cast<double>(rows_.size());
    if (infeasibility > options_.feasibility_tol * scale * 100.0) {
      has_basis_ = false;
      return LpStatus::kInfeasible;
    }
    for (size_t j = 0; j < columns_.size(); ++j) {
      if (!columns_[j].artificial) continue;
      columns_[j].upper = 0.0;
      if (basic_row_[j] < 0) x_[j] = 0.0;
    }
    DriveOutArtificials();
  }
  for (size_t j = 0; j < columns_.size(); ++j) {
    costs_[j] = columns_[j].artificial ? 0.0 : columns_[j].cost;
  }
  const LpStatus status = Primal(costs_);
  if (status != LpStatus::kOptimal) {
    if (status != LpStatus::kPivotLimit) has_basis_ = false;
    return status;
  }
  return Polish();
}

LpStatus DenseSimplex::Reoptimize() {
  if (!has_basis_) return Solve();
  LpStatus status = Dual();
  if (status == LpStatus::kOptimal) status = Primal(costs_);
  if (status != LpStatus::kOptimal) return status;
  return Polish();
}

bool DenseSimplex::Refactor() {
  const int m = static_cast<int>(rows_.size());
  const int num_columns = static_cast<int>(columns_.size());
  std::vector<std::vector<double>> original(m);
  for (int r = 0; r < m; ++r) original[r] = OriginalRow(r);
  // Gauss-Jordan on [B | I].
  std::vector<std::vector<double>> b(m, std::vector<double>(2 * m, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int r = 0; r < m; ++r) b[i][r] = original[i][basis_[r]];
    b[i][m + i] = 1.0;
  }
  for (int c = 0; c < m; ++c) {
    int pivot = c;
    for (int i = c + 1; i < m; ++i) {
      if (std::abs(b[i][c]) > std::abs(b[pivot][c])) pivot = i;
    }
    if (std::abs(b[pivot][c]) < kSingularTol) return false;
    std::swap(b[c], b[pivot]);
    const double inv = 1.0 / b[c][c];
    for (double& v : b[c]) v *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == c || b[i][c] == 0.0) continue;
      const double f = b[i][c];
      for (int k = c; k < 2 * m; ++k) b[i][k] -= f * b[c][k];
    }
  }
  std::vector<double> rhs(m);
  for (int i = 0; i < m; ++i) {
    rhs[i] = rows_[i].rhs;
    for (int j = 0; j < num_columns; ++j) {
      if (basic_row_[j] < 0 && original[i][j] != 0.0) {
        rhs[i] -= original[i][j] * x_[j];
      }
    }
  }
  for (int r = 0; r < m; ++r) {
    std::vector<double>& row = tableau_[r];
    std::fill(row.begin(), row.end(), 0.0);
    double value = 0.0;
    for (int i = 0; i < m; ++i) {
      const double f = b[r][m + i];
      if (f == 0.0) continue;
      value += f * rhs[i];
      for (int k = 0; k < num_columns; ++k) row[k] += f * original[i][k];
    }
    for (int other = 0; other < m; ++other) row[basis_[other]] = 0.0;
    row[basis_[r]] = 1.0;
    x_[basis_[r]] = value;
  }
  ComputeReducedCosts(costs_);
  return true;
}

LpStatus DenseSimplex::Polish() {
  if (MaxViolation() <= options_.feasibility_tol) return LpStatus::kOptimal;
  if (!Refactor()) return LpStatus::kOptimal;
  LpStatus status = Dual();
  if (status == LpStatus::kOptimal) status = Primal(costs_);
  return status;
}

double DenseSimplex::objective() const {
  double total = 0.0;
  for (int j = 0; j < num_structural_; ++j) {
    total += columns_[j].cost * x_[j];
  }
  return total;
}

double DenseSimplex::MaxViolation() const {
  double worst = 0.0;
  for (int j = 0; j < num_structural_; ++j) {
    worst = std::max(worst, columns_[j].lower - x_[j]);
    worst = std::max(worst, x_[j] - columns_[j].upper);
  }
  for (const Row& row : rows_) {
    double activity = 0.0;
    for (const auto& [j, a] : row.terms) activity += a * x_[j];
    switch (row.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, activity - row.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, row.rhs - activity);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(activity - row.rhs));
        break;
    }
  }
  return worst;
}

}  // namespace subrank
