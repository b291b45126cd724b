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

// Dense bounded-variable simplex for small linear programs.
//
// Solves  min c'x  s.t.  rows (<=, >=, =)  and  l <= x <= u.
// Every variable needs at least one finite bound. Rows may be appended after
// a solve; Reoptimize() then restores feasibility with the dual simplex
// starting from the previous optimal basis.

#ifndef SUBRANK_SIMPLEX_H_
#define SUBRANK_SIMPLEX_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace subrank {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct SimplexOptions {
  double pivot_tol = 1e-9;
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  int64_t max_pivots = 2'000'000;
  // Consecutive degenerate pivots before switching from Dantzig pricing to
  // Bland's rule.
  int degenerate_limit = 50;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kPivotLimit };

std::string_view LpStatusName(LpStatus status);

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

class DenseSimplex {
 public:
  using Term = std::pair<int, double>;

  explicit DenseSimplex(SimplexOptions options = {});

  // Only before the first Solve().
  int AddVariable(double lower, double upper, double cost);
  // Allowed at any time. Terms reference structural variables.
  int AddRow(std::span<const Term> terms, RowSense sense, double rhs);

  // Two-phase primal simplex from the slack basis.
  LpStatus Solve();
  // Dual simplex from the last basis; falls back to Solve() when there is
  // none.
  LpStatus Reoptimize();

  int num_variables() const { return num_structural_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int64_t pivots() const { return pivots_; }

  double objective() const;
  double value(int variable) const { return x_[variable]; }
  std::vector<double> values() const {
    return {x_.begin(), x_.begin() + num_structural_};
  }

  // Largest violation of any row or bound by the current point, evaluated
  // against the original data rather than the tableau.
  double MaxViolation() const;

 private:
  struct Column {
    double lower;
    double upper;
    double cost;
    bool artificial;
  };
  struct Row {
    std::vector<Term> terms;
    RowSense sense;
    double rhs;
    int slack = -1;
    int artificial = -1;
    double artificial_sign = 1.0;
  };

  int AddColumn(double lower, double upper, double cost, bool artificial);
  bool IsFixed(int j) const;
  double NonbasicValue(int j) const;
  std::vector<double> OriginalRow(int r) const;
  void AppendRowToTableau(int r);
  void Pivot(int r, int j);
  void ComputeReducedCosts(const std::vector<double>& costs);
  LpStatus Primal(const std::vector<double>& costs);
  LpStatus Dual();
  void DriveOutArtificials();
  bool Refactor();
  LpStatus Polish();

  SimplexOptions options_;
  int num_structural_ = 0;
  std::vector<Column> columns_;
  std::vector<Row> rows_;
  bool has_basis_ = false;

  std::vector<std::vector<double>> tableau_;
  std::vector<int> basis_;      // basis_[r] = column basic in row r
  std::vector<int> basic_row_;  // -1 when nonbasic
  std::vector<bool> at_upper_;
  std::vector<double> x_;
  std::vector<double> reduced_;
  std::vector<double> costs_;
  int64_t pivots_ = 0;
};

}  // namespace subrank

#endif  // SUBRANK_SIMPLEX_H_
