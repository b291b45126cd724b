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
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace subrank {
namespace {

struct TestLp {
  int n = 0;
  std::vector<double> lower, upper, cost;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
};

std::vector<DenseSimplex::Term> Terms(const std::vector<double>& row) {
  std::vector<DenseSimplex::Term> terms;
  for (int j = 0; j < static_cast<int>(row.size()); ++j) {
    if (row[j] != 0.0) terms.push_back({j, row[j]});
  }
  return terms;
}

DenseSimplex Build(const TestLp& lp, size_t num_rows) {
  DenseSimplex simplex;
  for (int j = 0; j < lp.n; ++j) {
    simplex.AddVariable(lp.lower[j], lp.upper[j], lp.cost[j]);
  }
  for (size_t r = 0; r < num_rows; ++r) {
    simplex.AddRow(Terms(lp.rows[r]), lp.senses[r], lp.rhs[r]);
  }
  return simplex;
}

bool Feasible(const TestLp& lp, const std::vector<double>& x, double tol) {
  for (int j = 0; j < lp.n; ++j) {
    if (x[j] < lp.lower[j] - tol || x[j] > lp.upper[j] + tol) return false;
  }
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    const double a = std::inner_product(x.begin(), x.end(),
                                        lp.rows[r].begin(), 0.0);
    if (lp.senses[r] == RowSense::kLessEqual && a > lp.rhs[r] + tol) {
      return false;
    }
    if (lp.senses[r] == RowSense::kGreaterEqual && a < lp.rhs[r] - tol) {
      return false;
    }
    if (lp.senses[r] == RowSense::kEqual && std::abs(a - lp.rhs[r]) > tol) {
      return false;
    }
  }
  return true;
}

// Solves the square system by partial pivoting; nullopt when singular.
std::optional<std::vector<double>> SolveSquare(
    std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int i = c + 1; i < n; ++i) {
      if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
    }
    if (std::abs(a[p][c]) < 1e-10) return std::nullopt;
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      const double f = a[i][c] / a[c][c];
      for (int k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Minimum over all basic feasible points; requires a finite box.
std::optional<double> VertexOptimum(const TestLp& lp) {
  std::vector<std::vector<double>> planes;
  std::vector<double> values;
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    planes.push_back(lp.rows[r]);
    values.push_back(lp.rhs[r]);
  }
  for (int j = 0; j < lp.n; ++j) {
    std::vector<double> unit(lp.n, 0.0);
    unit[j] = 1.0;
    planes.push_back(unit);
    values.push_back(lp.lower[j]);
    planes.push_back(unit);
    values.push_back(lp.upper[j]);
  }
  const int p = static_cast<int>(planes.size());
  std::optional<double> best;
  std::vector<int> pick(lp.n);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int i : pick) {
      a.push_back(planes[i]);
      b.push_back(values[i]);
    }
    if (auto x = SolveSquare(a, b); x && Feasible(lp, *x, 1e-9)) {
      const double obj =
          std::inner_product(x->begin(), x->end(), lp.cost.begin(), 0.0);
      if (!best || obj < *best) best = obj;
    }
    int i = lp.n - 1;
    while (i >= 0 && pick[i] == p - lp.n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < lp.n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

TestLp RandomLp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  TestLp lp;
  lp.n = 2 + rng() % 3;
  const int m = 1 + rng() % 4;
  for (int j = 0; j < lp.n; ++j) {
    lp.lower.push_back(-static_cast<double>(rng() % 3));
    lp.upper.push_back(1.0 + rng() % 3);
    lp.cost.push_back(coef(rng));
  }
  for (int r = 0; r < m; ++r) {
    std::vector<double> row(lp.n);
    for (double& v : row) v = coef(rng);
    lp.rows.push_back(row);
    const int s = rng() % 5;
    lp.senses.push_back(s < 2   ? RowSense::kLessEqual
                        : s < 4 ? RowSense::kGreaterEqual
                                : RowSense::kEqual);
    lp.rhs.push_back(coef(rng));
  }
  return lp;
}

TEST(DenseSimplexTest, TextbookExample) {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18.
  DenseSimplex lp;
  const int x = lp.AddVariable(0, kInfinity, -3);
  const int y = lp.AddVariable(0, kInfinity, -5);
  lp.AddRow(std::vector<DenseSimplex::Term>{{x, 1}}, RowSense::kLessEqual, 4);
  lp.AddRow(std::vector<DenseSimplex::Term>{{y, 2}}, RowSense::kLessEqual, 12);
  lp.AddRow(std::vector<DenseSimplex::Term>{{x, 3}, {y, 2}},
            RowSense::kLessEqual, 18);
  ASSERT_EQ(lp.Solve(), LpStatus::kOptimal);
  EXPECT_NEAR(lp.objective(), -36.0, 1e-9);
  EXPECT_NEAR(lp.value(x), 2.0, 1e-9);
  EXPECT_NEAR(lp.value(y), 6.0, 1e-9);
}

TEST(DenseSimplexTest, DetectsInfeasibleAndUnbounded) {
  DenseSimplex infeasible;
  const int x = infeasible.AddVariable(0, 1, 1);
  infeasible.AddRow(std::vector<DenseSimplex::Term>{{x, 1}},
                    RowSense::kGreaterEqual, 2);
  EXPECT_EQ(infeasible.Solve(), LpStatus::kInfeasible);

  DenseSimplex unbounded;
  const int u = unbounded.AddVariable(0, kInfinity, -1);
  const int v = unbounded.AddVariable(0, kInfinity, 0);
  unbounded.AddRow(std::vector<DenseSimplex::Term>{{u, 1}, {v, -1}},
                   RowSense::kLessEqual, 1);
  EXPECT_EQ(unbounded.Solve(), LpStatus::kUnbounded);
}

TEST(DenseSimplexTest, MatchesVertexEnumeration) {
  std::mt19937_64 rng(11);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const TestLp lp = RandomLp(rng);
    DenseSimplex simplex = Build(lp, lp.rows.size());
    const LpStatus status = simplex.Solve();
    const std::optional<double> expected = VertexOptimum(lp);
    if (!expected) {
      EXPECT_EQ(status, LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ++feasible;
    ASSERT_EQ(status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(simplex.objective(), *expected, 1e-7) << "trial " << trial;
    EXPECT_TRUE(Feasible(lp, simplex.values(), 1e-8));
    EXPECT_LE(simplex.MaxViolation(), 1e-8);
  }
  EXPECT_GT(feasible, 100);
}

TEST(DenseSimplexTest, WarmStartMatchesColdSolve) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const TestLp lp = RandomLp(rng);
    DenseSimplex warm = Build(lp, 0);
    LpStatus status = warm.Solve();
    for (size_t r = 0; r < lp.rows.size(); ++r) {
      if (status != LpStatus::kOptimal) break;
      warm.AddRow(Terms(lp.rows[r]), lp.senses[r], lp.rhs[r]);
      status = warm.Reoptimize();
    }
    DenseSimplex cold = Build(lp, lp.rows.size());
    const LpStatus cold_status = cold.Solve();
    ASSERT_EQ(status, cold_status) << "trial " << trial;
    if (status == LpStatus::kOptimal) {
      EXPECT_NEAR(warm.objective(), cold.objective(), 1e-7);
      EXPECT_LE(warm.MaxViolation(), 1e-8);
    }
  }
}

TEST(DenseSimplexTest, AssignmentPolytopeHasIntegralOptimum) {
  std::mt19937_64 rng(13);
  const int n = 5;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (auto& row : cost) {
      for (double& c : row) c = static_cast<double>(rng() % 10);
    }
    DenseSimplex lp;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) lp.AddVariable(0, 1, cost[i][j]);
    }
    for (int i = 0; i < n; ++i) {
      std::vector<DenseSimplex::Term> row_terms, col_terms;
      for (int j = 0; j < n; ++j) {
        row_terms.push_back({i * n + j, 1});
        col_terms.push_back({j * n + i, 1});
      }
      lp.AddRow(row_terms, RowSense::kEqual, 1);
      lp.AddRow(col_terms, RowSense::kEqual, 1);
    }
    ASSERT_EQ(lp.Solve(), LpStatus::kOptimal);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = kInfinity;
    do {
      double total = 0.0;
      for (int i = 0; i < n; ++i) total += cost[i][perm[i]];
      best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_NEAR(lp.objective(), best, 1e-8);
  }
}

TEST(DenseSimplexTest, FreeBelowVariable) {
  // x in (-inf, 3], minimize -x subject to x + y >= -1 with y in [0, 1].
  DenseSimplex lp;
  const int x = lp.AddVariable(-kInfinity, 3, -1);
  const int y = lp.AddVariable(0, 1, 0);
  lp.AddRow(std::vector<DenseSimplex::Term>{{x, 1}, {y, 1}},
            RowSense::kGreaterEqual, -1);
  ASSERT_EQ(lp.Solve(), LpStatus::kOptimal);
  EXPECT_NEAR(lp.value(x), 3.0, 1e-9);
}

}  // namespace
}  // namespace subrank
