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

// Test-only oracles. Each one recomputes a quantity straight from its
// definition, sharing no code path with the library routine it checks.

#ifndef SUBRANK_TESTS_ORACLES_H_
#define SUBRANK_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "subrank/element_set.h"
#include "subrank/instance.h"
#include "subrank/submodular_function.h"

namespace subrank::oracle {

inline ElementSet FromMask(int n, uint32_t mask) {
  ElementSet s(n);
  for (int e = 0; e < n; ++e) {
    if (mask >> e & 1u) s.Insert(e);
  }
  return s;
}

// Cover time by evaluating f on each freshly built prefix.
inline int CoverTimeByPrefixes(const SubmodularFunction& f,
                               const std::vector<Element>& order) {
  const int n = static_cast<int>(order.size());
  for (int t = 0; t <= n; ++t) {
    ElementSet prefix(f.num_elements());
    for (int s = 0; s < t; ++s) prefix.Insert(order[s]);
    if (f.Value(prefix) >= 1.0 - 1e-12) return t;
  }
  return n;
}

inline double MinMaxByDefinition(const Instance& inst,
                                 const std::vector<Element>& order) {
  double worst = 0.0;
  for (const Agent& agent : inst.agents()) {
    double cost = 0.0;
    for (const WeightedFunction& wf : agent.functions) {
      cost += wf.weight * CoverTimeByPrefixes(*wf.function, order);
    }
    worst = std::max(worst, cost);
  }
  return worst;
}

// Exact optimum by enumerating all n! orders.
inline double OptimumByEnumeration(const Instance& inst) {
  std::vector<Element> order(inst.n());
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, MinMaxByDefinition(inst, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Checks monotonicity and the diminishing-returns inequality over every pair
// S subset of S' and every e outside S'. Returns an empty string on success.
inline std::string ExhaustiveSubmodularityCheck(const SubmodularFunction& f) {
  const int n = f.num_elements();
  const uint32_t full = (1u << n) - 1;
  std::vector<double> value(full + 1);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    value[mask] = f.Value(FromMask(n, mask));
  }
  constexpr double kTol = 1e-12;
  for (uint32_t large = 0; large <= full; ++large) {
    // Enumerate all submasks of `large`.
    for (uint32_t small = large;; small = (small - 1) & large) {
      if (value[small] > value[large] + kTol) return "not monotone";
      for (int e = 0; e < n; ++e) {
        if (large >> e & 1u) continue;
        const double gain_small = value[small | (1u << e)] - value[small];
        const double gain_large = value[large | (1u << e)] - value[large];
        if (gain_small + kTol < gain_large) return "not submodular";
      }
      if (small == 0) break;
    }
  }
  return "";
}

// Sum over a random nested chain of (f(S_i) - f(S_{i-1})) / (1 - f(S_{i-1}))
// taken while f(S_{i-1}) < 1.
inline double NormalizedChainSum(const SubmodularFunction& f,
                                 std::mt19937_64& rng) {
  const int n = f.num_elements();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> step(1, std::max(1, n / 3));
  ElementSet current(n);
  double sum = 0.0;
  int next = 0;
  while (next < n) {
    const double before = f.Value(current);
    const int take = std::min(n - next, step(rng));
    for (int s = 0; s < take; ++s) current.Insert(order[next++]);
    if (before >= 1.0 - 1e-12) break;
    sum += (f.Value(current) - before) / (1.0 - before);
  }
  return sum;
}

// Largest (K - |B|) * y - sum_{e in S \ B} prefix_e over all 2^|S| subsets B.
inline double ExhaustiveMaxViolation(int requirement,
                                     const std::vector<double>& prefix,
                                     double y) {
  const int size = static_cast<int>(prefix.size());
  double best = -1e300;
  for (uint32_t mask = 0; mask < (uint32_t{1} << size); ++mask) {
    double outside = 0.0;
    for (int i = 0; i < size; ++i) {
      if (!(mask & (uint32_t{1} << i))) outside += prefix[i];
    }
    const double v = (requirement - std::popcount(mask)) * y - outside;
    best = std::max(best, v);
  }
  return best;
}

// Cover time of a GMSC set under pi, counted directly.
inline int GmscCoverTime(const std::vector<Element>& members, int requirement,
                         const Permutation& pi) {
  int hit = 0;
  for (int t = 0; t < pi.size(); ++t) {
    if (std::find(members.begin(), members.end(), pi[t]) != members.end()) {
      if (++hit == requirement) return t + 1;
    }
  }
  return pi.size() + 1;
}

// f == 1 everywhere; satisfied before any element is chosen.
class ConstantOne final : public SubmodularFunction {
 public:
  explicit ConstantOne(int n) : n_(n) {}
  int num_elements() const override { return n_; }
  double Value(const ElementSet&) const override { return 1.0; }
  double MinNonzeroMarginal() const override { return 1.0; }
  std::string family() const override { return "constant"; }

 private:
  int n_;
};

// Arbitrary float-valued oracle without analytic guarantees.
class LambdaFunction final : public SubmodularFunction {
 public:
  LambdaFunction(int n, std::function<double(const ElementSet&)> value,
                 double epsilon)
      : n_(n), value_(std::move(value)), epsilon_(epsilon) {}
  int num_elements() const override { return n_; }
  double Value(const ElementSet& s) const override { return value_(s); }
  double MinNonzeroMarginal() const override { return epsilon_; }
  std::string family() const override { return "lambda"; }
  bool HasAnalyticGuarantee() const override { return false; }

 private:
  int n_;
  std::function<double(const ElementSet&)> value_;
  double epsilon_;
};

}  // namespace subrank::oracle

#endif  // SUBRANK_TESTS_ORACLES_H_
