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

// Ranking algorithms for multi-agent submodular ranking.
//
// All greedy rules break ties toward the smallest element index. Scores that
// agree to a relative 1e-12 count as ties.

#ifndef SUBRANK_RANKING_H_
#define SUBRANK_RANKING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "subrank/element_set.h"
#include "subrank/instance.h"

namespace subrank {

// Uniform seeded shuffle.
Permutation RandomOrder(const Instance& instance, uint64_t seed);

// Picks argmax_e sum_{i,j} w_ij * (f_ij(S + e) - f_ij(S)) each step.
Permutation Greedy(const Instance& instance);

// Normalized greedy over all k*m functions stacked into one instance: picks
// argmax_e sum over uncovered f of w_f * (f(S + e) - f(S)) / (1 - f(S)).
Permutation NormalizedGreedy(const Instance& instance);

// Balanced adaptive greedy parameters. Baselines are B_p = ratio^p * W.
struct BagConfig {
  double ratio = 2.0 / 3.0;
  // An inner iteration ends once fewer than drop_fraction of its frozen
  // agents still exceed the baseline.
  double drop_fraction = 0.75;
  bool trace = false;

  absl::Status Validate() const;
};

struct BagPick {
  int t = 0;  // 1-based time slot
  Element element = 0;
  int p = 0;
  int q = 0;
  // Greedy score of the chosen element over the frozen agents.
  double score = 0.0;
  // Agents above the baseline after this pick.
  std::vector<int> active;
  // w(R_i) after this pick, one entry per agent.
  std::vector<double> remaining_weights;
};

struct BagIteration {
  int p = 0;
  int q = 0;
  double baseline = 0.0;           // B_p
  double previous_baseline = 0.0;  // B_{p-1}, with B_0 = W
  std::vector<int> frozen;         // A'_{p,q}
  int first_t = 0;
  int last_t = 0;
  double score_sum = 0.0;
  std::vector<int> active_at_end;  // A_{p,q} when the iteration stopped
};

struct RunTrace {
  std::vector<BagPick> picks;
  std::vector<BagIteration> iterations;
  // Elements appended in index order after every agent was covered.
  std::vector<Element> appended;
};

struct BagResult {
  Permutation permutation;
  RunTrace trace;
};

absl::StatusOr<BagResult> BalancedAdaptiveGreedy(const Instance& instance,
                                                 const BagConfig& config = {});

// One JSON object per pick: {t, element, p, q, score, remaining_weights,
// active}. Elements are 1-based.
std::string TraceToJsonLines(const RunTrace& trace);

struct BruteForceResult {
  Permutation permutation;
  double value = 0.0;
  // False when node_limit stopped the search; permutation is then the best
  // incumbent found.
  bool optimal = true;
  int64_t nodes = 0;
};

inline constexpr int64_t kDefaultNodeLimit = 50'000'000;

// Exact min-max optimum by depth-first branch and bound over permutation
// prefixes. Deterministic.
BruteForceResult BruteForceOpt(const Instance& instance,
                               int64_t node_limit = kDefaultNodeLimit);

}  // namespace subrank

#endif  // SUBRANK_RANKING_H_
