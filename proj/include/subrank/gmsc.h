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

// Generalized min-sum set cover with several agents.
//
// Each agent owns sets S with requirements K(S); S is covered at the first
// time K(S) of its members have been scheduled. The LP relaxation uses
// x[e][t] (element e at time t + 1), y[s][t] (set s covered before time
// t + 1) and a bound T on every agent's fractional cost, strengthened with
// knapsack-cover rows
//
//   sum_{e in S \ B} sum_{t' < t} x[e][t'] >= (K(S) - |B|) * y[S][t]
//
// for every B subset of S, which are generated on demand by the separation
// oracle. The rounding schedule samples elements in phases of doubling
// horizon and interleaves several independent repetitions per phase.

#ifndef SUBRANK_GMSC_H_
#define SUBRANK_GMSC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "subrank/element_set.h"
#include "subrank/functions.h"
#include "subrank/instance.h"

namespace subrank {

inline constexpr double kLpTol = 1e-7;
inline constexpr int kMaxCuts = 10'000;

class GmscInstance {
 public:
  // Members are 0-based; they are sorted and deduplicated. Requires n >= 1,
  // at least one agent, every agent nonempty, 1 <= K <= |S|.
  static absl::StatusOr<GmscInstance> Create(
      int n, std::vector<std::vector<GmscSet>> agents);

  int n() const { return n_; }
  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_sets() const { return static_cast<int>(sets_.size()); }
  const std::vector<std::vector<GmscSet>>& agents() const { return agents_; }

  // Sets are numbered agent by agent.
  const GmscSet& set(int id) const { return sets_[id]; }
  int agent_of(int id) const { return agent_of_[id]; }
  std::vector<int> sets_of(int agent) const;

  // The same problem as a ranking instance with unit weights.
  Instance ToInstance() const;

 private:
  GmscInstance(int n, std::vector<std::vector<GmscSet>> agents);

  int n_;
  std::vector<std::vector<GmscSet>> agents_;
  std::vector<GmscSet> sets_;
  std::vector<int> agent_of_;
};

// Seeded instance with k agents of m sets each. Set sizes are uniform in
// [1, min(n, 4)] and requirements uniform in [1, |S|].
GmscInstance RandomGmscInstance(int n, int k, int m, uint64_t seed);

struct FractionalSolution {
  int n = 0;
  std::vector<std::vector<double>> x;  // [element][time - 1]
  std::vector<std::vector<double>> y;  // [set id][time - 1]
  double t_star = 0.0;
  // sum_t sum_S (1 - y) per agent.
  std::vector<double> agent_lp_costs;
  int cuts = 0;
  int rounds = 0;
  int64_t pivots = 0;
  // False when the cut cap stopped the loop; the solution is then the last
  // LP optimum and may violate some knapsack-cover rows.
  bool converged = true;
  std::string message;
};

struct ViolatedConstraint {
  int set = 0;
  int time = 0;  // 1-based t of the row
  std::vector<Element> b;
  double violation = 0.0;
};

// prefix[e][t - 1] = sum_{t' < t} x[e][t' - 1] for t = 1..n.
std::vector<std::vector<double>> PrefixMass(
    const std::vector<std::vector<double>>& x);

// Most violated row for one (S, t), given the prefix masses of S's members
// (aligned with set.members) and y = y[S][t]. B holds the members whose
// prefix mass exceeds y.
ViolatedConstraint MostViolatedSubset(const GmscSet& set,
                                      std::span<const double> member_prefix,
                                      double y);

// Every (S, t) whose most violated row exceeds tol, ordered by set then t.
std::vector<ViolatedConstraint> ViolatedConstraints(
    const GmscInstance& instance, const std::vector<std::vector<double>>& x,
    const std::vector<std::vector<double>>& y, double tol = kLpTol);

// The single most violated row, or nullopt when none exceeds tol.
std::optional<ViolatedConstraint> SeparationOracle(
    const GmscInstance& instance, const std::vector<std::vector<double>>& x,
    const std::vector<std::vector<double>>& y, double tol = kLpTol);

struct LpOptions {
  int max_cuts = kMaxCuts;
  int max_rounds = 10'000;
};

// Minimizes T by cutting planes. Errors only when the simplex fails.
absl::StatusOr<FractionalSolution> SolveLp(const GmscInstance& instance,
                                           const LpOptions& options = {});

// Last t with y[t - 1] <= 1/2, or 0. Assumes y nondecreasing.
int TStar(std::span<const double> y);

struct PhaseOutput {
  int phase = 0;
  int repetition = 0;
  // Picked elements by index; empty when the sample exceeded the cap.
  std::vector<Element> picked;
  std::vector<double> prefix_mass;
  int sampled = 0;
  bool emptied = false;
};

// Size cap 16 * 2^phase.
int64_t PhaseCap(int phase);

// Seed of repetition q in phase l; a seed_seq mix of (seed, l, q).
uint64_t PhaseSeed(uint64_t seed, int phase, int repetition);

// One rounding pass with horizon 2^phase. Each element is kept with
// probability min(1, 8 * sum_{t < 2^phase} x[e][t - 1]).
PhaseOutput RoundPhase(const std::vector<std::vector<double>>& x, int phase,
                       uint64_t stream_seed);

// ceil(log2(v)) for v >= 1.
int CeilLog2(int64_t v);

int NumPhases(int n);
int NumRepetitions(int k);

struct GmscScheduleResult {
  Permutation permutation;
  std::vector<PhaseOutput> phases;
  std::vector<Element> appended;
};

GmscScheduleResult GmscSchedule(const GmscInstance& instance,
                                const FractionalSolution& solution,
                                uint64_t seed);

// Per-agent sum of cover times.
std::vector<double> GmscAgentCosts(const GmscInstance& instance,
                                   const Permutation& pi);

// CSV with header "e,t,x" and 1-based e, t.
std::string FractionalXCsv(const FractionalSolution& solution);
// CSV with header "set,t,y" and 1-based set ids.
std::string FractionalYCsv(const FractionalSolution& solution);

}  // namespace subrank

#endif  // SUBRANK_GMSC_H_
