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

// Multi-agent submodular ranking instances and the cover-time objective.
//
// An instance has a ground set U = {0, ..., n-1} and k agents. Agent i owns
// weighted monotone submodular functions f_j with f_j(U) = 1. For a
// permutation pi, the cover time of f is the smallest prefix length t with
// f({pi(1), ..., pi(t)}) = 1, and agent i pays sum_j w_j * cov(f_j, pi). The
// min-max objective is the largest agent cost; the average objective is the
// mean agent cost.

#ifndef SUBRANK_INSTANCE_H_
#define SUBRANK_INSTANCE_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "subrank/element_set.h"
#include "subrank/submodular_function.h"

namespace subrank {

struct WeightedFunction {
  std::shared_ptr<const SubmodularFunction> function;
  double weight = 1.0;
};

struct Agent {
  std::vector<WeightedFunction> functions;

  double TotalWeight() const;
};

// Immutable after construction; safe to share across threads.
class Instance {
 public:
  // Fails only on structural problems (n < 1, null oracle, oracle defined over
  // a different ground set). Semantic problems such as weights below 1 are
  // reported by Validate() instead.
  static absl::StatusOr<Instance> Create(int n, std::vector<Agent> agents);

  int n() const { return n_; }
  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_functions() const;
  const std::vector<Agent>& agents() const { return agents_; }
  const Agent& agent(int i) const { return agents_[i]; }

  // Minimum oracle-reported nonzero marginal over all functions.
  double epsilon() const { return epsilon_; }
  // W: the largest per-agent sum of weights.
  double max_total_weight() const { return max_total_weight_; }

 private:
  Instance(int n, std::vector<Agent> agents);

  int n_ = 0;
  std::vector<Agent> agents_;
  double epsilon_ = 1.0;
  double max_total_weight_ = 0.0;
};

// A bijection over {0, ..., n-1}; position 0 is time slot 1.
class Permutation {
 public:
  static absl::StatusOr<Permutation> Create(std::vector<Element> order, int n);
  static Permutation Identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  Element operator[](int position) const { return order_[position]; }
  const std::vector<Element>& order() const { return order_; }

  // Space separated 1-based labels, e.g. "4 1 2 3 5 6".
  std::string ToString() const;

  bool operator==(const Permutation& other) const = default;

 private:
  explicit Permutation(std::vector<Element> order) : order_(std::move(order)) {}

  std::vector<Element> order_;
};

enum class ObjectiveMode { kMinMax, kAverage };

std::string_view ObjectiveModeName(ObjectiveMode mode);
absl::StatusOr<ObjectiveMode> ParseObjectiveMode(std::string_view name);

// Smallest t in [0, n] such that the first t elements of pi cover f. Returns
// 0 when the empty set already covers f.
int CoverTime(const SubmodularFunction& f, const Permutation& pi);

struct CoverReport {
  // cover_times[i][j] is the cover time of agent i's j-th function.
  std::vector<std::vector<int>> cover_times;
  std::vector<double> agent_costs;
  double minmax = 0.0;
  double average = 0.0;

  double objective(ObjectiveMode mode) const {
    return mode == ObjectiveMode::kMinMax ? minmax : average;
  }
};

// Evaluates every function against pi in a single prefix sweep.
CoverReport EvaluateCover(const Instance& instance, const Permutation& pi);

absl::StatusOr<double> AgentCost(const Instance& instance, int agent,
                                 const Permutation& pi);

// Errors on an instance without agents.
absl::StatusOr<double> Objective(const Instance& instance,
                                 const Permutation& pi, ObjectiveMode mode);

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Never aborts; collects every violation it finds.
ValidationReport Validate(const Instance& instance);

}  // namespace subrank

#endif  // SUBRANK_INSTANCE_H_
