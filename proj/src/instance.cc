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

#include "subrank/instance.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace subrank {

double Agent::TotalWeight() const {
  double total = 0.0;
  for (const WeightedFunction& wf : functions) total += wf.weight;
  return total;
}

Instance::Instance(int n, std::vector<Agent> agents)
    : n_(n), agents_(std::move(agents)) {
  bool any = false;
  for (const Agent& agent : agents_) {
    max_total_weight_ = std::max(max_total_weight_, agent.TotalWeight());
    for (const WeightedFunction& wf : agent.functions) {
      const double marginal = wf.function->MinNonzeroMarginal();
      epsilon_ = any ? std::min(epsilon_, marginal) : marginal;
      any = true;
    }
  }
}

absl::StatusOr<Instance> Instance::Create(int n, std::vector<Agent> agents) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("ground set must be nonempty, got n = ", n));
  }
  for (size_t i = 0; i < agents.size(); ++i) {
    for (size_t j = 0; j < agents[i].functions.size(); ++j) {
      const WeightedFunction& wf = agents[i].functions[j];
      if (wf.function == nullptr) {
        return absl::InvalidArgumentError(
            absl::StrCat("agent ", i + 1, " function ", j + 1, " is null"));
      }
      if (wf.function->num_elements() != n) {
        return absl::InvalidArgumentError(absl::StrCat(
            "agent ", i + 1, " function ", j + 1, " is defined over ",
            wf.function->num_elements(), " elements, instance has ", n));
      }
    }
  }
  return Instance(n, std::move(agents));
}

int Instance::num_functions() const {
  int total = 0;
  for (const Agent& agent : agents_) {
    total += static_cast<int>(agent.functions.size());
  }
  return total;
}

absl::StatusOr<Permutation> Permutation::Create(std::vector<Element> order,
                                                int n) {
  if (static_cast<int>(order.size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "permutation has ", order.size(), " entries, expected ", n));
  }
  std::vector<bool> seen(n, false);
  for (Element e : order) {
    if (e < 0 || e >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", e + 1, " outside [1, ", n, "]"));
    }
    if (seen[e]) {
      return absl::InvalidArgumentError(
          absl::StrCat("element ", e + 1, " appears twice"));
    }
    seen[e] = true;
  }
  return Permutation(std::move(order));
}

Permutation Permutation::Identity(int n) {
  std::vector<Element> order(n);
  for (Element e = 0; e < n; ++e) order[e] = e;
  return Permutation(std::move(order));
}

std::string Permutation::ToString() const {
  return absl::StrJoin(order_, " ", [](std::string* out, Element e) {
    absl::StrAppend(out, e + 1);
  });
}

std::string_view ObjectiveModeName(ObjectiveMode mode) {
  return mode == ObjectiveMode::kMinMax ? "minmax" : "average";
}

absl::StatusOr<ObjectiveMode> ParseObjectiveMode(std::string_view name) {
  if (name == "minmax") return ObjectiveMode::kMinMax;
  if (name == "average" || name == "avg") return ObjectiveMode::kAverage;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown objective mode '", std::string(name), "'"));
}

int CoverTime(const SubmodularFunction& f, const Permutation& pi) {
  ElementSet prefix(f.num_elements());
  if (f.IsCovered(prefix)) return 0;
  for (int t = 0; t < pi.size(); ++t) {
    prefix.Insert(pi[t]);
    if (f.IsCovered(prefix)) return t + 1;
  }
  // Unreachable when f(U) = 1; report n so costs stay finite otherwise.
  return pi.size();
}

CoverReport EvaluateCover(const Instance& instance, const Permutation& pi) {
  CoverReport report;
  const int k = instance.num_agents();
  report.cover_times.resize(k);
  report.agent_costs.assign(k, 0.0);

  // -1 marks a function that is still uncovered.
  std::vector<std::pair<int, int>> pending;
  for (int i = 0; i < k; ++i) {
    const int m = static_cast<int>(instance.agent(i).functions.size());
    report.cover_times[i].assign(m, -1);
    for (int j = 0; j < m; ++j) pending.emplace_back(i, j);
  }
  ElementSet prefix(instance.n());
  for (int t = 0; t <= pi.size() && !pending.empty(); ++t) {
    if (t > 0) prefix.Insert(pi[t - 1]);
    std::erase_if(pending, [&](const std::pair<int, int>& ij) {
      const SubmodularFunction& f =
          *instance.agent(ij.first).functions[ij.second].function;
      if (!f.IsCovered(prefix)) return false;
      report.cover_times[ij.first][ij.second] = t;
      return true;
    });
  }
  for (const auto& [i, j] : pending) report.cover_times[i][j] = pi.size();

  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const Agent& agent = instance.agent(i);
    double cost = 0.0;
    for (size_t j = 0; j < agent.functions.size(); ++j) {
      cost += agent.functions[j].weight * report.cover_times[i][j];
    }
    report.agent_costs[i] = cost;
    report.minmax = i == 0 ? cost : std::max(report.minmax, cost);
    sum += cost;
  }
  report.average = k > 0 ? sum / k : 0.0;
  return report;
}

absl::StatusOr<double> AgentCost(const Instance& instance, int agent,
                                 const Permutation& pi) {
  if (agent < 0 || agent >= instance.num_agents()) {
    return absl::OutOfRangeError(absl::StrCat("unknown agent id ", agent + 1));
  }
  double cost = 0.0;
  for (const WeightedFunction& wf : instance.agent(agent).functions) {
    cost += wf.weight * CoverTime(*wf.function, pi);
  }
  return cost;
}

absl::StatusOr<double> Objective(const Instance& instance,
                                 const Permutation& pi, ObjectiveMode mode) {
  if (instance.num_agents() == 0) {
    return absl::InvalidArgumentError("empty agent list");
  }
  return EvaluateCover(instance, pi).objective(mode);
}

namespace {

// Random (S, S', e) triples with S subset of S' and e outside S'.
void SpotCheck(const SubmodularFunction& f, const std::string& where,
               std::vector<std::string>& violations) {
  constexpr int kTriples = 200;
  constexpr double kTol = 1e-12;
  const int n = f.num_elements();
  std::mt19937_64 rng(0x5eed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < kTriples; ++trial) {
    ElementSet small(n);
    ElementSet large(n);
    for (Element e = 0; e < n; ++e) {
      if (coin(rng)) {
        large.Insert(e);
        if (coin(rng)) small.Insert(e);
      }
    }
    if (large.size() == n) continue;
    Element e = pick(rng);
    while (large.Contains(e)) e = (e + 1) % n;
    const double fs = f.Value(small);
    const double fl = f.Value(large);
    if (fs < -kTol || fl > 1.0 + kTol) {
      violations.push_back(absl::StrCat(where, ": value outside [0, 1]"));
      return;
    }
    if (fs > fl + kTol) {
      violations.push_back(absl::StrCat(where, ": not monotone"));
      return;
    }
    ElementSet small_e = small;
    small_e.Insert(e);
    ElementSet large_e = large;
    large_e.Insert(e);
    if (f.Value(small_e) - fs + kTol < f.Value(large_e) - fl) {
      violations.push_back(absl::StrCat(where, ": not submodular"));
      return;
    }
  }
}

}  // namespace

ValidationReport Validate(const Instance& instance) {
  ValidationReport report;
  auto& v = report.violations;
  if (instance.num_agents() == 0) v.push_back("instance has no agents");

  const ElementSet universe = ElementSet::Full(instance.n());
  double epsilon = 1.0;
  double max_weight = 0.0;
  bool any = false;
  for (int i = 0; i < instance.num_agents(); ++i) {
    const Agent& agent = instance.agent(i);
    if (agent.functions.empty()) {
      v.push_back(absl::StrCat("agent ", i + 1, ": no functions"));
    }
    max_weight = std::max(max_weight, agent.TotalWeight());
    for (size_t j = 0; j < agent.functions.size(); ++j) {
      const WeightedFunction& wf = agent.functions[j];
      const std::string where =
          absl::StrCat("agent ", i + 1, " function ", j + 1);
      if (!std::isfinite(wf.weight) || wf.weight < 1.0) {
        v.push_back(absl::StrCat(where, ": weight < 1 (", wf.weight, ")"));
      }
      const SubmodularFunction& f = *wf.function;
      bool full;
      if (const auto* rational = dynamic_cast<const RationalFunction*>(&f)) {
        full = rational->Numerator(universe) == rational->denominator();
      } else {
        full = std::abs(f.Value(universe) - 1.0) <= kCoverTol;
      }
      if (!full) {
        v.push_back(absl::StrCat(where, ": f(U) ≠ 1 (", f.Value(universe),
                                 ")"));
      }
      const double marginal = f.MinNonzeroMarginal();
      if (!(marginal > 0.0 && marginal <= 1.0)) {
        v.push_back(absl::StrCat(where, ": min nonzero marginal ", marginal,
                                 " outside (0, 1]"));
      }
      epsilon = any ? std::min(epsilon, marginal) : marginal;
      any = true;
      if (!f.HasAnalyticGuarantee()) SpotCheck(f, where, v);
    }
  }
  if (any && epsilon != instance.epsilon()) {
    v.push_back(absl::StrCat("epsilon ", instance.epsilon(),
                             " disagrees with recomputed ", epsilon));
  }
  if (max_weight != instance.max_total_weight()) {
    v.push_back(absl::StrCat("W ", instance.max_total_weight(),
                             " disagrees with recomputed ", max_weight));
  }
  return report;
}

}  // namespace subrank
