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

#include "subrank/ranking.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace subrank {
namespace {

bool Beats(double candidate, double incumbent) {
  return candidate > incumbent + 1e-12 * std::max(1.0, std::abs(incumbent));
}

// Chosen prefix plus per-function coverage bookkeeping shared by the greedy
// rules. f_ij(pi_{t-1}) is memoized as a covered flag per function.
class GreedyState {
 public:
  explicit GreedyState(const Instance& instance)
      : instance_(instance),
        chosen_(instance.n()),
        covered_(instance.num_agents()),
        remaining_(instance.num_agents(), 0.0),
        gains_(instance.n()) {
    for (int i = 0; i < instance.num_agents(); ++i) {
      const auto& functions = instance.agent(i).functions;
      covered_[i].assign(functions.size(), false);
    }
    Refresh();
  }

  const ElementSet& chosen() const { return chosen_; }
  const std::vector<Element>& order() const { return order_; }
  bool done() const { return static_cast<int>(order_.size()) == instance_.n(); }
  double remaining(int agent) const { return remaining_[agent]; }
  const std::vector<double>& remaining_weights() const { return remaining_; }

  // scores[e] += sum over the given agents' uncovered functions.
  void AddScores(int agent, bool normalized, std::vector<double>& scores) {
    const auto& functions = instance_.agent(agent).functions;
    for (size_t j = 0; j < functions.size(); ++j) {
      if (covered_[agent][j]) continue;
      const SubmodularFunction& f = *functions[j].function;
      if (normalized) {
        f.NormalizedGains(chosen_, gains_);
      } else {
        f.Gains(chosen_, gains_);
      }
      const double w = functions[j].weight;
      for (Element e = 0; e < instance_.n(); ++e) scores[e] += w * gains_[e];
    }
  }

  // Smallest-index argmax among unchosen elements.
  Element ArgMax(const std::vector<double>& scores) const {
    Element best = -1;
    for (Element e = 0; e < instance_.n(); ++e) {
      if (chosen_.Contains(e)) continue;
      if (best < 0 || Beats(scores[e], scores[best])) best = e;
    }
    return best;
  }

  void Pick(Element e) {
    chosen_.Insert(e);
    order_.push_back(e);
    Refresh();
  }

  Permutation Finish() {
    for (Element e = 0; e < instance_.n(); ++e) {
      if (!chosen_.Contains(e)) Pick(e);
    }
    return *Permutation::Create(order_, instance_.n());
  }

 private:
  void Refresh() {
    for (int i = 0; i < instance_.num_agents(); ++i) {
      const auto& functions = instance_.agent(i).functions;
      double uncovered = 0.0;
      for (size_t j = 0; j < functions.size(); ++j) {
        if (!covered_[i][j] && functions[j].function->IsCovered(chosen_)) {
          covered_[i][j] = true;
        }
        if (!covered_[i][j]) uncovered += functions[j].weight;
      }
      remaining_[i] = uncovered;
    }
  }

  const Instance& instance_;
  ElementSet chosen_;
  std::vector<Element> order_;
  std::vector<std::vector<bool>> covered_;
  std::vector<double> remaining_;
  std::vector<double> gains_;
};

Permutation StackedGreedy(const Instance& instance, bool normalized) {
  GreedyState state(instance);
  std::vector<double> scores(instance.n());
  while (!state.done()) {
    std::fill(scores.begin(), scores.end(), 0.0);
    for (int i = 0; i < instance.num_agents(); ++i) {
      state.AddScores(i, normalized, scores);
    }
    state.Pick(state.ArgMax(scores));
  }
  return state.Finish();
}

}  // namespace

Permutation RandomOrder(const Instance& instance, uint64_t seed) {
  std::vector<Element> order(instance.n());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return *Permutation::Create(std::move(order), instance.n());
}

Permutation Greedy(const Instance& instance) {
  return StackedGreedy(instance, /*normalized=*/false);
}

Permutation NormalizedGreedy(const Instance& instance) {
  return StackedGreedy(instance, /*normalized=*/true);
}

absl::Status BagConfig::Validate() const {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ratio must lie in (0, 1), got ", ratio));
  }
  if (!(drop_fraction > 0.0 && drop_fraction <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("drop_fraction must lie in (0, 1], got ", drop_fraction));
  }
  return absl::OkStatus();
}

absl::StatusOr<BagResult> BalancedAdaptiveGreedy(const Instance& instance,
                                                 const BagConfig& config) {
  if (absl::Status status = config.Validate(); !status.ok()) return status;

  GreedyState state(instance);
  RunTrace trace;
  const double w_max = instance.max_total_weight();
  const int k = instance.num_agents();
  std::vector<double> scores(instance.n());

  auto above = [&](double baseline) {
    std::vector<int> agents;
    for (int i = 0; i < k; ++i) {
      if (state.remaining(i) > baseline) agents.push_back(i);
    }
    return agents;
  };

  int p = 1;
  double previous_baseline = w_max;
  double baseline = w_max * config.ratio;
  while (!state.done() && !above(baseline).empty()) {
    std::vector<int> active = above(baseline);
    int q = 1;
    while (!active.empty() && !state.done()) {
      const std::vector<int> frozen = active;
      BagIteration iteration{.p = p,
                             .q = q,
                             .baseline = baseline,
                             .previous_baseline = previous_baseline,
                             .frozen = frozen,
                             .first_t = static_cast<int>(state.order().size()) + 1};
      while (static_cast<double>(active.size()) >=
                 config.drop_fraction * static_cast<double>(frozen.size()) &&
             !state.done()) {
        std::fill(scores.begin(), scores.end(), 0.0);
        for (int i : frozen) state.AddScores(i, /*normalized=*/true, scores);
        const Element e = state.ArgMax(scores);
        state.Pick(e);
        active = above(baseline);
        iteration.score_sum += scores[e];
        iteration.last_t = static_cast<int>(state.order().size());
        if (config.trace) {
          trace.picks.push_back({.t = iteration.last_t,
                                 .element = e,
                                 .p = p,
                                 .q = q,
                                 .score = scores[e],
                                 .active = active,
                                 .remaining_weights =
                                     state.remaining_weights()});
        }
      }
      iteration.active_at_end = active;
      if (config.trace) trace.iterations.push_back(std::move(iteration));
      ++q;
    }
    ++p;
    previous_baseline = baseline;
    baseline = w_max * std::pow(config.ratio, p);
  }
  for (Element e = 0; e < instance.n(); ++e) {
    if (!state.chosen().Contains(e) && config.trace) trace.appended.push_back(e);
  }
  return BagResult{.permutation = state.Finish(), .trace = std::move(trace)};
}

std::string TraceToJsonLines(const RunTrace& trace) {
  std::string out;
  for (const BagPick& pick : trace.picks) {
    nlohmann::json record;
    record["t"] = pick.t;
    record["element"] = pick.element + 1;
    record["p"] = pick.p;
    record["q"] = pick.q;
    record["score"] = pick.score;
    record["remaining_weights"] = pick.remaining_weights;
    std::vector<int> active;
    for (int i : pick.active) active.push_back(i + 1);
    record["active"] = active;
    absl::StrAppend(&out, record.dump(), "\n");
  }
  return out;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, int64_t node_limit)
      : instance_(instance),
        node_limit_(node_limit),
        chosen_(instance.n()),
        partial_(instance.num_agents(), 0.0),
        uncovered_weight_(instance.num_agents(), 0.0),
        uncovered_count_(instance.num_agents(), 0),
        gains_(instance.n()) {
    for (int i = 0; i < instance.num_agents(); ++i) {
      const auto& functions = instance.agent(i).functions;
      for (size_t j = 0; j < functions.size(); ++j) {
        functions_.push_back({i, &functions[j]});
      }
    }
    covered_at_.assign(functions_.size(), -1);
    const ElementSet empty(instance.n());
    for (size_t f = 0; f < functions_.size(); ++f) {
      if (functions_[f].wf->function->IsCovered(empty)) {
        covered_at_[f] = 0;
      } else {
        uncovered_weight_[functions_[f].agent] += functions_[f].wf->weight;
        ++uncovered_count_[functions_[f].agent];
      }
    }
  }

  void Seed(const Permutation& pi) {
    const double value = EvaluateCover(instance_, pi).minmax;
    if (best_order_.empty() || value < best_value_) {
      best_value_ = value;
      best_order_ = pi.order();
    }
  }

  BruteForceResult Run() {
    Dfs(0);
    return {.permutation = *Permutation::Create(best_order_, instance_.n()),
            .value = best_value_,
            .optimal = !aborted_,
            .nodes = nodes_};
  }

 private:
  struct Entry {
    int agent;
    const WeightedFunction* wf;
  };

  void Dfs(int t) {
    if (aborted_) return;
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return;
    }
    double bound = 0.0;
    bool all_covered = true;
    for (int i = 0; i < instance_.num_agents(); ++i) {
      bound = std::max(bound, partial_[i] + (t + 1) * uncovered_weight_[i]);
      if (uncovered_count_[i] > 0) all_covered = false;
    }
    if (all_covered) {
      double value = 0.0;
      for (double c : partial_) value = std::max(value, c);
      if (value < best_value_ - 1e-9) {
        best_value_ = value;
        best_order_ = order_;
        for (Element e = 0; e < instance_.n(); ++e) {
          if (!chosen_.Contains(e)) best_order_.push_back(e);
        }
      }
      return;
    }
    if (bound >= best_value_ - 1e-9) return;

    // An element with zero gain for every uncovered function stays useless
    // for the rest of the order, so it never needs to be branched on.
    std::vector<double> total(instance_.n(), 0.0);
    for (size_t f = 0; f < functions_.size(); ++f) {
      if (covered_at_[f] >= 0) continue;
      functions_[f].wf->function->Gains(chosen_, gains_);
      for (Element e = 0; e < instance_.n(); ++e) total[e] += gains_[e];
    }
    for (Element e = 0; e < instance_.n(); ++e) {
      if (chosen_.Contains(e) || total[e] <= 0.0) continue;
      std::vector<size_t> newly;
      chosen_.Insert(e);
      order_.push_back(e);
      for (size_t f = 0; f < functions_.size(); ++f) {
        if (covered_at_[f] >= 0) continue;
        if (functions_[f].wf->function->IsCovered(chosen_)) {
          covered_at_[f] = t + 1;
          partial_[functions_[f].agent] += functions_[f].wf->weight * (t + 1);
          uncovered_weight_[functions_[f].agent] -= functions_[f].wf->weight;
          --uncovered_count_[functions_[f].agent];
          newly.push_back(f);
        }
      }
      Dfs(t + 1);
      for (size_t f : newly) {
        covered_at_[f] = -1;
        partial_[functions_[f].agent] -= functions_[f].wf->weight * (t + 1);
        uncovered_weight_[functions_[f].agent] += functions_[f].wf->weight;
        ++uncovered_count_[functions_[f].agent];
      }
      order_.pop_back();
      chosen_.Erase(e);
      if (aborted_) return;
    }
  }

  const Instance& instance_;
  int64_t node_limit_;
  int64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Entry> functions_;
  std::vector<int> covered_at_;
  ElementSet chosen_;
  std::vector<Element> order_;
  std::vector<double> partial_;
  std::vector<double> uncovered_weight_;
  std::vector<int> uncovered_count_;
  std::vector<double> gains_;
  double best_value_ = 0.0;
  std::vector<Element> best_order_;
};

}  // namespace

BruteForceResult BruteForceOpt(const Instance& instance, int64_t node_limit) {
  BranchAndBound search(instance, node_limit);
  search.Seed(NormalizedGreedy(instance));
  search.Seed(Greedy(instance));
  search.Seed(BalancedAdaptiveGreedy(instance)->permutation);
  return search.Run();
}

}  // namespace subrank
