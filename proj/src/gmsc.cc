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

#include "subrank/gmsc.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "subrank/simplex.h"

namespace subrank {

GmscInstance::GmscInstance(int n, std::vector<std::vector<GmscSet>> agents)
    : n_(n), agents_(std::move(agents)) {
  for (size_t i = 0; i < agents_.size(); ++i) {
    for (const GmscSet& set : agents_[i]) {
      sets_.push_back(set);
      agent_of_.push_back(static_cast<int>(i));
    }
  }
}

absl::StatusOr<GmscInstance> GmscInstance::Create(
    int n, std::vector<std::vector<GmscSet>> agents) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("ground set must be nonempty, got n = ", n));
  }
  if (agents.empty()) return absl::InvalidArgumentError("no agents");
  for (size_t i = 0; i < agents.size(); ++i) {
    if (agents[i].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("agent ", i + 1, ": no sets"));
    }
    for (size_t j = 0; j < agents[i].size(); ++j) {
      auto f = GmscFunction::Create(n, agents[i][j]);
      if (!f.ok()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "agent ", i + 1, " set ", j + 1, ": ", f.status().message()));
      }
      agents[i][j] = (*f)->set();
    }
  }
  return GmscInstance(n, std::move(agents));
}

std::vector<int> GmscInstance::sets_of(int agent) const {
  std::vector<int> ids;
  for (int s = 0; s < num_sets(); ++s) {
    if (agent_of_[s] == agent) ids.push_back(s);
  }
  return ids;
}

Instance GmscInstance::ToInstance() const {
  std::vector<Agent> agents(agents_.size());
  for (size_t i = 0; i < agents_.size(); ++i) {
    for (const GmscSet& set : agents_[i]) {
      agents[i].functions.push_back({*GmscFunction::Create(n_, set), 1.0});
    }
  }
  return *Instance::Create(n_, std::move(agents));
}

GmscInstance RandomGmscInstance(int n, int k, int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<GmscSet>> agents(k);
  std::vector<Element> pool(n);
  for (Element e = 0; e < n; ++e) pool[e] = e;
  std::uniform_int_distribution<int> size_dist(1, std::min(n, 4));
  for (auto& agent : agents) {
    for (int j = 0; j < m; ++j) {
      const int size = size_dist(rng);
      std::shuffle(pool.begin(), pool.end(), rng);
      GmscSet set;
      set.members.assign(pool.begin(), pool.begin() + size);
      set.requirement = std::uniform_int_distribution<int>(1, size)(rng);
      agent.push_back(std::move(set));
    }
  }
  return *GmscInstance::Create(n, std::move(agents));
}

std::vector<std::vector<double>> PrefixMass(
    const std::vector<std::vector<double>>& x) {
  std::vector<std::vector<double>> prefix(x.size());
  for (size_t e = 0; e < x.size(); ++e) {
    const size_t n = x[e].size();
    prefix[e].assign(n, 0.0);
    for (size_t t = 1; t < n; ++t) prefix[e][t] = prefix[e][t - 1] + x[e][t - 1];
  }
  return prefix;
}

ViolatedConstraint MostViolatedSubset(const GmscSet& set,
                                      std::span<const double> member_prefix,
                                      double y) {
  ViolatedConstraint out;
  double slack = 0.0;
  for (size_t idx = 0; idx < set.members.size(); ++idx) {
    const double mass = member_prefix[idx];
    if (mass > y) {
      out.b.push_back(set.members[idx]);
    } else {
      slack += mass;
    }
  }
  const double k_minus_b =
      static_cast<double>(set.requirement) - static_cast<double>(out.b.size());
  out.violation = k_minus_b * y - slack;
  return out;
}

std::vector<ViolatedConstraint> ViolatedConstraints(
    const GmscInstance& instance, const std::vector<std::vector<double>>& x,
    const std::vector<std::vector<double>>& y, double tol) {
  const std::vector<std::vector<double>> prefix = PrefixMass(x);
  std::vector<ViolatedConstraint> out;
  std::vector<double> member_prefix;
  for (int s = 0; s < instance.num_sets(); ++s) {
    const GmscSet& set = instance.set(s);
    for (int t = 0; t < instance.n(); ++t) {
      member_prefix.clear();
      for (Element e : set.members) member_prefix.push_back(prefix[e][t]);
      ViolatedConstraint v = MostViolatedSubset(set, member_prefix, y[s][t]);
      if (v.violation > tol) {
        v.set = s;
        v.time = t + 1;
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::optional<ViolatedConstraint> SeparationOracle(
    const GmscInstance& instance, const std::vector<std::vector<double>>& x,
    const std::vector<std::vector<double>>& y, double tol) {
  std::vector<ViolatedConstraint> all = ViolatedConstraints(instance, x, y, tol);
  if (all.empty()) return std::nullopt;
  auto best = std::max_element(all.begin(), all.end(),
                               [](const auto& a, const auto& b) {
                                 return a.violation < b.violation;
                               });
  return std::move(*best);
}

namespace {

class LpModel {
 public:
  explicit LpModel(const GmscInstance& instance) : instance_(instance) {
    const int n = instance.n();
    for (int e = 0; e < n; ++e) {
      for (int t = 0; t < n; ++t) simplex_.AddVariable(0.0, 1.0, 0.0);
    }
    for (int s = 0; s < instance.num_sets(); ++s) {
      for (int t = 0; t < n; ++t) simplex_.AddVariable(0.0, 1.0, 0.0);
    }
    t_var_ = simplex_.AddVariable(0.0, kInfinity, 1.0);

    std::vector<DenseSimplex::Term> terms;
    for (int t = 0; t < n; ++t) {
      terms.clear();
      for (int e = 0; e < n; ++e) terms.push_back({X(e, t), 1.0});
      simplex_.AddRow(terms, RowSense::kEqual, 1.0);
    }
    for (int e = 0; e < n; ++e) {
      terms.clear();
      for (int t = 0; t < n; ++t) terms.push_back({X(e, t), 1.0});
      simplex_.AddRow(terms, RowSense::kEqual, 1.0);
    }
    // sum_S sum_t (1 - y) <= T, written as sum y + T >= n * |S_i|.
    for (int i = 0; i < instance.num_agents(); ++i) {
      terms.clear();
      const std::vector<int> ids = instance.sets_of(i);
      for (int s : ids) {
        for (int t = 0; t < n; ++t) terms.push_back({Y(s, t), 1.0});
      }
      terms.push_back({t_var_, 1.0});
      simplex_.AddRow(terms, RowSense::kGreaterEqual,
                      static_cast<double>(n) * ids.size());
    }
    for (int s = 0; s < instance.num_sets(); ++s) {
      for (int t = 0; t + 1 < n; ++t) {
        const DenseSimplex::Term pair[] = {{Y(s, t), 1.0}, {Y(s, t + 1), -1.0}};
        simplex_.AddRow(pair, RowSense::kLessEqual, 0.0);
      }
    }
  }

  int X(int e, int t) const { return e * instance_.n() + t; }
  int Y(int s, int t) const {
    return instance_.n() * instance_.n() + s * instance_.n() + t;
  }

  // Returns false when the cut is a duplicate.
  bool AddCut(const ViolatedConstraint& cut) {
    auto key = std::make_tuple(cut.set, cut.time, cut.b);
    if (!seen_.insert(std::move(key)).second) return false;
    const GmscSet& set = instance_.set(cut.set);
    std::vector<DenseSimplex::Term> terms;
    for (Element e : set.members) {
      if (std::binary_search(cut.b.begin(), cut.b.end(), e)) continue;
      for (int t = 0; t + 1 < cut.time; ++t) terms.push_back({X(e, t), 1.0});
    }
    const double coef =
        static_cast<double>(set.requirement) - static_cast<double>(cut.b.size());
    terms.push_back({Y(cut.set, cut.time - 1), -coef});
    simplex_.AddRow(terms, RowSense::kGreaterEqual, 0.0);
    return true;
  }

  DenseSimplex& simplex() { return simplex_; }

  void Extract(FractionalSolution& out) const {
    const int n = instance_.n();
    out.n = n;
    out.x.assign(n, std::vector<double>(n));
    out.y.assign(instance_.num_sets(), std::vector<double>(n));
    for (int e = 0; e < n; ++e) {
      for (int t = 0; t < n; ++t) {
        out.x[e][t] = std::clamp(simplex_.value(X(e, t)), 0.0, 1.0);
      }
    }
    for (int s = 0; s < instance_.num_sets(); ++s) {
      for (int t = 0; t < n; ++t) {
        out.y[s][t] = std::clamp(simplex_.value(Y(s, t)), 0.0, 1.0);
      }
    }
    out.t_star = simplex_.value(t_var_);
    out.agent_lp_costs.assign(instance_.num_agents(), 0.0);
    for (int s = 0; s < instance_.num_sets(); ++s) {
      for (double v : out.y[s]) {
        out.agent_lp_costs[instance_.agent_of(s)] += 1.0 - v;
      }
    }
    out.pivots = simplex_.pivots();
  }

 private:
  const GmscInstance& instance_;
  DenseSimplex simplex_;
  int t_var_ = 0;
  std::set<std::tuple<int, int, std::vector<Element>>> seen_;
};

}  // namespace

absl::StatusOr<FractionalSolution> SolveLp(const GmscInstance& instance,
                                           const LpOptions& options) {
  LpModel model(instance);
  FractionalSolution solution;
  LpStatus status = model.simplex().Solve();
  while (true) {
    if (status != LpStatus::kOptimal) {
      return absl::InternalError(
          absl::StrCat("simplex: ", std::string(LpStatusName(status)), " after ",
                       solution.cuts, " cuts"));
    }
    model.Extract(solution);
    if (solution.rounds >= options.max_rounds) {
      solution.converged = false;
      solution.message = "round cap reached";
      return solution;
    }
    const std::vector<ViolatedConstraint> cuts =
        ViolatedConstraints(instance, solution.x, solution.y, kLpTol);
    if (cuts.empty()) return solution;
    int added = 0;
    for (const ViolatedConstraint& cut : cuts) {
      if (solution.cuts >= options.max_cuts) break;
      if (model.AddCut(cut)) {
        ++solution.cuts;
        ++added;
      }
    }
    if (added == 0) {
      solution.converged = false;
      solution.message = solution.cuts >= options.max_cuts
                             ? "iteration cap reached"
                             : "cuts repeat without progress";
      return solution;
    }
    ++solution.rounds;
    status = model.simplex().Reoptimize();
  }
}

int TStar(std::span<const double> y) {
  int last = 0;
  for (size_t t = 0; t < y.size(); ++t) {
    if (y[t] <= 0.5 + kLpTol) last = static_cast<int>(t) + 1;
  }
  return last;
}

int64_t PhaseCap(int phase) { return int64_t{16} << phase; }

uint64_t PhaseSeed(uint64_t seed, int phase, int repetition) {
  std::seed_seq seq{static_cast<uint32_t>(seed),
                    static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(phase),
                    static_cast<uint32_t>(repetition)};
  uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<uint64_t>(words[0]) << 32) | words[1];
}

PhaseOutput RoundPhase(const std::vector<std::vector<double>>& x, int phase,
                       uint64_t stream_seed) {
  PhaseOutput out;
  out.phase = phase;
  const int64_t horizon = int64_t{1} << phase;
  std::mt19937_64 rng(stream_seed);
  for (size_t e = 0; e < x.size(); ++e) {
    double mass = 0.0;
    for (int64_t t = 0; t + 1 < horizon && t < static_cast<int64_t>(x[e].size());
         ++t) {
      mass += x[e][t];
    }
    out.prefix_mass.push_back(mass);
    const double p = std::min(1.0, 8.0 * mass);
    // 53 uniform bits so the draw does not depend on library distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) out.picked.push_back(static_cast<Element>(e));
  }
  out.sampled = static_cast<int>(out.picked.size());
  if (out.sampled > PhaseCap(phase)) {
    out.picked.clear();
    out.emptied = true;
  }
  return out;
}

int CeilLog2(int64_t v) {
  int bits = 0;
  while ((int64_t{1} << bits) < v) ++bits;
  return bits;
}

int NumPhases(int n) { return CeilLog2(n); }

int NumRepetitions(int k) { return std::max(1, 2 * CeilLog2(k)); }

GmscScheduleResult GmscSchedule(const GmscInstance& instance,
                                const FractionalSolution& solution,
                                uint64_t seed) {
  const int n = instance.n();
  const int phases = NumPhases(n);
  const int reps = NumRepetitions(instance.num_agents());
  GmscScheduleResult result{Permutation::Identity(n), {}, {}};
  std::vector<bool> placed(n, false);
  std::vector<Element> order;
  for (int phase = 1; phase <= phases; ++phase) {
    for (int q = 1; q <= reps; ++q) {
      PhaseOutput out =
          RoundPhase(solution.x, phase, PhaseSeed(seed, phase, q));
      out.repetition = q;
      for (Element e : out.picked) {
        if (!placed[e]) {
          placed[e] = true;
          order.push_back(e);
        }
      }
      result.phases.push_back(std::move(out));
    }
  }
  for (Element e = 0; e < n; ++e) {
    if (!placed[e]) {
      order.push_back(e);
      result.appended.push_back(e);
    }
  }
  result.permutation = *Permutation::Create(std::move(order), n);
  return result;
}

std::vector<double> GmscAgentCosts(const GmscInstance& instance,
                                   const Permutation& pi) {
  return EvaluateCover(instance.ToInstance(), pi).agent_costs;
}

std::string FractionalXCsv(const FractionalSolution& solution) {
  std::string out = "e,t,x\n";
  for (int e = 0; e < solution.n; ++e) {
    for (int t = 0; t < solution.n; ++t) {
      absl::StrAppendFormat(&out, "%d,%d,%.17g\n", e + 1, t + 1,
                            solution.x[e][t]);
    }
  }
  return out;
}

std::string FractionalYCsv(const FractionalSolution& solution) {
  std::string out = "set,t,y\n";
  for (size_t s = 0; s < solution.y.size(); ++s) {
    for (int t = 0; t < solution.n; ++t) {
      absl::StrAppendFormat(&out, "%d,%d,%.17g\n", s + 1, t + 1,
                            solution.y[s][t]);
    }
  }
  return out;
}

}  // namespace subrank
