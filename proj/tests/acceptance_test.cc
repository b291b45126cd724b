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

// Acceptance run. Prints one [PASS] or [FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "oracles.h"
#include "subrank/functions.h"
#include "subrank/gmsc.h"
#include "subrank/harness.h"
#include "subrank/instance.h"
#include "subrank/ranking.h"

namespace subrank {
namespace {

constexpr double kHardDelta = 0.01;
constexpr double kHardRatioFactor = 0.4;
constexpr double kEnvelopeTol = 1e-9;
constexpr double kChainTol = 1e-9;
constexpr double kSoundnessTol = 1e-6;
constexpr double kSeparationTol = 1e-9;
constexpr double kRoundingConstant = 1024.0;
constexpr double kRoundingSuccessRate = 0.75;

struct Outcome {
  bool passed = true;
  std::string detail;
  // Everything the criterion computed, in full precision.
  std::string csv;
  double seconds = 0.0;
  double budget_seconds = 0.0;

  void Fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string Fmt(double v) { return absl::StrFormat("%.17g", v); }

std::vector<Element> ZeroBased(std::initializer_list<std::vector<int>> parts) {
  std::vector<Element> out;
  for (const auto& part : parts) {
    for (int label : part) out.push_back(label - 1);
  }
  return out;
}

std::vector<int> Range(int first, int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

Outcome HardFamilyExactness() {
  Outcome out;
  out.budget_seconds = 1.0;
  out.csv = "k,ng_minmax,agent_k_cost,witness_minmax,ratio\n";
  for (int k : {4, 9, 16, 25}) {
    const int r = static_cast<int>(std::lround(std::sqrt(k)));
    const Instance inst = *HardFamily(k, kHardDelta);
    const Permutation ng = NormalizedGreedy(inst);
    const std::vector<Element> expected =
        ZeroBased({{k}, Range(1, k - 1), Range(k + 1, k + r)});
    if (ng.order() != expected) out.Fail(absl::StrCat("k = ", k, ": NG order"));

    const int64_t expected_cost = int64_t{r} * r * r + r * (r + 1) / 2;
    const double agent_k = *AgentCost(inst, k - 1, ng);
    if (agent_k != static_cast<double>(expected_cost)) {
      out.Fail(absl::StrCat("k = ", k, ": agent k cost ", agent_k, " != ",
                            expected_cost));
    }
    const Permutation witness = *Permutation::Create(
        ZeroBased({{k}, Range(k + 1, k + r), Range(1, k - 1)}), inst.n());
    const double witness_cost = EvaluateCover(inst, witness).minmax;
    const double witness_bound =
        (r - 1 - kHardDelta) + (1 + kHardDelta) * (k + r);
    if (witness_cost > witness_bound + kEnvelopeTol) {
      out.Fail(absl::StrCat("k = ", k, ": witness above bound"));
    }
    const double ng_cost = EvaluateCover(inst, ng).minmax;
    const double ratio = ng_cost / witness_cost;
    if (k >= 16 && ratio < kHardRatioFactor * r) {
      out.Fail(absl::StrCat("k = ", k, ": ratio ", ratio, " < 0.4 sqrt(k)"));
    }
    absl::StrAppend(&out.csv, k, ",", Fmt(ng_cost), ",", Fmt(agent_k), ",",
                    Fmt(witness_cost), ",", Fmt(ratio), "\n");
    if (k == 25) {
      out.detail = absl::StrFormat("k = 25: agent k cost %g, NG/witness %.3f",
                                   agent_k, ratio);
    }
  }
  return out;
}

Outcome BagBeatsNg() {
  Outcome out;
  out.budget_seconds = 1.0;
  const Instance inst = *HardFamily(9, kHardDelta);
  const double bag =
      EvaluateCover(inst, BalancedAdaptiveGreedy(inst)->permutation).minmax;
  const double ng = EvaluateCover(inst, NormalizedGreedy(inst)).minmax;
  out.detail = absl::StrFormat("BAG %g, NG %g", bag, ng);
  if (bag != 17.0 || ng != 33.0) out.Fail(out.detail + " (want 17, 33)");
  out.csv = absl::StrCat("bag,ng\n", Fmt(bag), ",", Fmt(ng), "\n");
  return out;
}

Outcome ApproximationEnvelopes() {
  Outcome out;
  out.budget_seconds = 120.0;
  out.csv = "seed,n,k,m,opt,ng,bag,greedy\n";
  double worst_ng = 0.0;
  double worst_bag = 0.0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 3 + seed % 5;
    const int k = 1 + seed % 3;
    const int m = 1 + (seed / 5) % 3;
    const Instance inst = RandomCoverageInstance(n, k, m, 1000 + seed);
    const BruteForceResult opt = BruteForceOpt(inst);
    if (!opt.optimal) {
      out.Fail(absl::StrCat("seed ", seed, ": brute force did not finish"));
      continue;
    }
    const double log_eps = std::log(1.0 / inst.epsilon());
    const double ng = EvaluateCover(inst, NormalizedGreedy(inst)).minmax;
    const double bag =
        EvaluateCover(inst, BalancedAdaptiveGreedy(inst)->permutation).minmax;
    const double greedy = EvaluateCover(inst, Greedy(inst)).minmax;
    const double ng_bound = (4 * k * log_eps + 8 * k) * opt.value;
    const double w = std::ceil(inst.max_total_weight());
    const double bag_bound = 12 * (1 + log_eps) *
                             std::log2(std::min<double>(n, w) + 1) *
                             std::log2(k + 1) * opt.value;
    if (ng > ng_bound + kEnvelopeTol) {
      out.Fail(absl::StrCat("seed ", seed, ": NG above envelope"));
    }
    if (bag > bag_bound + kEnvelopeTol) {
      out.Fail(absl::StrCat("seed ", seed, ": BAG above envelope"));
    }
    if (ng < opt.value - kEnvelopeTol || bag < opt.value - kEnvelopeTol) {
      out.Fail(absl::StrCat("seed ", seed, ": heuristic below OPT"));
    }
    worst_ng = std::max(worst_ng, ng / opt.value);
    worst_bag = std::max(worst_bag, bag / opt.value);
    absl::StrAppend(&out.csv, seed, ",", n, ",", k, ",", m, ",",
                    Fmt(opt.value), ",", Fmt(ng), ",", Fmt(bag), ",",
                    Fmt(greedy), "\n");
  }
  if (out.passed) {
    out.detail = absl::StrFormat("50 instances, worst NG/OPT %.3f, BAG/OPT %.3f",
                                 worst_ng, worst_bag);
  }
  return out;
}

Outcome ChainBound() {
  Outcome out;
  out.budget_seconds = 10.0;
  out.csv = "family,chain,sum,bound\n";
  std::vector<std::pair<std::string, std::vector<WeightedFunction>>> families;
  auto collect = [&](const std::string& name, const Instance& inst) {
    auto& list = families.emplace_back(name, std::vector<WeightedFunction>{});
    for (const Agent& a : inst.agents()) {
      for (const WeightedFunction& wf : a.functions) list.second.push_back(wf);
    }
  };
  collect("coverage", RandomCoverageInstance(10, 3, 3, 11));
  collect("odt", BuildInstance(SyntheticTable(300, 12, 6, 2), 3, 6, 2)->instance);
  collect("gmsc", RandomGmscInstance(10, 3, 3, 12).ToInstance());
  collect("singleton", *HardFamily(9, kHardDelta));

  std::mt19937_64 rng(2024);
  double worst = -1e300;
  for (const auto& [name, functions] : families) {
    for (int chain = 0; chain < 100; ++chain) {
      const SubmodularFunction& f = *functions[chain % functions.size()].function;
      const double bound = 1.0 + std::log(1.0 / f.MinNonzeroMarginal());
      const double sum = oracle::NormalizedChainSum(f, rng);
      worst = std::max(worst, sum - bound);
      if (sum > bound + kChainTol) {
        out.Fail(absl::StrCat(name, " chain ", chain, ": sum above bound"));
      }
      absl::StrAppend(&out.csv, name, ",", chain, ",", Fmt(sum), ",",
                      Fmt(bound), "\n");
    }
  }
  if (out.passed) {
    out.detail = absl::StrFormat("400 chains, max(sum - bound) = %.3g", worst);
  }
  return out;
}

Outcome LpSoundness() {
  Outcome out;
  out.budget_seconds = 120.0;
  out.csv = "seed,n,k,t_star,opt,cuts\n";
  double worst = 0.0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + seed % 6;
    const int k = 1 + seed % 3;
    const GmscInstance inst = RandomGmscInstance(n, k, 2 + seed % 2, 500 + seed);
    const auto sol = SolveLp(inst);
    if (!sol.ok() || !sol->converged) {
      out.Fail(absl::StrCat("seed ", seed, ": LP did not converge"));
      continue;
    }
    const BruteForceResult opt = BruteForceOpt(inst.ToInstance());
    if (!opt.optimal) {
      out.Fail(absl::StrCat("seed ", seed, ": brute force did not finish"));
      continue;
    }
    if (sol->t_star > opt.value + kSoundnessTol) {
      out.Fail(absl::StrCat("seed ", seed, ": T* ", sol->t_star, " > OPT ",
                            opt.value));
    }
    for (int i = 0; i < inst.num_agents(); ++i) {
      double sum = 0.0;
      for (int s : inst.sets_of(i)) sum += TStar(sol->y[s]);
      if (sol->t_star < 0.5 * sum - kSoundnessTol) {
        out.Fail(absl::StrCat("seed ", seed, " agent ", i + 1,
                              ": T* below half the t* sum"));
      }
    }
    worst = std::max(worst, sol->t_star / opt.value);
    absl::StrAppend(&out.csv, seed, ",", n, ",", k, ",", Fmt(sol->t_star), ",",
                    Fmt(opt.value), ",", sol->cuts, "\n");
  }
  if (out.passed) {
    out.detail = absl::StrFormat("20 instances, max T*/OPT = %.4f", worst);
  }
  return out;
}

Outcome SeparationExactness() {
  Outcome out;
  out.budget_seconds = 30.0;
  out.csv = "trial,size,K,t,y,oracle,exhaustive\n";
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int kN = 12;
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    // x with unit rows; prefix masses then lie in [0, 1].
    std::vector<std::vector<double>> x(kN, std::vector<double>(kN));
    for (auto& row : x) {
      double total = 0.0;
      for (double& v : row) total += v = unit(rng) * unit(rng);
      for (double& v : row) v /= total;
    }
    const auto prefix = PrefixMass(x);
    const int size = 1 + static_cast<int>(rng() % kN);
    std::vector<Element> all(kN);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    GmscSet set;
    set.members.assign(all.begin(), all.begin() + size);
    std::sort(set.members.begin(), set.members.end());
    set.requirement = 1 + static_cast<int>(rng() % size);
    const int t = 1 + static_cast<int>(rng() % kN);
    const double y = unit(rng);
    std::vector<double> member_prefix;
    for (Element e : set.members) member_prefix.push_back(prefix[e][t - 1]);

    const ViolatedConstraint got = MostViolatedSubset(set, member_prefix, y);
    const double want =
        oracle::ExhaustiveMaxViolation(set.requirement, member_prefix, y);
    // The returned B must realize the reported value.
    double realized = (set.requirement - static_cast<double>(got.b.size())) * y;
    for (size_t i = 0; i < set.members.size(); ++i) {
      if (std::find(got.b.begin(), got.b.end(), set.members[i]) == got.b.end()) {
        realized -= member_prefix[i];
      }
    }
    const double err = std::max(std::abs(got.violation - want),
                                std::abs(realized - want));
    worst = std::max(worst, err);
    if (err > kSeparationTol) {
      out.Fail(absl::StrCat("trial ", trial, ": oracle ", got.violation,
                            " vs exhaustive ", want));
    }
    absl::StrAppend(&out.csv, trial, ",", size, ",", set.requirement, ",", t,
                    ",", Fmt(y), ",", Fmt(got.violation), ",", Fmt(want), "\n");
  }
  if (out.passed) {
    out.detail = absl::StrFormat("500 checks, max error %.3g", worst);
  }
  return out;
}

Outcome RoundingEnvelope() {
  Outcome out;
  out.budget_seconds = 300.0;
  out.csv = "seed,t_star,max_cost,within\n";
  constexpr int kN = 16;
  constexpr int kK = 4;
  constexpr int kM = 3;
  constexpr int kSeeds = 200;
  const double factor = kRoundingConstant * std::log2(kK);
  int within = 0;
  double worst_ratio = 0.0;
  for (uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const GmscInstance inst = RandomGmscInstance(kN, kK, kM, seed);
    const auto sol = SolveLp(inst);
    if (!sol.ok() || !sol->converged) {
      out.Fail(absl::StrCat("seed ", seed, ": LP did not converge"));
      continue;
    }
    const GmscScheduleResult schedule = GmscSchedule(inst, *sol, seed);
    if (!Permutation::Create(schedule.permutation.order(), kN).ok()) {
      out.Fail(absl::StrCat("seed ", seed, ": output is not a permutation"));
    }
    for (const PhaseOutput& p : schedule.phases) {
      if (static_cast<int64_t>(p.picked.size()) > PhaseCap(p.phase)) {
        out.Fail(absl::StrCat("seed ", seed, ": phase ", p.phase,
                              " above the cap"));
      }
    }
    const std::vector<double> costs =
        GmscAgentCosts(inst, schedule.permutation);
    const double worst = *std::max_element(costs.begin(), costs.end());
    const bool ok = worst <= factor * sol->t_star;
    within += ok ? 1 : 0;
    worst_ratio = std::max(worst_ratio, worst / sol->t_star);
    absl::StrAppend(&out.csv, seed, ",", Fmt(sol->t_star), ",", Fmt(worst), ",",
                    ok ? 1 : 0, "\n");
  }
  const double rate = static_cast<double>(within) / kSeeds;
  if (rate < kRoundingSuccessRate) {
    out.Fail(absl::StrFormat("only %.1f%% within the envelope", 100 * rate));
  }
  if (out.passed) {
    out.detail = absl::StrFormat(
        "%d/%d within 1024 log2(k) T*, worst cost/T* = %.3f", within, kSeeds,
        worst_ratio);
  }
  return out;
}

Outcome ExperimentTrend() {
  Outcome out;
  out.budget_seconds = 600.0;
  ExperimentConfig config;  // K = M = 10, seeds 1..4, synthetic fallback
  config.datasets.push_back(
      {.name = "synthetic", .synthetic = DatasetSpec::Synthetic{}});
  const SweepResult result = Sweep(config);
  for (const std::string& e : result.errors) out.Fail(e);
  out.csv = absl::StrCat(ResultsCsv(result.rows), SummaryCsv(result.summary));
  std::vector<std::string> parts;
  for (ObjectiveMode mode : config.modes) {
    double random = NAN, ng = NAN, bag = NAN;
    for (const SummaryRow& r : result.summary) {
      if (r.mode != mode) continue;
      const double v = mode == ObjectiveMode::kMinMax ? r.objective_minmax
                                                      : r.objective_avg;
      if (r.algorithm == "random") random = v;
      if (r.algorithm == "ng") ng = v;
      if (r.algorithm == "bag") bag = v;
    }
    const std::string name(ObjectiveModeName(mode));
    if (!(bag <= ng && ng <= random)) {
      out.Fail(absl::StrFormat("%s: BAG %.2f, NG %.2f, Random %.2f", name, bag,
                               ng, random));
    }
    parts.push_back(absl::StrFormat("%s BAG %.2f <= NG %.2f <= Random %.2f",
                                    name, bag, ng, random));
  }
  if (out.passed) out.detail = absl::StrCat(parts[0], "; ", parts[1]);
  return out;
}

using Criterion = std::function<Outcome()>;

struct Entry {
  const char* name;
  Criterion run;
};

const std::vector<Entry>& Criteria() {
  static const std::vector<Entry> entries = {
      {"hard-family exactness", HardFamilyExactness},
      {"BAG beats NG on the hard family", BagBeatsNg},
      {"approximation envelopes", ApproximationEnvelopes},
      {"normalized-gain chain bound", ChainBound},
      {"GMSC LP soundness", LpSoundness},
      {"separation oracle exactness", SeparationExactness},
      {"GMSC rounding envelope", RoundingEnvelope},
      {"experiment trend", ExperimentTrend},
  };
  return entries;
}

Outcome Timed(const Criterion& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = run();
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (out.seconds > out.budget_seconds) {
    out.Fail(absl::StrFormat("took %.1f s, budget %.0f s", out.seconds,
                             out.budget_seconds));
  }
  return out;
}

void Report(int index, const char* name, const Outcome& out) {
  std::printf("[%s] %d. %s: %s (%.2f s)\n", out.passed ? "PASS" : "FAIL",
              index, name, out.detail.c_str(), out.seconds);
  std::fflush(stdout);
}

}  // namespace
}  // namespace subrank

int main() {
  using namespace subrank;
  const auto& criteria = Criteria();
  std::vector<std::string> first_csv;
  bool all_passed = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Outcome out = Timed(criteria[i].run);
    Report(static_cast<int>(i + 1), criteria[i].name, out);
    all_passed = all_passed && out.passed;
    first_csv.push_back(out.csv);
  }

  Outcome determinism;
  const auto start = std::chrono::steady_clock::now();
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (criteria[i].run().csv != first_csv[i]) {
      determinism.Fail(absl::StrCat("criterion ", i + 1, " output differs"));
    }
  }
  determinism.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (determinism.passed) {
    size_t bytes = 0;
    for (const std::string& csv : first_csv) bytes += csv.size();
    determinism.detail =
        absl::StrCat("criteria 1-8 rerun, ", bytes, " CSV bytes identical");
  }
  Report(9, "determinism", determinism);
  all_passed = all_passed && determinism.passed;
  return all_passed ? 0 : 1;
}
