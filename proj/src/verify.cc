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

#include "subrank/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "subrank/functions.h"
#include "subrank/gmsc.h"
#include "subrank/harness.h"
#include "subrank/instance.h"
#include "subrank/ranking.h"

namespace subrank {

absl::StatusOr<VerifySuite> ParseVerifySuite(std::string_view name) {
  if (name == "core") return VerifySuite::kCore;
  if (name == "algorithms") return VerifySuite::kAlgorithms;
  if (name == "gmsc") return VerifySuite::kGmsc;
  if (name == "all") return VerifySuite::kAll;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown suite '", std::string(name), "'"));
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::ToString() const {
  std::string out;
  for (const CheckResult& c : checks) {
    absl::StrAppend(&out, c.passed ? "[PASS] " : "[FAIL] ", c.suite, "/",
                    c.name, c.detail.empty() ? "" : ": ", c.detail, "\n");
  }
  return out;
}

namespace {

// A check returns "" on success and a failure description otherwise.
using Check = std::function<std::string(std::string& detail)>;

std::vector<Element> Labels(const Permutation& pi) {
  std::vector<Element> out;
  for (Element e : pi.order()) out.push_back(e + 1);
  return out;
}

int CoverTimeFromScratch(const SubmodularFunction& f, const Permutation& pi) {
  for (int t = 0; t <= pi.size(); ++t) {
    ElementSet prefix(pi.size());
    for (int s = 0; s < t; ++s) prefix.Insert(pi[s]);
    if (f.IsCovered(prefix)) return t;
  }
  return pi.size();
}

std::vector<Instance> GoldenInstances() {
  std::vector<Instance> out;
  for (int k : {9, 16}) out.push_back(*HardFamily(k));
  for (uint64_t seed = 0; seed < 5; ++seed) {
    out.push_back(RandomCoverageInstance(6 + seed, 1 + seed % 3, 3, seed));
  }
  out.push_back(RandomGmscInstance(8, 3, 3, 1).ToInstance());
  out.push_back(BuildInstance(SyntheticTable(400, 12, 6, 1), 4, 8, 1)->instance);
  return out;
}

std::string CoreHardFamilyCosts(std::string& detail) {
  const Instance inst = *HardFamily(4, 0.01);
  const Permutation ng = *Permutation::Create({3, 0, 1, 2, 4, 5}, 6);
  const Permutation witness = *Permutation::Create({3, 4, 5, 0, 1, 2}, 6);
  const double agent4 = *AgentCost(inst, 3, ng);
  const double agent1 = *AgentCost(inst, 0, ng);
  const double minmax = EvaluateCover(inst, witness).minmax;
  detail = absl::StrFormat("agent 4 = %g, agent 1 = %g, witness = %g", agent4,
                           agent1, minmax);
  if (agent4 != 11.0 || std::abs(agent1 - 3.01) > 1e-12 ||
      std::abs(minmax - 7.05) > 1e-12) {
    return "unexpected cost";
  }
  return "";
}

std::string CoreGoldenValidate(std::string& detail) {
  const std::vector<Instance> golden = GoldenInstances();
  for (size_t i = 0; i < golden.size(); ++i) {
    const ValidationReport report = Validate(golden[i]);
    if (!report.ok()) {
      return absl::StrCat("instance ", i + 1, ": ", report.violations[0]);
    }
  }
  detail = absl::StrCat(golden.size(), " instances");
  return "";
}

std::string CoreCoverTimes(std::string& detail) {
  int checked = 0;
  for (const Instance& inst : GoldenInstances()) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
      const Permutation pi = RandomOrder(inst, seed);
      const CoverReport report = EvaluateCover(inst, pi);
      for (int i = 0; i < inst.num_agents(); ++i) {
        double cost = 0.0;
        for (size_t j = 0; j < inst.agent(i).functions.size(); ++j) {
          const WeightedFunction& wf = inst.agent(i).functions[j];
          const int t = CoverTimeFromScratch(*wf.function, pi);
          if (t != report.cover_times[i][j]) return "cover time mismatch";
          cost += wf.weight * t;
          ++checked;
        }
        if (std::abs(cost - report.agent_costs[i]) > 1e-9 * (1 + cost)) {
          return "agent cost mismatch";
        }
      }
    }
  }
  detail = absl::StrCat(checked, " cover times");
  return "";
}

std::string CoreChainBound(std::string& detail) {
  std::mt19937_64 rng(4);
  double worst_gap = -1e300;
  for (const Instance& inst : GoldenInstances()) {
    for (const Agent& agent : inst.agents()) {
      for (const WeightedFunction& wf : agent.functions) {
        const SubmodularFunction& f = *wf.function;
        const double bound = 1.0 + std::log(1.0 / f.MinNonzeroMarginal());
        for (int chain = 0; chain < 20; ++chain) {
          std::vector<Element> order(f.num_elements());
          std::iota(order.begin(), order.end(), 0);
          std::shuffle(order.begin(), order.end(), rng);
          ElementSet current(f.num_elements());
          double sum = 0.0;
          for (Element e : order) {
            const double before = f.Value(current);
            if (before >= 1.0 - kCoverTol) break;
            current.Insert(e);
            sum += (f.Value(current) - before) / (1.0 - before);
          }
          worst_gap = std::max(worst_gap, sum - bound);
          if (sum > bound + 1e-9) return "chain sum above bound";
        }
      }
    }
  }
  detail = absl::StrFormat("max(sum - bound) = %.4f", worst_gap);
  return "";
}

std::string AlgorithmsHardFamilyOrder(std::string& detail) {
  for (int k : {4, 9, 16, 25}) {
    const int root = static_cast<int>(std::lround(std::sqrt(k)));
    std::vector<Element> expected = {k};
    for (int i = 1; i < k; ++i) expected.push_back(i);
    for (int i = 1; i <= root; ++i) expected.push_back(k + i);
    const Instance inst = *HardFamily(k);
    if (Labels(NormalizedGreedy(inst)) != expected) {
      return absl::StrCat("k = ", k, ": normalized greedy order differs");
    }
  }
  detail = "k in {4, 9, 16, 25}";
  return "";
}

std::string AlgorithmsBagVersusNg(std::string& detail) {
  const Instance inst = *HardFamily(9, 0.01);
  const double bag =
      EvaluateCover(inst, BalancedAdaptiveGreedy(inst)->permutation).minmax;
  const double ng = EvaluateCover(inst, NormalizedGreedy(inst)).minmax;
  detail = absl::StrFormat("bag = %g, ng = %g", bag, ng);
  return bag == 17.0 && ng == 33.0 ? "" : "unexpected objective";
}

std::string AlgorithmsExactEnvelopes(std::string& detail) {
  int count = 0;
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const int k = 1 + seed % 3;
    const Instance inst = RandomCoverageInstance(3 + seed % 4, k, 3, seed);
    const BruteForceResult opt = BruteForceOpt(inst);
    if (!opt.optimal) return "brute force hit the node limit";
    const double log_eps = std::log(1.0 / inst.epsilon());
    const double ng = EvaluateCover(inst, NormalizedGreedy(inst)).minmax;
    const double bag =
        EvaluateCover(inst, BalancedAdaptiveGreedy(inst)->permutation).minmax;
    const double greedy = EvaluateCover(inst, Greedy(inst)).minmax;
    const double random = EvaluateCover(inst, RandomOrder(inst, seed)).minmax;
    const double tol = 1e-9 * (1 + opt.value);
    if (std::min({ng, bag, greedy, random}) < opt.value - tol) {
      return absl::StrCat("seed ", seed, ": heuristic below optimum");
    }
    if (ng > (4 * k * log_eps + 8 * k) * opt.value + tol) {
      return absl::StrCat("seed ", seed, ": normalized greedy envelope");
    }
    const double w = std::ceil(inst.max_total_weight());
    if (bag > 12 * (1 + log_eps) *
                  std::log2(std::min<double>(inst.n(), w) + 1) *
                  std::log2(k + 1) * opt.value + tol) {
      return absl::StrCat("seed ", seed, ": balanced greedy envelope");
    }
    ++count;
  }
  detail = absl::StrCat(count, " instances");
  return "";
}

std::string AlgorithmsBagTrace(std::string& detail) {
  int iterations = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = RandomCoverageInstance(9, 2 + seed % 5, 3, seed);
    BagConfig config;
    config.trace = true;
    const BagResult result = *BalancedAdaptiveGreedy(inst, config);
    const double factor = 1.0 + std::log(1.0 / inst.epsilon());
    for (const BagIteration& it : result.trace.iterations) {
      ++iterations;
      if (it.active_at_end.size() >= config.drop_fraction * it.frozen.size()) {
        return absl::StrCat("seed ", seed, ": inner loop stopped early");
      }
      if (it.score_sum >
          factor * it.frozen.size() * it.previous_baseline + 1e-9) {
        return absl::StrCat("seed ", seed, ": score sum above bound");
      }
    }
  }
  detail = absl::StrCat(iterations, " inner iterations");
  return "";
}

std::string GmscSeparation(std::string& detail) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int size = 1 + rng() % 12;
    GmscSet set;
    std::vector<double> prefix(size);
    for (int i = 0; i < size; ++i) {
      set.members.push_back(i);
      prefix[i] = unit(rng);
    }
    set.requirement = 1 + rng() % size;
    const double y = unit(rng);
    double best = -1e300;
    for (uint32_t mask = 0; mask < (uint32_t{1} << size); ++mask) {
      double outside = 0.0;
      int inside = 0;
      for (int i = 0; i < size; ++i) {
        if (mask >> i & 1) {
          ++inside;
        } else {
          outside += prefix[i];
        }
      }
      best = std::max(best, (set.requirement - inside) * y - outside);
    }
    const double got = MostViolatedSubset(set, prefix, y).violation;
    if (std::abs(got - best) > 1e-9) {
      return absl::StrCat("trial ", trial, ": oracle ", got, " vs ", best);
    }
  }
  detail = "300 random (S, x, y)";
  return "";
}

std::string GmscLpSoundness(std::string& detail) {
  double worst_ratio = 0.0;
  for (uint64_t seed = 0; seed < 8; ++seed) {
    const GmscInstance inst =
        RandomGmscInstance(3 + seed % 4, 1 + seed % 3, 2, seed);
    const auto sol = SolveLp(inst);
    if (!sol.ok()) return std::string(sol.status().message());
    if (!sol->converged) return sol->message;
    if (SeparationOracle(inst, sol->x, sol->y).has_value()) {
      return absl::StrCat("seed ", seed, ": violated cut remains");
    }
    const double opt = BruteForceOpt(inst.ToInstance()).value;
    if (sol->t_star > opt + 1e-6) {
      return absl::StrCat("seed ", seed, ": T* above integer optimum");
    }
    worst_ratio = std::max(worst_ratio, sol->t_star / opt);
    for (int i = 0; i < inst.num_agents(); ++i) {
      double half = 0.0;
      for (int s : inst.sets_of(i)) half += 0.5 * TStar(sol->y[s]);
      if (sol->t_star < half - 1e-6) {
        return absl::StrCat("seed ", seed, ": T* below half the t* sum");
      }
    }
  }
  detail = absl::StrFormat("max T*/OPT = %.4f", worst_ratio);
  return "";
}

std::string GmscScheduleCheck(std::string& detail) {
  int phases = 0;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const GmscInstance inst = RandomGmscInstance(10, 4, 3, seed);
    const FractionalSolution sol = *SolveLp(inst);
    const GmscScheduleResult a = GmscSchedule(inst, sol, seed);
    const GmscScheduleResult b = GmscSchedule(inst, sol, seed);
    if (!(a.permutation == b.permutation)) return "schedule not deterministic";
    for (const PhaseOutput& p : a.phases) {
      ++phases;
      if (!p.emptied &&
          static_cast<int64_t>(p.picked.size()) > PhaseCap(p.phase)) {
        return "phase above cap";
      }
    }
  }
  detail = absl::StrCat(phases, " phases");
  return "";
}

void Run(const std::string& suite, const std::string& name, const Check& check,
         VerifyReport& report) {
  CheckResult result{suite, name, false, ""};
  std::string detail;
  const std::string failure = check(detail);
  result.passed = failure.empty();
  result.detail = failure.empty() ? detail : failure;
  report.checks.push_back(std::move(result));
}

}  // namespace

VerifyReport RunVerification(VerifySuite suite) {
  VerifyReport report;
  const bool all = suite == VerifySuite::kAll;
  if (all || suite == VerifySuite::kCore) {
    Run("core", "hard-family-costs", CoreHardFamilyCosts, report);
    Run("core", "golden-validate", CoreGoldenValidate, report);
    Run("core", "cover-times", CoreCoverTimes, report);
    Run("core", "chain-bound", CoreChainBound, report);
  }
  if (all || suite == VerifySuite::kAlgorithms) {
    Run("algorithms", "hard-family-order", AlgorithmsHardFamilyOrder, report);
    Run("algorithms", "bag-vs-ng", AlgorithmsBagVersusNg, report);
    Run("algorithms", "exact-envelopes", AlgorithmsExactEnvelopes, report);
    Run("algorithms", "bag-trace", AlgorithmsBagTrace, report);
  }
  if (all || suite == VerifySuite::kGmsc) {
    Run("gmsc", "separation-oracle", GmscSeparation, report);
    Run("gmsc", "lp-soundness", GmscLpSoundness, report);
    Run("gmsc", "schedule", GmscScheduleCheck, report);
  }
  return report;
}

}  // namespace subrank
