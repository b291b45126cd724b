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

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "subrank/functions.h"
#include "subrank/instance.h"
#include "subrank/ranking.h"

namespace subrank {
namespace {

using ::testing::HasSubstr;

Permutation Perm(std::vector<Element> one_based) {
  for (Element& e : one_based) --e;
  const int n = static_cast<int>(one_based.size());
  return *Permutation::Create(std::move(one_based), n);
}

std::shared_ptr<const SubmodularFunction> TwoItemCoverage() {
  // e1 covers {a}, e2 covers {b}, equal weights.
  return *CoverageFunction::Create(2, {1, 1}, {{0}, {1}});
}

TEST(CoverTimeTest, AlreadyCoveredIsZero) {
  oracle::ConstantOne f(3);
  EXPECT_EQ(CoverTime(f, Perm({2, 3, 1})), 0);
}

TEST(CoverTimeTest, UnionCompleteAtTwo) {
  EXPECT_EQ(CoverTime(*TwoItemCoverage(), Perm({1, 2})), 2);
}

TEST(CoverTimeTest, HardFamilySingleton) {
  const Instance inst = *HardFamily(4, 0.01);
  // Agent 4's first function is the singleton for e5.
  const auto& f = *inst.agent(3).functions[0].function;
  EXPECT_EQ(CoverTime(f, Perm({4, 1, 2, 3, 5, 6})), 5);
}

TEST(AgentCostTest, Examples) {
  std::vector<Agent> agents(1);
  agents[0].functions.push_back({*SingletonFunction::Create(3, 2), 1.0});
  const Instance single = *Instance::Create(3, std::move(agents));
  EXPECT_DOUBLE_EQ(*AgentCost(single, 0, Perm({1, 2, 3})), 3.0);

  const Instance hard = *HardFamily(4, 0.01);
  const Permutation pi = Perm({4, 1, 2, 3, 5, 6});
  EXPECT_DOUBLE_EQ(*AgentCost(hard, 3, pi), 11.0);
  EXPECT_NEAR(*AgentCost(hard, 0, pi), 3.01, 1e-12);
}

TEST(AgentCostTest, UnknownAgent) {
  const Instance hard = *HardFamily(4, 0.01);
  EXPECT_FALSE(AgentCost(hard, 4, Permutation::Identity(6)).ok());
  EXPECT_FALSE(AgentCost(hard, -1, Permutation::Identity(6)).ok());
}

TEST(ObjectiveTest, HardFamilyExamples) {
  const Instance hard = *HardFamily(4, 0.01);
  EXPECT_DOUBLE_EQ(
      *Objective(hard, Perm({4, 1, 2, 3, 5, 6}), ObjectiveMode::kMinMax),
      11.0);
  EXPECT_NEAR(
      *Objective(hard, Perm({4, 5, 6, 1, 2, 3}), ObjectiveMode::kMinMax),
      7.05, 1e-12);
}

TEST(ObjectiveTest, SingleCoveredFunctionIsZero) {
  std::vector<Agent> agents(1);
  agents[0].functions.push_back({std::make_shared<oracle::ConstantOne>(2), 5});
  const Instance inst = *Instance::Create(2, std::move(agents));
  EXPECT_EQ(*Objective(inst, Perm({1, 2}), ObjectiveMode::kMinMax), 0.0);
  EXPECT_EQ(*Objective(inst, Perm({1, 2}), ObjectiveMode::kAverage), 0.0);
}

TEST(ObjectiveTest, EmptyAgentListIsAnError) {
  const Instance inst = *Instance::Create(2, {});
  EXPECT_FALSE(Objective(inst, Perm({1, 2}), ObjectiveMode::kMinMax).ok());
}

TEST(ObjectiveTest, AverageMode) {
  const Instance hard = *HardFamily(4, 0.01);
  const Permutation pi = Perm({4, 1, 2, 3, 5, 6});
  // Agents 1..3 pay 0.99 + 1.01 * (i + 1); agent 4 pays 11.
  const double expected =
      (0.99 * 3 + 1.01 * (2 + 3 + 4) + 11.0) / 4.0;
  EXPECT_NEAR(*Objective(hard, pi, ObjectiveMode::kAverage), expected, 1e-12);
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_FALSE(Permutation::Create({0, 0, 1}, 3).ok());
  EXPECT_FALSE(Permutation::Create({0, 1}, 3).ok());
  EXPECT_FALSE(Permutation::Create({0, 1, 3}, 3).ok());
  EXPECT_TRUE(Permutation::Create({2, 0, 1}, 3).ok());
  EXPECT_EQ(Perm({4, 1, 2, 3, 5, 6}).ToString(), "4 1 2 3 5 6");
}

TEST(InstanceTest, StructuralErrors) {
  EXPECT_FALSE(Instance::Create(0, {}).ok());
  std::vector<Agent> agents(1);
  agents[0].functions.push_back({*SingletonFunction::Create(3, 0), 1.0});
  EXPECT_FALSE(Instance::Create(4, agents).ok());
  agents[0].functions.push_back({nullptr, 1.0});
  EXPECT_FALSE(Instance::Create(3, agents).ok());
}

TEST(InstanceTest, EpsilonAndW) {
  std::vector<Agent> agents(2);
  agents[0].functions.push_back({*GmscFunction::Create(4, {{0, 1, 2}, 3}), 2});
  agents[0].functions.push_back({*SingletonFunction::Create(4, 3), 1.5});
  agents[1].functions.push_back({*GmscFunction::Create(4, {{0, 1}, 2}), 7});
  const Instance inst = *Instance::Create(4, std::move(agents));
  EXPECT_DOUBLE_EQ(inst.epsilon(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(inst.max_total_weight(), 7.0);
  EXPECT_EQ(inst.num_functions(), 3);
}

TEST(ValidateTest, WellFormedHardFamily) {
  EXPECT_TRUE(Validate(*HardFamily(9)).ok());
}

TEST(ValidateTest, WeightBelowOne) {
  std::vector<Agent> agents(1);
  agents[0].functions.push_back({*SingletonFunction::Create(2, 0), 0.0});
  const ValidationReport report =
      Validate(*Instance::Create(2, std::move(agents)));
  ASSERT_EQ(report.violations.size(), 1);
  EXPECT_THAT(report.violations[0], HasSubstr("weight < 1"));
}

TEST(ValidateTest, FullSetBelowOne) {
  // Item 2 (weight 1 of 10) is not coverable, so f(U) = 0.9.
  std::vector<Agent> agents(1);
  agents[0].functions.push_back(
      {*CoverageFunction::Create(2, {9, 1}, {{0}, {0}}), 1.0});
  const ValidationReport report =
      Validate(*Instance::Create(2, std::move(agents)));
  ASSERT_EQ(report.violations.size(), 1);
  EXPECT_THAT(report.violations[0], HasSubstr("f(U) ≠ 1"));
}

TEST(ValidateTest, FloatOracleFullSetBelowOne) {
  std::vector<Agent> agents(1);
  agents[0].functions.push_back(
      {std::make_shared<oracle::LambdaFunction>(
           3, [](const ElementSet& s) { return 0.3 * s.size(); }, 0.3),
       1.0});
  const ValidationReport report =
      Validate(*Instance::Create(3, std::move(agents)));
  ASSERT_FALSE(report.ok());
  EXPECT_THAT(report.violations[0], HasSubstr("f(U) ≠ 1"));
}

TEST(ValidateTest, SpotChecksNonSubmodularOracle) {
  // |S|^2 / n^2 is supermodular.
  std::vector<Agent> agents(1);
  agents[0].functions.push_back(
      {std::make_shared<oracle::LambdaFunction>(
           4,
           [](const ElementSet& s) { return s.size() * s.size() / 16.0; },
           1.0 / 16),
       1.0});
  const ValidationReport report =
      Validate(*Instance::Create(4, std::move(agents)));
  ASSERT_EQ(report.violations.size(), 1);
  EXPECT_THAT(report.violations[0], HasSubstr("not submodular"));
}

TEST(ValidateTest, AgentWithoutFunctions) {
  std::vector<Agent> agents(2);
  agents[0].functions.push_back({*SingletonFunction::Create(2, 0), 1.0});
  const ValidationReport report =
      Validate(*Instance::Create(2, std::move(agents)));
  ASSERT_EQ(report.violations.size(), 1);
  EXPECT_THAT(report.violations[0], HasSubstr("no functions"));
}

// Properties over seeded random coverage instances.

TEST(CoverPropertyTest, ReportMatchesPrefixOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const Instance inst = RandomCoverageInstance(n, 1 + trial % 3, 2, trial);
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Permutation pi = *Permutation::Create(order, n);
    const CoverReport report = EvaluateCover(inst, pi);
    for (int i = 0; i < inst.num_agents(); ++i) {
      for (size_t j = 0; j < inst.agent(i).functions.size(); ++j) {
        const auto& f = *inst.agent(i).functions[j].function;
        EXPECT_EQ(report.cover_times[i][j],
                  oracle::CoverTimeByPrefixes(f, order));
        EXPECT_EQ(report.cover_times[i][j], CoverTime(f, pi));
        EXPECT_LE(report.cover_times[i][j], n);
      }
    }
    EXPECT_DOUBLE_EQ(report.minmax, oracle::MinMaxByDefinition(inst, order));
    EXPECT_GE(report.minmax, report.average);
    EXPECT_GE(report.average, 0.0);
  }
}

TEST(CoverPropertyTest, CoverageIsMonotoneAlongPrefixes) {
  const Instance inst = RandomCoverageInstance(8, 3, 3, 11);
  const Permutation pi = RandomOrder(inst, 5);
  for (const Agent& agent : inst.agents()) {
    for (const WeightedFunction& wf : agent.functions) {
      ElementSet prefix(inst.n());
      bool covered = wf.function->IsCovered(prefix);
      for (int t = 0; t < pi.size(); ++t) {
        prefix.Insert(pi[t]);
        const bool now = wf.function->IsCovered(prefix);
        EXPECT_TRUE(now || !covered);
        covered = now;
      }
    }
  }
}

TEST(CoverPropertyTest, SwappingTailElementsKeepsObjectives) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = RandomCoverageInstance(9, 2, 2, seed);
    const Permutation pi = RandomOrder(inst, seed + 100);
    const CoverReport report = EvaluateCover(inst, pi);
    int last = 0;
    for (const auto& times : report.cover_times) {
      for (int t : times) last = std::max(last, t);
    }
    if (last + 2 > inst.n()) continue;
    std::vector<Element> swapped = pi.order();
    std::swap(swapped[last], swapped[inst.n() - 1]);
    const CoverReport after =
        EvaluateCover(inst, *Permutation::Create(swapped, inst.n()));
    EXPECT_EQ(after.minmax, report.minmax);
    EXPECT_EQ(after.average, report.average);
  }
}

TEST(CoverPropertyTest, NormalizedChainBound) {
  std::mt19937_64 rng(2024);
  const Instance inst = RandomCoverageInstance(8, 4, 3, 99);
  for (const Agent& agent : inst.agents()) {
    for (const WeightedFunction& wf : agent.functions) {
      const double bound =
          1.0 + std::log(1.0 / wf.function->MinNonzeroMarginal());
      for (int chain = 0; chain < 100; ++chain) {
        EXPECT_LE(oracle::NormalizedChainSum(*wf.function, rng), bound + 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace subrank
