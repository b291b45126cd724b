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

// subrank: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 verification failure.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "subrank/functions.h"
#include "subrank/gmsc.h"
#include "subrank/harness.h"
#include "subrank/instance.h"
#include "subrank/instance_io.h"
#include "subrank/ranking.h"
#include "subrank/verify.h"

namespace subrank {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

int Fail(int code, const absl::Status& status) {
  std::cerr << "subrank: " << status.message() << "\n";
  return code;
}

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Writes to `path`, or to stdout when path is empty or "-".
absl::Status Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return absl::OkStatus();
  }
  return WriteTextFile(path, text);
}

struct SolveFlags {
  std::string instance;
  std::string algo = "bag";
  double ratio = BagConfig{}.ratio;
  uint64_t seed = 0;
  std::string trace;
  std::string lp_out;
  std::string out;
};

std::string ObjectiveLines(const Instance& inst, const Permutation& pi) {
  const CoverReport report = EvaluateCover(inst, pi);
  return absl::StrFormat("permutation: %s\nminmax: %.6f\naverage: %.6f\n",
                         pi.ToString(), report.minmax, report.average);
}

int RunSolveGmsc(const SolveFlags& flags, const std::string& text) {
  if (!LooksLikeGmscJson(text)) {
    return Fail(kExitData, absl::InvalidArgumentError(
                               "--algo gmsc needs a GMSC instance file"));
  }
  const auto inst = ParseGmscJson(text);
  if (!inst.ok()) return Fail(kExitData, inst.status());
  const auto start = std::chrono::steady_clock::now();
  const auto sol = SolveLp(*inst);
  if (!sol.ok()) return Fail(kExitData, sol.status());
  const GmscScheduleResult schedule = GmscSchedule(*inst, *sol, flags.seed);
  const double ms = ElapsedMs(start);

  std::string out = absl::StrCat("algorithm: gmsc\n",
                                 ObjectiveLines(inst->ToInstance(),
                                                schedule.permutation));
  absl::StrAppendFormat(&out, "t_star: %.6f\ncuts: %d\nlp: %s\n", sol->t_star,
                        sol->cuts,
                        sol->converged ? std::string("converged")
                                       : sol->message);
  absl::StrAppendFormat(&out, "runtime_ms: %.3f\n", ms);
  if (!flags.lp_out.empty()) {
    std::filesystem::create_directories(flags.lp_out);
    const std::filesystem::path dir(flags.lp_out);
    if (absl::Status s =
            WriteTextFile((dir / "x.csv").string(), FractionalXCsv(*sol));
        !s.ok()) {
      return Fail(kExitData, s);
    }
    if (absl::Status s =
            WriteTextFile((dir / "y.csv").string(), FractionalYCsv(*sol));
        !s.ok()) {
      return Fail(kExitData, s);
    }
  }
  if (absl::Status s = Emit(flags.out, out); !s.ok()) return Fail(kExitData, s);
  return kExitOk;
}

int RunSolve(const SolveFlags& flags) {
  const auto text = ReadTextFile(flags.instance);
  if (!text.ok()) return Fail(kExitData, text.status());
  if (flags.algo == "gmsc") return RunSolveGmsc(flags, *text);

  const auto inst = LoadAnyInstance(flags.instance);
  if (!inst.ok()) return Fail(kExitData, inst.status());
  const ValidationReport validation = Validate(*inst);
  for (const std::string& v : validation.violations) {
    std::cerr << "warning: " << v << "\n";
  }
  if (inst->num_agents() == 0) {
    return Fail(kExitData, absl::InvalidArgumentError("instance has no agents"));
  }

  const auto start = std::chrono::steady_clock::now();
  std::optional<Permutation> pi;
  std::string extra;
  RunTrace trace;
  if (flags.algo == "random") {
    pi = RandomOrder(*inst, flags.seed);
  } else if (flags.algo == "greedy") {
    pi = Greedy(*inst);
  } else if (flags.algo == "ng") {
    pi = NormalizedGreedy(*inst);
  } else if (flags.algo == "bag") {
    BagConfig config;
    config.ratio = flags.ratio;
    config.trace = !flags.trace.empty();
    const auto result = BalancedAdaptiveGreedy(*inst, config);
    if (!result.ok()) return Fail(kExitUsage, result.status());
    pi = result->permutation;
    trace = result->trace;
  } else {
    const BruteForceResult result = BruteForceOpt(*inst);
    pi = result.permutation;
    extra = absl::StrCat("optimal: ", result.optimal ? "true" : "false",
                         "\nnodes: ", result.nodes, "\n");
  }
  const double ms = ElapsedMs(start);

  std::string out = absl::StrCat("algorithm: ", flags.algo, "\n",
                                 ObjectiveLines(*inst, *pi), extra);
  absl::StrAppendFormat(&out, "runtime_ms: %.3f\n", ms);
  if (!flags.trace.empty()) {
    if (flags.algo != "bag") {
      std::cerr << "warning: --trace applies to --algo bag only\n";
    } else if (absl::Status s = Emit(flags.trace, TraceToJsonLines(trace));
               !s.ok()) {
      return Fail(kExitData, s);
    }
  }
  if (absl::Status s = Emit(flags.out, out); !s.ok()) return Fail(kExitData, s);
  return kExitOk;
}

struct GenerateFlags {
  std::string family;
  int k = 4;
  double delta = kDefaultHardFamilyDelta;
  int n = 8;
  int m = 3;
  uint64_t seed = 0;
  std::string out;
};

int RunGenerate(const GenerateFlags& flags) {
  std::string text;
  if (flags.family == "hard") {
    const auto inst = HardFamily(flags.k, flags.delta);
    if (!inst.ok()) return Fail(kExitUsage, inst.status());
    const auto json = InstanceToJson(*inst);
    if (!json.ok()) return Fail(kExitData, json.status());
    text = *json;
  } else {
    if (flags.n < 1 || flags.k < 1 || flags.m < 1) {
      return Fail(kExitUsage,
                  absl::InvalidArgumentError("--n, --k and --m must be >= 1"));
    }
    if (flags.family == "coverage") {
      const auto json = InstanceToJson(
          RandomCoverageInstance(flags.n, flags.k, flags.m, flags.seed));
      if (!json.ok()) return Fail(kExitData, json.status());
      text = *json;
    } else {
      text = GmscToJson(
          RandomGmscInstance(flags.n, flags.k, flags.m, flags.seed));
    }
  }
  if (absl::Status s = Emit(flags.out, text); !s.ok()) return Fail(kExitData, s);
  return kExitOk;
}

struct ExperimentFlags {
  std::string config;
  std::string out = "results";
  std::optional<int> jobs;
  bool timing = false;
};

int RunExperiment(const ExperimentFlags& flags) {
  const auto text = ReadTextFile(flags.config);
  if (!text.ok()) return Fail(kExitData, text.status());
  const std::string base =
      std::filesystem::path(flags.config).parent_path().string();
  auto config = ParseExperimentConfig(*text, base);
  if (!config.ok()) return Fail(kExitData, config.status());
  if (flags.jobs.has_value()) config->jobs = *flags.jobs;
  if (flags.timing) config->timing = true;
  if (absl::Status s = config->Validate(); !s.ok()) return Fail(kExitUsage, s);

  const SweepResult result = Sweep(*config);
  for (const std::string& e : result.errors) std::cerr << "error: " << e << "\n";
  if (result.successful_cells == 0) {
    return Fail(kExitData, absl::FailedPreconditionError("no cell succeeded"));
  }

  std::error_code ec;
  std::filesystem::create_directories(flags.out, ec);
  if (ec) {
    return Fail(kExitData, absl::UnavailableError(absl::StrCat(
                               "cannot create '", flags.out, "'")));
  }
  const std::filesystem::path dir(flags.out);
  for (const DatasetSpec& dataset : config->datasets) {
    for (ObjectiveMode mode : config->modes) {
      std::vector<ResultRow> rows;
      for (const ResultRow& r : result.rows) {
        if (r.dataset == dataset.name && r.mode == mode) rows.push_back(r);
      }
      std::vector<SummaryRow> summary;
      for (const SummaryRow& r : result.summary) {
        if (r.dataset == dataset.name && r.mode == mode) summary.push_back(r);
      }
      if (rows.empty()) continue;
      const std::string mode_name(ObjectiveModeName(mode));
      const std::string stem = absl::StrCat(dataset.name, "_");
      for (const auto& [kind, csv] :
           {std::pair{"results", ResultsCsv(rows)},
            std::pair{"summary", SummaryCsv(summary)}}) {
        const std::string path =
            (dir / absl::StrCat(stem, kind, "_", mode_name, ".csv")).string();
        if (absl::Status s = WriteTextFile(path, csv); !s.ok()) {
          return Fail(kExitData, s);
        }
        std::cout << "wrote " << path << "\n";
      }
    }
  }
  return kExitOk;
}

struct BenchFlags {
  int n = 16;
  int k = 4;
  int m = 3;
  int runs = 20;
  uint64_t seed = 0;
  bool timing = false;
  std::string out;
};

int RunGmscBench(const BenchFlags& flags) {
  if (flags.n < 1 || flags.k < 1 || flags.m < 1 || flags.runs < 1) {
    return Fail(kExitUsage, absl::InvalidArgumentError(
                                "--n, --k, --m and --runs must be >= 1"));
  }
  std::string csv =
      "seed,t_star,cuts,rounds,pivots,converged,max_cost,cost_over_t_star,"
      "runtime_ms\n";
  for (int r = 0; r < flags.runs; ++r) {
    const uint64_t seed = flags.seed + r;
    const GmscInstance inst = RandomGmscInstance(flags.n, flags.k, flags.m, seed);
    const auto start = std::chrono::steady_clock::now();
    const auto sol = SolveLp(inst);
    if (!sol.ok()) return Fail(kExitData, sol.status());
    const GmscScheduleResult schedule = GmscSchedule(inst, *sol, seed);
    const double ms = flags.timing ? ElapsedMs(start) : 0.0;
    double worst = 0.0;
    for (double c : GmscAgentCosts(inst, schedule.permutation)) {
      worst = std::max(worst, c);
    }
    absl::StrAppendFormat(&csv, "%d,%.17g,%d,%d,%d,%d,%.17g,%.17g,%.17g\n",
                          seed, sol->t_star, sol->cuts, sol->rounds,
                          sol->pivots, sol->converged ? 1 : 0, worst,
                          worst / sol->t_star, ms);
  }
  if (absl::Status s = Emit(flags.out, csv); !s.ok()) return Fail(kExitData, s);
  return kExitOk;
}

int RunVerify(const std::string& suite_name) {
  const auto suite = ParseVerifySuite(suite_name);
  if (!suite.ok()) return Fail(kExitUsage, suite.status());
  const VerifyReport report = RunVerification(*suite);
  std::cout << report.ToString();
  return report.ok() ? kExitOk : kExitVerify;
}

int Main(int argc, char** argv) {
  uint64_t default_seed = 0;
  if (const char* env = std::getenv("SUBRANK_SEED"); env != nullptr) {
    if (!absl::SimpleAtoi(env, &default_seed)) {
      std::cerr << "subrank: SUBRANK_SEED is not an unsigned integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Multi-agent submodular ranking"};
  app.require_subcommand(1, 1);

  SolveFlags solve;
  solve.seed = default_seed;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Rank one instance");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON file")
      ->required();
  solve_cmd->add_option("--algo", solve.algo, "Ranking algorithm")
      ->check(CLI::IsMember({"random", "greedy", "ng", "bag", "brute", "gmsc"}))
      ->capture_default_str();
  solve_cmd->add_option("--ratio", solve.ratio, "Baseline ratio for bag")
      ->capture_default_str();
  solve_cmd
      ->add_option("--seed", solve.seed,
                   "Seed for random and gmsc (default $SUBRANK_SEED or 0)")
      ->capture_default_str();
  solve_cmd->add_option("--trace", solve.trace,
                        "Write the bag trace as JSON lines ('-' for stdout)");
  solve_cmd->add_option("--lp-out", solve.lp_out,
                        "Directory for the gmsc fractional solution CSVs");
  solve_cmd->add_option("--out", solve.out, "Write the report here");

  GenerateFlags generate;
  generate.seed = default_seed;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a generated instance");
  generate_cmd->add_option("--family", generate.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"hard", "coverage", "gmsc"}));
  generate_cmd->add_option("--k", generate.k, "Number of agents")
      ->capture_default_str();
  generate_cmd->add_option("--delta", generate.delta, "Hard-family delta")
      ->capture_default_str();
  generate_cmd->add_option("--n", generate.n, "Number of elements")
      ->capture_default_str();
  generate_cmd->add_option("--m", generate.m, "Functions or sets per agent")
      ->capture_default_str();
  generate_cmd->add_option("--seed", generate.seed, "Generator seed")
      ->capture_default_str();
  generate_cmd->add_option("--out", generate.out, "Output file (default stdout)");

  ExperimentFlags experiment;
  CLI::App* experiment_cmd =
      app.add_subcommand("experiment", "Run a parameter sweep");
  experiment_cmd->add_option("--config", experiment.config, "Sweep JSON config")
      ->required();
  experiment_cmd->add_option("--out", experiment.out, "Output directory")
      ->capture_default_str();
  experiment_cmd->add_option("--jobs", experiment.jobs,
                             "Worker threads (overrides the config)");
  experiment_cmd->add_flag("--timing", experiment.timing,
                           "Record wall-clock runtimes");

  BenchFlags bench;
  bench.seed = default_seed;
  CLI::App* bench_cmd = app.add_subcommand(
      "gmsc-bench", "LP rounding on random GMSC instances");
  bench_cmd->add_option("--n", bench.n, "Number of elements")
      ->capture_default_str();
  bench_cmd->add_option("--k", bench.k, "Number of agents")
      ->capture_default_str();
  bench_cmd->add_option("--m", bench.m, "Sets per agent")
      ->capture_default_str();
  bench_cmd->add_option("--runs", bench.runs, "Consecutive seeds to run")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "First seed")
      ->capture_default_str();
  bench_cmd->add_flag("--timing", bench.timing, "Record wall-clock runtimes");
  bench_cmd->add_option("--out", bench.out, "CSV file (default stdout)");

  std::string suite = "all";
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run built-in checks");
  verify_cmd->add_option("--suite", suite, "core, algorithms, gmsc or all")
      ->check(CLI::IsMember({"core", "algorithms", "gmsc", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*solve_cmd) return RunSolve(solve);
  if (*generate_cmd) return RunGenerate(generate);
  if (*experiment_cmd) return RunExperiment(experiment);
  if (*bench_cmd) return RunGmscBench(bench);
  return RunVerify(suite);
}

}  // namespace
}  // namespace subrank

int main(int argc, char** argv) { return subrank::Main(argc, argv); }
