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

// Experiment harness: CSV ingestion, discretization, decision-tree instance
// construction, ratio tuning and parameter sweeps.

#ifndef SUBRANK_HARNESS_H_
#define SUBRANK_HARNESS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "subrank/functions.h"
#include "subrank/instance.h"

namespace subrank {

struct DataTable {
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> rows;
  int dropped_rows = 0;
  std::vector<std::string> skipped_columns;
  std::vector<std::string> warnings;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_columns() const { return static_cast<int>(column_names.size()); }
};

struct IngestOptions {
  // Column names dropped before parsing.
  std::vector<std::string> exclude_columns;
};

// Reads a CSV file with a header row. Columns whose first data cell is not
// numeric are label columns and are skipped. Rows with any other
// non-numeric or empty cell are dropped and counted.
absl::StatusOr<DataTable> IngestCsv(const std::string& path,
                                    const IngestOptions& options = {});
absl::StatusOr<DataTable> ParseCsv(const std::string& text,
                                   const IngestOptions& options = {});

inline constexpr int kDefaultMaxValues = 10;

// Columns with at most max_values distinct values are kept; the others are
// replaced by equal-frequency bin labels 0, 1, ... (consecutive).
DataTable Discretize(const DataTable& table, int max_values = kDefaultMaxValues);

// Real-valued table with Gaussian clusters, then discretized; used when no
// dataset file is available.
DataTable SyntheticTable(int rows, int columns, int clusters, uint64_t seed);

// Seed of an independent stream derived from a master seed.
uint64_t SplitSeed(uint64_t master, uint64_t stream, uint64_t a = 0,
                   uint64_t b = 0);

enum SeedStream : uint64_t {
  kRowStream = 1,
  kWeightStream = 2,
  kAlgorithmStream = 3,
};

struct BuiltInstance {
  Instance instance;
  std::vector<int> rows;  // sampled hypothesis rows, 0-based
  std::shared_ptr<const OdtTable> table;
};

// Samples M distinct rows as hypotheses. Every agent gets the same M
// decision-tree functions over all columns with its own weights drawn
// uniformly from [1, 100].
absl::StatusOr<BuiltInstance> BuildInstance(const DataTable& table, int k,
                                            int m, uint64_t seed);

std::vector<double> DefaultRatioGrid();

struct TunedRatio {
  double ratio = 0.0;
  double objective = 0.0;
};

// Grid values outside (0, 1) are ignored. Ties go to the smaller ratio.
absl::StatusOr<TunedRatio> TuneRatio(const Instance& instance,
                                     const std::vector<double>& grid,
                                     ObjectiveMode mode);

struct DatasetSpec {
  std::string name;
  // Exactly one source: a CSV path, a synthetic table, or the hard family.
  std::string path;
  std::vector<std::string> exclude_columns;
  struct Synthetic {
    int rows = 2000;
    int columns = 22;
    int clusters = 12;
    uint64_t seed = 1;
  };
  std::optional<Synthetic> synthetic;
  struct Hard {
    int k = 9;
    double delta = kDefaultHardFamilyDelta;
  };
  std::optional<Hard> hard;
};

struct ExperimentConfig {
  std::vector<int> k_values = {10};
  std::vector<int> m_values = {10};
  std::vector<uint64_t> seeds = {1, 2, 3, 4};
  std::vector<double> ratio_grid = DefaultRatioGrid();
  std::vector<ObjectiveMode> modes = {ObjectiveMode::kMinMax,
                                      ObjectiveMode::kAverage};
  int max_values = kDefaultMaxValues;
  std::vector<DatasetSpec> datasets;
  // Measured runtimes make output differ between runs; off by default.
  bool timing = false;
  int jobs = 1;

  absl::Status Validate() const;
};

// Parses the JSON config format. Relative dataset paths resolve against
// base_dir.
absl::StatusOr<ExperimentConfig> ParseExperimentConfig(
    const std::string& json_text, const std::string& base_dir = "");

struct ResultRow {
  std::string dataset;
  ObjectiveMode mode = ObjectiveMode::kMinMax;
  std::string algorithm;
  int k = 0;
  int m = 0;
  std::optional<double> ratio;
  uint64_t seed = 0;
  double objective_minmax = 0.0;
  double objective_avg = 0.0;
  double runtime_ms = 0.0;
};

struct SummaryRow {
  std::string dataset;
  ObjectiveMode mode = ObjectiveMode::kMinMax;
  std::string algorithm;
  int k = 0;
  int m = 0;
  int runs = 0;
  std::optional<double> mean_ratio;
  double objective_minmax = 0.0;
  double objective_avg = 0.0;
  double runtime_ms = 0.0;
};

struct SweepResult {
  std::vector<ResultRow> rows;
  std::vector<SummaryRow> summary;
  std::vector<std::string> errors;
  int successful_cells = 0;
};

inline constexpr const char* kAlgorithms[] = {"random", "greedy", "ng", "bag"};

// Runs every dataset, (K, M) cell and seed. Cell failures are collected in
// errors and do not stop the sweep. Rows are sorted by dataset, mode, K, M,
// seed and algorithm.
SweepResult Sweep(const ExperimentConfig& config);

std::vector<SummaryRow> Summarize(const std::vector<ResultRow>& rows);

// Header "algorithm,K,M,ratio,seed,objective_minmax,objective_avg,runtime_ms".
std::string ResultsCsv(const std::vector<ResultRow>& rows);
// Header "algorithm,K,M,ratio,runs,objective_minmax,objective_avg,runtime_ms"
// with means over seeds.
std::string SummaryCsv(const std::vector<SummaryRow>& rows);

}  // namespace subrank

#endif  // SUBRANK_HARNESS_H_
