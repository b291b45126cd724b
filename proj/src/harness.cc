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

#include "subrank/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "json.hpp"
#include "subrank/ranking.h"

namespace subrank {
namespace {

// Splits one CSV record; handles double-quoted fields with "" escapes.
std::vector<std::string> SplitRecord(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string Trim(const std::string& s) {
  const size_t begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const size_t end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::optional<double> ParseNumber(const std::string& cell) {
  const std::string s = Trim(cell);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

absl::StatusOr<DataTable> ParseCsv(const std::string& text,
                                   const IngestOptions& options) {
  const std::vector<std::string> lines = Lines(text);
  if (lines.size() < 2) return absl::InvalidArgumentError("no rows");
  const std::vector<std::string> header = SplitRecord(lines[0]);
  std::vector<std::vector<std::string>> records;
  for (size_t i = 1; i < lines.size(); ++i) {
    records.push_back(SplitRecord(lines[i]));
    if (records.back().size() != header.size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "malformed CSV: line ", i + 1, " has ", records.back().size(),
          " fields, header has ", header.size()));
    }
  }
  const std::set<std::string> excluded(options.exclude_columns.begin(),
                                       options.exclude_columns.end());
  DataTable table;
  std::vector<int> kept;
  for (size_t c = 0; c < header.size(); ++c) {
    const std::string name = Trim(header[c]);
    if (excluded.contains(name) || !ParseNumber(records[0][c])) {
      table.skipped_columns.push_back(name);
      continue;
    }
    kept.push_back(static_cast<int>(c));
    table.column_names.push_back(name);
  }
  if (kept.empty()) return absl::InvalidArgumentError("no numeric columns");
  for (size_t r = 0; r < records.size(); ++r) {
    std::vector<double> row;
    row.reserve(kept.size());
    for (int c : kept) {
      const std::optional<double> v = ParseNumber(records[r][c]);
      if (!v) {
        table.warnings.push_back(absl::StrCat(
            "line ", r + 2, ": non-numeric cell in column '",
            table.column_names[row.size()], "', row dropped"));
        break;
      }
      row.push_back(*v);
    }
    if (row.size() == kept.size()) {
      table.rows.push_back(std::move(row));
    } else {
      ++table.dropped_rows;
    }
  }
  if (table.rows.empty()) return absl::InvalidArgumentError("no rows");
  return table;
}

absl::StatusOr<DataTable> IngestCsv(const std::string& path,
                                    const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto table = ParseCsv(buffer.str(), options);
  if (!table.ok()) {
    return absl::Status(table.status().code(),
                        absl::StrCat(path, ": ", table.status().message()));
  }
  return table;
}

DataTable Discretize(const DataTable& table, int max_values) {
  DataTable out = table;
  const int rows = table.num_rows();
  for (int c = 0; c < table.num_columns(); ++c) {
    std::vector<double> sorted(rows);
    for (int r = 0; r < rows; ++r) sorted[r] = table.rows[r][c];
    std::sort(sorted.begin(), sorted.end());
    const auto distinct = std::unique(sorted.begin(), sorted.end());
    if (distinct - sorted.begin() <= max_values) continue;
    for (int r = 0; r < rows; ++r) sorted[r] = table.rows[r][c];
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> cuts;
    for (int b = 1; b < max_values; ++b) {
      cuts.push_back(sorted[static_cast<size_t>(b) * rows / max_values]);
    }
    std::vector<int> labels(rows);
    std::set<int> used;
    for (int r = 0; r < rows; ++r) {
      labels[r] = static_cast<int>(
          std::upper_bound(cuts.begin(), cuts.end(), table.rows[r][c]) -
          cuts.begin());
      used.insert(labels[r]);
    }
    std::map<int, int> compress;
    for (int label : used) compress.emplace(label, compress.size());
    for (int r = 0; r < rows; ++r) out.rows[r][c] = compress[labels[r]];
  }
  return out;
}

DataTable SyntheticTable(int rows, int columns, int clusters, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> spread(0.0, 3.0);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<std::vector<double>> centers(clusters,
                                           std::vector<double>(columns));
  for (auto& center : centers) {
    for (double& v : center) v = spread(rng);
  }
  DataTable table;
  for (int c = 0; c < columns; ++c) {
    table.column_names.push_back(absl::StrCat("x", c + 1));
  }
  std::uniform_int_distribution<int> pick(0, clusters - 1);
  for (int r = 0; r < rows; ++r) {
    const auto& center = centers[pick(rng)];
    std::vector<double> row(columns);
    for (int c = 0; c < columns; ++c) row[c] = center[c] + noise(rng);
    table.rows.push_back(std::move(row));
  }
  return Discretize(table);
}

uint64_t SplitSeed(uint64_t master, uint64_t stream, uint64_t a, uint64_t b) {
  std::seed_seq seq{static_cast<uint32_t>(master),
                    static_cast<uint32_t>(master >> 32),
                    static_cast<uint32_t>(stream),
                    static_cast<uint32_t>(a),
                    static_cast<uint32_t>(b)};
  uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<uint64_t>(words[0]) << 32) | words[1];
}

absl::StatusOr<BuiltInstance> BuildInstance(const DataTable& table, int k,
                                            int m, uint64_t seed) {
  if (k < 1) return absl::InvalidArgumentError("K must be at least 1");
  if (m < 2) return absl::InvalidArgumentError("M must be at least 2");
  if (m > table.num_rows()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "M = ", m, " exceeds the row count ", table.num_rows()));
  }
  // Integer codes: rank of each value among the column's distinct values.
  const int rows = table.num_rows();
  const int columns = table.num_columns();
  std::vector<std::vector<int>> codes(rows, std::vector<int>(columns));
  for (int c = 0; c < columns; ++c) {
    std::vector<double> values(rows);
    for (int r = 0; r < rows; ++r) values[r] = table.rows[r][c];
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int r = 0; r < rows; ++r) {
      codes[r][c] = static_cast<int>(
          std::lower_bound(values.begin(), values.end(), table.rows[r][c]) -
          values.begin());
    }
  }

  std::mt19937_64 row_rng(SplitSeed(seed, kRowStream, k, m));
  std::vector<int> sample;
  bool distinct = false;
  std::vector<int> index(rows);
  for (int attempt = 0; attempt < 100 && !distinct; ++attempt) {
    for (int r = 0; r < rows; ++r) index[r] = r;
    for (int i = 0; i < m; ++i) {
      std::uniform_int_distribution<int> pick(i, rows - 1);
      std::swap(index[i], index[pick(row_rng)]);
    }
    sample.assign(index.begin(), index.begin() + m);
    std::set<std::vector<int>> seen;
    distinct = true;
    for (int r : sample) distinct = distinct && seen.insert(codes[r]).second;
  }
  if (!distinct) {
    return absl::FailedPreconditionError("rows not distinguishable");
  }

  std::vector<std::vector<int>> hypotheses;
  for (int r : sample) hypotheses.push_back(codes[r]);
  auto odt = OdtTable::Create(std::move(hypotheses));
  if (!odt.ok()) return odt.status();
  std::vector<std::shared_ptr<const SubmodularFunction>> functions;
  for (int j = 0; j < m; ++j) {
    auto f = OdtFunction::Create(*odt, j);
    if (!f.ok()) return f.status();
    functions.push_back(*f);
  }
  std::mt19937_64 weight_rng(SplitSeed(seed, kWeightStream, k, m));
  std::uniform_real_distribution<double> weight(1.0, 100.0);
  std::vector<Agent> agents(k);
  for (Agent& agent : agents) {
    for (int j = 0; j < m; ++j) {
      agent.functions.push_back({functions[j], weight(weight_rng)});
    }
  }
  auto instance = Instance::Create(columns, std::move(agents));
  if (!instance.ok()) return instance.status();
  return BuiltInstance{*std::move(instance), std::move(sample), *odt};
}

std::vector<double> DefaultRatioGrid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(i / 20.0);
  return grid;
}

namespace {

std::vector<double> UsableGrid(const std::vector<double>& grid) {
  std::vector<double> out;
  for (double r : grid) {
    if (r > 0.0 && r < 1.0) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct TunedRun {
  TunedRatio tuned;
  Permutation permutation;
};

absl::StatusOr<TunedRun> TuneWithPermutation(const Instance& instance,
                                             const std::vector<double>& grid,
                                             ObjectiveMode mode) {
  const std::vector<double> usable = UsableGrid(grid);
  if (usable.empty()) {
    return absl::InvalidArgumentError("ratio grid has no value in (0, 1)");
  }
  std::optional<TunedRun> best;
  for (double ratio : usable) {
    BagConfig config;
    config.ratio = ratio;
    auto result = BalancedAdaptiveGreedy(instance, config);
    if (!result.ok()) return result.status();
    const double objective =
        EvaluateCover(instance, result->permutation).objective(mode);
    if (!best || objective < best->tuned.objective) {
      best = TunedRun{{ratio, objective}, result->permutation};
    }
  }
  return *std::move(best);
}

}  // namespace

absl::StatusOr<TunedRatio> TuneRatio(const Instance& instance,
                                     const std::vector<double>& grid,
                                     ObjectiveMode mode) {
  auto run = TuneWithPermutation(instance, grid, mode);
  if (!run.ok()) return run.status();
  return run->tuned;
}

absl::Status ExperimentConfig::Validate() const {
  if (k_values.empty() || m_values.empty()) {
    return absl::InvalidArgumentError("K and M lists must be nonempty");
  }
  for (int k : k_values) {
    if (k < 1) return absl::InvalidArgumentError("K must be at least 1");
  }
  for (int m : m_values) {
    if (m < 1) return absl::InvalidArgumentError("M must be at least 1");
  }
  if (seeds.empty()) return absl::InvalidArgumentError("no seeds");
  if (UsableGrid(ratio_grid).empty()) {
    return absl::InvalidArgumentError("ratio grid has no value in (0, 1)");
  }
  if (modes.empty()) return absl::InvalidArgumentError("no objective modes");
  if (max_values < 1) {
    return absl::InvalidArgumentError("max_values must be at least 1");
  }
  if (jobs < 1) return absl::InvalidArgumentError("jobs must be at least 1");
  if (datasets.empty()) return absl::InvalidArgumentError("no datasets");
  std::set<std::string> names;
  for (const DatasetSpec& d : datasets) {
    const int sources = (d.path.empty() ? 0 : 1) + d.synthetic.has_value() +
                        d.hard.has_value();
    if (sources != 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "dataset '", d.name, "' needs exactly one of path, synthetic, hard"));
    }
    if (d.name.empty() || !names.insert(d.name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("dataset names must be unique and nonempty: '", d.name,
                       "'"));
    }
  }
  return absl::OkStatus();
}

namespace {

using nlohmann::json;

template <typename T>
std::vector<T> ScalarOrList(const json& value) {
  if (value.is_array()) return value.get<std::vector<T>>();
  return {value.get<T>()};
}

}  // namespace

absl::StatusOr<ExperimentConfig> ParseExperimentConfig(
    const std::string& json_text, const std::string& base_dir) {
  ExperimentConfig config;
  try {
    const json doc = json::parse(json_text);
    if (!doc.is_object()) {
      return absl::InvalidArgumentError("config must be a JSON object");
    }
    static const std::set<std::string> kKnown = {
        "K", "M", "seeds", "ratio_grid", "modes", "max_values", "datasets",
        "timing", "jobs"};
    for (const auto& [key, unused] : doc.items()) {
      if (!kKnown.contains(key)) {
        return absl::InvalidArgumentError(
            absl::StrCat("unknown config key '", key, "'"));
      }
    }
    if (doc.contains("K")) config.k_values = ScalarOrList<int>(doc["K"]);
    if (doc.contains("M")) config.m_values = ScalarOrList<int>(doc["M"]);
    if (doc.contains("seeds")) {
      config.seeds = ScalarOrList<uint64_t>(doc["seeds"]);
    }
    if (doc.contains("ratio_grid")) {
      config.ratio_grid = ScalarOrList<double>(doc["ratio_grid"]);
    }
    if (doc.contains("modes")) {
      config.modes.clear();
      for (const std::string& name : ScalarOrList<std::string>(doc["modes"])) {
        auto mode = ParseObjectiveMode(name);
        if (!mode.ok()) return mode.status();
        config.modes.push_back(*mode);
      }
    }
    config.max_values = doc.value("max_values", config.max_values);
    config.timing = doc.value("timing", config.timing);
    config.jobs = doc.value("jobs", config.jobs);
    if (doc.contains("datasets")) {
      for (const json& d : doc["datasets"]) {
        DatasetSpec spec;
        spec.name = d.value("name", "");
        if (d.contains("path")) {
          std::filesystem::path path = d["path"].get<std::string>();
          if (path.is_relative() && !base_dir.empty()) {
            path = std::filesystem::path(base_dir) / path;
          }
          spec.path = path.string();
          if (spec.name.empty()) spec.name = path.stem().string();
        }
        if (d.contains("exclude_columns")) {
          spec.exclude_columns =
              d["exclude_columns"].get<std::vector<std::string>>();
        }
        if (d.contains("synthetic")) {
          const json& s = d["synthetic"];
          DatasetSpec::Synthetic synthetic;
          synthetic.rows = s.value("rows", synthetic.rows);
          synthetic.columns = s.value("columns", synthetic.columns);
          synthetic.clusters = s.value("clusters", synthetic.clusters);
          synthetic.seed = s.value("seed", synthetic.seed);
          spec.synthetic = synthetic;
          if (spec.name.empty()) spec.name = "synthetic";
        }
        if (d.contains("hard")) {
          const json& h = d["hard"];
          DatasetSpec::Hard hard;
          hard.k = h.value("k", hard.k);
          hard.delta = h.value("delta", hard.delta);
          spec.hard = hard;
          if (spec.name.empty()) spec.name = absl::StrCat("hard", hard.k);
        }
        config.datasets.push_back(std::move(spec));
      }
    } else {
      DatasetSpec spec;
      spec.name = "synthetic";
      spec.synthetic = DatasetSpec::Synthetic{};
      config.datasets.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("config: ", e.what()));
  }
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  return config;
}

namespace {

struct Task {
  int dataset = 0;
  int k = 0;
  int m = 0;
  uint64_t seed = 0;
};

struct TaskOutput {
  std::vector<ResultRow> rows;
  std::string error;
};

double Millis(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

TaskOutput RunTask(const ExperimentConfig& config, const DatasetSpec& spec,
                   const DataTable* table, const Task& task) {
  TaskOutput out;
  std::optional<Instance> instance;
  int k = task.k;
  int m = task.m;
  if (spec.hard) {
    auto hard = HardFamily(spec.hard->k, spec.hard->delta);
    if (!hard.ok()) {
      out.error = std::string(hard.status().message());
      return out;
    }
    instance = *std::move(hard);
    k = instance->num_agents();
    m = 0;
    for (const Agent& a : instance->agents()) {
      m = std::max(m, static_cast<int>(a.functions.size()));
    }
  } else {
    auto built = BuildInstance(*table, task.k, task.m, task.seed);
    if (!built.ok()) {
      out.error = std::string(built.status().message());
      return out;
    }
    instance = std::move(built->instance);
  }

  const auto record = [&](ObjectiveMode mode, const std::string& algorithm,
                          const Permutation& pi, std::optional<double> ratio,
                          double runtime) {
    const CoverReport report = EvaluateCover(*instance, pi);
    out.rows.push_back({spec.name, mode, algorithm, k, m, ratio, task.seed,
                        report.minmax, report.average,
                        config.timing ? runtime : 0.0});
  };

  auto start = std::chrono::steady_clock::now();
  const Permutation random = RandomOrder(
      *instance, SplitSeed(task.seed, kAlgorithmStream, task.k, task.m));
  const double random_ms = Millis(start);
  start = std::chrono::steady_clock::now();
  const Permutation greedy = Greedy(*instance);
  const double greedy_ms = Millis(start);
  start = std::chrono::steady_clock::now();
  const Permutation ng = NormalizedGreedy(*instance);
  const double ng_ms = Millis(start);
  for (ObjectiveMode mode : config.modes) {
    start = std::chrono::steady_clock::now();
    auto tuned = TuneWithPermutation(*instance, config.ratio_grid, mode);
    const double bag_ms = Millis(start);
    if (!tuned.ok()) {
      out.rows.clear();
      out.error = std::string(tuned.status().message());
      return out;
    }
    record(mode, "random", random, std::nullopt, random_ms);
    record(mode, "greedy", greedy, std::nullopt, greedy_ms);
    record(mode, "ng", ng, std::nullopt, ng_ms);
    record(mode, "bag", tuned->permutation, tuned->tuned.ratio, bag_ms);
  }
  return out;
}

}  // namespace

SweepResult Sweep(const ExperimentConfig& config) {
  SweepResult result;
  if (absl::Status s = config.Validate(); !s.ok()) {
    result.errors.push_back(std::string(s.message()));
    return result;
  }
  std::vector<std::optional<DataTable>> tables(config.datasets.size());
  std::vector<Task> tasks;
  for (size_t d = 0; d < config.datasets.size(); ++d) {
    const DatasetSpec& spec = config.datasets[d];
    if (!spec.path.empty()) {
      auto table = IngestCsv(spec.path, {spec.exclude_columns});
      if (!table.ok()) {
        result.errors.push_back(absl::StrCat("dataset '", spec.name,
                                             "': ", table.status().message()));
        continue;
      }
      tables[d] = Discretize(*table, config.max_values);
    } else if (spec.synthetic) {
      tables[d] = SyntheticTable(spec.synthetic->rows, spec.synthetic->columns,
                                 spec.synthetic->clusters,
                                 spec.synthetic->seed);
    }
    if (spec.hard) {
      for (uint64_t seed : config.seeds) {
        tasks.push_back({static_cast<int>(d), spec.hard->k, 0, seed});
      }
      continue;
    }
    for (int k : config.k_values) {
      for (int m : config.m_values) {
        for (uint64_t seed : config.seeds) {
          tasks.push_back({static_cast<int>(d), k, m, seed});
        }
      }
    }
  }

  std::vector<TaskOutput> outputs(tasks.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      const auto& table = tables[task.dataset];
      outputs[i] = RunTask(config, config.datasets[task.dataset],
                           table ? &*table : nullptr, task);
    }
  };
  const int threads =
      std::min<int>(config.jobs, std::max<size_t>(1, tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<std::pair<int, ResultRow>> keyed;
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Task& task = tasks[i];
    if (!outputs[i].error.empty()) {
      result.errors.push_back(absl::StrCat(
          "dataset '", config.datasets[task.dataset].name, "' K=", task.k,
          " M=", task.m, " seed=", task.seed, ": ", outputs[i].error));
      continue;
    }
    ++result.successful_cells;
    for (ResultRow& row : outputs[i].rows) {
      keyed.push_back({task.dataset, std::move(row)});
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) {
                     return std::make_pair(a.first, a.second.mode) <
                            std::make_pair(b.first, b.second.mode);
                   });
  for (auto& [unused, row] : keyed) result.rows.push_back(std::move(row));
  result.summary = Summarize(result.rows);
  return result;
}

std::vector<SummaryRow> Summarize(const std::vector<ResultRow>& rows) {
  std::vector<SummaryRow> summary;
  std::map<std::tuple<std::string, ObjectiveMode, std::string, int, int>,
           size_t>
      index;
  std::vector<double> ratio_sums;
  for (const ResultRow& row : rows) {
    const auto key =
        std::make_tuple(row.dataset, row.mode, row.algorithm, row.k, row.m);
    auto [it, inserted] = index.emplace(key, summary.size());
    if (inserted) {
      SummaryRow s;
      s.dataset = row.dataset;
      s.mode = row.mode;
      s.algorithm = row.algorithm;
      s.k = row.k;
      s.m = row.m;
      summary.push_back(s);
      ratio_sums.push_back(0.0);
    }
    SummaryRow& s = summary[it->second];
    ++s.runs;
    s.objective_minmax += row.objective_minmax;
    s.objective_avg += row.objective_avg;
    s.runtime_ms += row.runtime_ms;
    if (row.ratio) {
      ratio_sums[it->second] += *row.ratio;
      s.mean_ratio = 0.0;
    }
  }
  for (size_t i = 0; i < summary.size(); ++i) {
    SummaryRow& s = summary[i];
    const double runs = s.runs;
    s.objective_minmax /= runs;
    s.objective_avg /= runs;
    s.runtime_ms /= runs;
    if (s.mean_ratio) s.mean_ratio = ratio_sums[i] / runs;
  }
  return summary;
}

namespace {

std::string Ratio(const std::optional<double>& ratio) {
  return ratio ? absl::StrFormat("%.17g", *ratio) : "";
}

}  // namespace

std::string ResultsCsv(const std::vector<ResultRow>& rows) {
  std::string out =
      "algorithm,K,M,ratio,seed,objective_minmax,objective_avg,runtime_ms\n";
  for (const ResultRow& r : rows) {
    absl::StrAppendFormat(&out, "%s,%d,%d,%s,%d,%.17g,%.17g,%.17g\n",
                          r.algorithm, r.k, r.m, Ratio(r.ratio), r.seed,
                          r.objective_minmax, r.objective_avg, r.runtime_ms);
  }
  return out;
}

std::string SummaryCsv(const std::vector<SummaryRow>& rows) {
  std::string out =
      "algorithm,K,M,ratio,runs,objective_minmax,objective_avg,runtime_ms\n";
  for (const SummaryRow& r : rows) {
    absl::StrAppendFormat(&out, "%s,%d,%d,%s,%d,%.17g,%.17g,%.17g\n",
                          r.algorithm, r.k, r.m, Ratio(r.mean_ratio), r.runs,
                          r.objective_minmax, r.objective_avg, r.runtime_ms);
  }
  return out;
}

}  // namespace subrank
