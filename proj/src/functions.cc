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

#include "subrank/functions.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

namespace subrank {

// CoverageFunction.

CoverageFunction::CoverageFunction(std::vector<int64_t> item_weights,
                                   std::vector<std::vector<int>> covers,
                                   int64_t total)
    : RationalFunction(total),
      item_weights_(std::move(item_weights)),
      covers_(std::move(covers)) {}

absl::StatusOr<std::shared_ptr<const CoverageFunction>>
CoverageFunction::Create(int n, std::vector<int64_t> item_weights,
                         std::vector<std::vector<int>> covers) {
  if (static_cast<int>(covers.size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "coverage: covers has ", covers.size(), " entries, expected ", n));
  }
  if (item_weights.empty()) {
    return absl::InvalidArgumentError("coverage: no items");
  }
  int64_t total = 0;
  for (int64_t w : item_weights) {
    if (w < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("coverage: item weight ", w, " < 1"));
    }
    total += w;
  }
  const int num_items = static_cast<int>(item_weights.size());
  for (auto& items : covers) {
    for (int item : items) {
      if (item < 0 || item >= num_items) {
        return absl::InvalidArgumentError(
            absl::StrCat("coverage: unknown item index ", item));
      }
    }
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
  }
  return std::shared_ptr<const CoverageFunction>(new CoverageFunction(
      std::move(item_weights), std::move(covers), total));
}

std::vector<bool> CoverageFunction::CoveredItems(const ElementSet& s) const {
  std::vector<bool> covered(item_weights_.size(), false);
  for (Element e : s.ToVector()) {
    for (int item : covers_[e]) covered[item] = true;
  }
  return covered;
}

int64_t CoverageFunction::Numerator(const ElementSet& s) const {
  const std::vector<bool> covered = CoveredItems(s);
  int64_t value = 0;
  for (size_t item = 0; item < covered.size(); ++item) {
    if (covered[item]) value += item_weights_[item];
  }
  return value;
}

void CoverageFunction::NumeratorsWith(const ElementSet& s,
                                      std::span<int64_t> numerators) const {
  const std::vector<bool> covered = CoveredItems(s);
  int64_t base = 0;
  for (size_t item = 0; item < covered.size(); ++item) {
    if (covered[item]) base += item_weights_[item];
  }
  for (Element e = 0; e < num_elements(); ++e) {
    int64_t value = base;
    for (int item : covers_[e]) {
      if (!covered[item]) value += item_weights_[item];
    }
    numerators[e] = value;
  }
}

double CoverageFunction::MinNonzeroMarginal() const {
  const int64_t lightest =
      *std::min_element(item_weights_.begin(), item_weights_.end());
  return static_cast<double>(lightest) / static_cast<double>(denominator());
}

// OdtTable / OdtFunction.

absl::StatusOr<std::shared_ptr<const OdtTable>> OdtTable::Create(
    std::vector<std::vector<int>> rows) {
  if (rows.size() < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("odt: need at least 2 rows, got ", rows.size()));
  }
  const size_t columns = rows[0].size();
  if (columns == 0) return absl::InvalidArgumentError("odt: no columns");
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != columns) {
      return absl::InvalidArgumentError(absl::StrCat(
          "odt: row ", r + 1, " has ", rows[r].size(), " columns, expected ",
          columns));
    }
  }
  return std::shared_ptr<const OdtTable>(new OdtTable(std::move(rows)));
}

OdtFunction::OdtFunction(std::shared_ptr<const OdtTable> table, int row)
    : RationalFunction(table->num_rows() - 1),
      table_(std::move(table)),
      row_(row),
      words_((table_->num_rows() + 63) / 64),
      differs_(static_cast<size_t>(table_->num_columns()) * words_, 0) {
  for (int e = 0; e < table_->num_columns(); ++e) {
    for (int r = 0; r < table_->num_rows(); ++r) {
      if (table_->at(r, e) != table_->at(row_, e)) {
        differs_[e * words_ + (r >> 6)] |= uint64_t{1} << (r & 63);
      }
    }
  }
}

absl::StatusOr<std::shared_ptr<const OdtFunction>> OdtFunction::Create(
    std::shared_ptr<const OdtTable> table, int row) {
  if (table == nullptr) return absl::InvalidArgumentError("odt: null table");
  if (row < 0 || row >= table->num_rows()) {
    return absl::OutOfRangeError(absl::StrCat("odt: row ", row + 1,
                                              " does not exist"));
  }
  for (int r = 0; r < table->num_rows(); ++r) {
    if (r != row && table->rows()[r] == table->rows()[row]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "odt: row not identifiable (row ", row + 1, " equals row ", r + 1,
          ")"));
    }
  }
  return std::shared_ptr<const OdtFunction>(
      new OdtFunction(std::move(table), row));
}

std::vector<uint64_t> OdtFunction::RuledOut(const ElementSet& s) const {
  std::vector<uint64_t> out(words_, 0);
  for (Element e : s.ToVector()) {
    for (int w = 0; w < words_; ++w) out[w] |= differs_[e * words_ + w];
  }
  return out;
}

int64_t OdtFunction::Numerator(const ElementSet& s) const {
  int64_t count = 0;
  for (uint64_t word : RuledOut(s)) count += std::popcount(word);
  return count;
}

void OdtFunction::NumeratorsWith(const ElementSet& s,
                                 std::span<int64_t> numerators) const {
  const std::vector<uint64_t> base = RuledOut(s);
  for (Element e = 0; e < num_elements(); ++e) {
    int64_t count = 0;
    for (int w = 0; w < words_; ++w) {
      count += std::popcount(base[w] | differs_[e * words_ + w]);
    }
    numerators[e] = count;
  }
}

// GmscFunction.

GmscFunction::GmscFunction(int n, GmscSet set)
    : RationalFunction(set.requirement),
      n_(n),
      set_(std::move(set)),
      is_member_(n, false) {
  for (Element e : set_.members) is_member_[e] = true;
}

absl::StatusOr<std::shared_ptr<const GmscFunction>> GmscFunction::Create(
    int n, GmscSet set) {
  std::sort(set.members.begin(), set.members.end());
  set.members.erase(std::unique(set.members.begin(), set.members.end()),
                    set.members.end());
  if (set.members.empty()) return absl::InvalidArgumentError("gmsc: empty set");
  for (Element e : set.members) {
    if (e < 0 || e >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("gmsc: member ", e + 1, " outside [1, ", n, "]"));
    }
  }
  if (set.requirement < 1 ||
      set.requirement > static_cast<int>(set.members.size())) {
    return absl::InvalidArgumentError(
        absl::StrCat("gmsc: requirement ", set.requirement, " outside [1, ",
                     set.members.size(), "]"));
  }
  return std::shared_ptr<const GmscFunction>(
      new GmscFunction(n, std::move(set)));
}

int64_t GmscFunction::Numerator(const ElementSet& s) const {
  int64_t hit = 0;
  for (Element e : set_.members) hit += s.Contains(e) ? 1 : 0;
  return std::min<int64_t>(hit, set_.requirement);
}

void GmscFunction::NumeratorsWith(const ElementSet& s,
                                  std::span<int64_t> numerators) const {
  int64_t hit = 0;
  for (Element e : set_.members) hit += s.Contains(e) ? 1 : 0;
  const int64_t k = set_.requirement;
  for (Element e = 0; e < n_; ++e) {
    const bool adds = is_member_[e] && !s.Contains(e);
    numerators[e] = std::min<int64_t>(hit + (adds ? 1 : 0), k);
  }
}

// SingletonFunction.

absl::StatusOr<std::shared_ptr<const SingletonFunction>>
SingletonFunction::Create(int n, Element e) {
  if (e < 0 || e >= n) {
    return absl::InvalidArgumentError(
        absl::StrCat("singleton: element ", e + 1, " outside [1, ", n, "]"));
  }
  return std::shared_ptr<const SingletonFunction>(new SingletonFunction(n, e));
}

// Generators.

absl::StatusOr<Instance> HardFamily(int k, double delta) {
  const int root = static_cast<int>(std::lround(std::sqrt(k)));
  if (k < 4 || root * root != k) {
    return absl::InvalidArgumentError(
        absl::StrCat("hard family needs a perfect square k >= 4, got ", k));
  }
  if (!(delta > 0.0 && delta < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("hard family needs 0 < delta < 0.5, got ", delta));
  }
  const int n = k + root;
  auto singleton = [n](Element e) { return *SingletonFunction::Create(n, e); };
  std::vector<Agent> agents(k);
  for (int i = 0; i < k - 1; ++i) {
    agents[i].functions.push_back({singleton(i), 1.0 + delta});
    agents[i].functions.push_back({singleton(k - 1), root - 1.0 - delta});
  }
  for (int j = 0; j < root; ++j) {
    agents[k - 1].functions.push_back({singleton(k + j), 1.0});
  }
  return Instance::Create(n, std::move(agents));
}

Instance RandomCoverageInstance(int n, int k, int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num_items_dist(1, 4);
  std::uniform_int_distribution<int64_t> weight_dist(1, 5);
  std::uniform_int_distribution<int> element_dist(0, n - 1);
  std::bernoulli_distribution covers_dist(0.35);
  std::uniform_real_distribution<double> function_weight_dist(1.0, 10.0);

  std::vector<Agent> agents(k);
  for (Agent& agent : agents) {
    for (int j = 0; j < m; ++j) {
      const int num_items = num_items_dist(rng);
      std::vector<int64_t> item_weights(num_items);
      for (int64_t& w : item_weights) w = weight_dist(rng);
      std::vector<std::vector<int>> covers(n);
      std::vector<bool> reachable(num_items, false);
      for (Element e = 0; e < n; ++e) {
        for (int item = 0; item < num_items; ++item) {
          if (covers_dist(rng)) {
            covers[e].push_back(item);
            reachable[item] = true;
          }
        }
      }
      for (int item = 0; item < num_items; ++item) {
        if (!reachable[item]) covers[element_dist(rng)].push_back(item);
      }
      // Integer-valued weights keep objective values exact.
      const double weight = std::floor(function_weight_dist(rng));
      agent.functions.push_back(
          {*CoverageFunction::Create(n, std::move(item_weights),
                                     std::move(covers)),
           weight});
    }
  }
  return *Instance::Create(n, std::move(agents));
}

}  // namespace subrank
