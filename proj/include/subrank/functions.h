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

// Concrete function families and instance generators.
//
// Every family here is a RationalFunction, so values, gains and coverage are
// exact integer computations.

#ifndef SUBRANK_FUNCTIONS_H_
#define SUBRANK_FUNCTIONS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "subrank/element_set.h"
#include "subrank/instance.h"
#include "subrank/submodular_function.h"

namespace subrank {

// Weighted coverage: value(S) = weight of the union of covers(e), e in S,
// divided by the total item weight.
class CoverageFunction final : public RationalFunction {
 public:
  // covers[e] lists item indices into item_weights. Item weights must be >= 1.
  static absl::StatusOr<std::shared_ptr<const CoverageFunction>> Create(
      int n, std::vector<int64_t> item_weights,
      std::vector<std::vector<int>> covers);

  int num_elements() const override { return static_cast<int>(covers_.size()); }
  int64_t Numerator(const ElementSet& s) const override;
  void NumeratorsWith(const ElementSet& s,
                      std::span<int64_t> numerators) const override;
  double MinNonzeroMarginal() const override;
  std::string family() const override { return "coverage"; }

  const std::vector<int64_t>& item_weights() const { return item_weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

 private:
  CoverageFunction(std::vector<int64_t> item_weights,
                   std::vector<std::vector<int>> covers, int64_t total);

  std::vector<bool> CoveredItems(const ElementSet& s) const;

  std::vector<int64_t> item_weights_;
  std::vector<std::vector<int>> covers_;
};

// Hypotheses (rows) by tests (columns) with discrete outcomes.
class OdtTable {
 public:
  // Requires at least two rows, all of equal nonzero length.
  static absl::StatusOr<std::shared_ptr<const OdtTable>> Create(
      std::vector<std::vector<int>> rows);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_columns() const { return static_cast<int>(rows_[0].size()); }
  int at(int row, int column) const { return rows_[row][column]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  explicit OdtTable(std::vector<std::vector<int>> rows)
      : rows_(std::move(rows)) {}

  std::vector<std::vector<int>> rows_;
};

// Decision-tree function for hypothesis `row`: the fraction of the other
// m - 1 rows ruled out by the tests in S, where test e rules out every row
// whose outcome at e differs from `row`'s.
class OdtFunction final : public RationalFunction {
 public:
  // Fails with "row not identifiable" when another row equals `row`.
  static absl::StatusOr<std::shared_ptr<const OdtFunction>> Create(
      std::shared_ptr<const OdtTable> table, int row);

  int num_elements() const override { return table_->num_columns(); }
  int64_t Numerator(const ElementSet& s) const override;
  void NumeratorsWith(const ElementSet& s,
                      std::span<int64_t> numerators) const override;
  double MinNonzeroMarginal() const override {
    return 1.0 / static_cast<double>(denominator());
  }
  std::string family() const override { return "odt"; }

  const std::shared_ptr<const OdtTable>& table() const { return table_; }
  int row() const { return row_; }

 private:
  OdtFunction(std::shared_ptr<const OdtTable> table, int row);

  std::vector<uint64_t> RuledOut(const ElementSet& s) const;

  std::shared_ptr<const OdtTable> table_;
  int row_;
  int words_;
  // differs_[e * words_ + w]: bitmask of rows differing from row_ at test e.
  std::vector<uint64_t> differs_;
};

// A set that needs `requirement` of its members selected.
struct GmscSet {
  std::vector<Element> members;
  int requirement = 1;
};

// value(S) = min(|S ∩ members|, K) / K.
class GmscFunction final : public RationalFunction {
 public:
  static absl::StatusOr<std::shared_ptr<const GmscFunction>> Create(
      int n, GmscSet set);

  int num_elements() const override { return n_; }
  int64_t Numerator(const ElementSet& s) const override;
  void NumeratorsWith(const ElementSet& s,
                      std::span<int64_t> numerators) const override;
  double MinNonzeroMarginal() const override {
    return 1.0 / static_cast<double>(set_.requirement);
  }
  std::string family() const override { return "gmsc"; }

  const GmscSet& set() const { return set_; }

 private:
  GmscFunction(int n, GmscSet set);

  int n_;
  GmscSet set_;
  std::vector<bool> is_member_;
};

// value(S) = 1 if e in S, else 0.
class SingletonFunction final : public RationalFunction {
 public:
  static absl::StatusOr<std::shared_ptr<const SingletonFunction>> Create(
      int n, Element e);

  int num_elements() const override { return n_; }
  int64_t Numerator(const ElementSet& s) const override {
    return s.Contains(element_) ? 1 : 0;
  }
  double MinNonzeroMarginal() const override { return 1.0; }
  std::string family() const override { return "singleton"; }

  Element element() const { return element_; }

 private:
  SingletonFunction(int n, Element e)
      : RationalFunction(1), n_(n), element_(e) {}

  int n_;
  Element element_;
};

inline constexpr double kDefaultHardFamilyDelta = 0.01;

// Instance on which normalized greedy loses a sqrt(k) factor. With r = sqrt(k)
// and elements e_1..e_{k+r} (0-based e_1 = 0): agents 1..k-1 own {e_i} with
// weight 1 + delta and {e_k} with weight r - 1 - delta; agent k owns
// {e_{k+1}}, ..., {e_{k+r}} with weight 1 each. Every agent totals r.
absl::StatusOr<Instance> HardFamily(int k,
                                    double delta = kDefaultHardFamilyDelta);

// Seeded coverage instance with k agents of m functions over n elements.
// Item weights are small integers and every item is coverable.
Instance RandomCoverageInstance(int n, int k, int m, uint64_t seed);

}  // namespace subrank

#endif  // SUBRANK_FUNCTIONS_H_
