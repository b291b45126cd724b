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

#ifndef SUBRANK_SUBMODULAR_FUNCTION_H_
#define SUBRANK_SUBMODULAR_FUNCTION_H_

#include <cstdint>
#include <span>
#include <string>

#include "subrank/element_set.h"

namespace subrank {

// A float-valued oracle counts as covered once it reaches 1 - kCoverTol.
inline constexpr double kCoverTol = 1e-12;

// Monotone submodular set function f: 2^U -> [0, 1] with f(U) = 1.
//
// Implementations are immutable after construction and may be shared across
// agents and threads.
class SubmodularFunction {
 public:
  virtual ~SubmodularFunction() = default;

  virtual int num_elements() const = 0;
  virtual double Value(const ElementSet& s) const = 0;

  // Smallest strictly positive increase f(B) - f(A) over A subset of B, as
  // known analytically for the family (never estimated by enumeration).
  virtual double MinNonzeroMarginal() const = 0;

  // Short family tag used in files and diagnostics ("coverage", "odt", ...).
  virtual std::string family() const = 0;

  // False for oracles whose monotonicity/submodularity is not guaranteed by
  // construction; Validate() spot-checks those.
  virtual bool HasAnalyticGuarantee() const { return true; }

  virtual bool IsCovered(const ElementSet& s) const {
    return Value(s) >= 1.0 - kCoverTol;
  }

  // gains[e] = f(s + e) - f(s) for e not in s, 0 for e in s.
  virtual void Gains(const ElementSet& s, std::span<double> gains) const;

  // gains[e] = (f(s + e) - f(s)) / (1 - f(s)); all zeros if s covers f.
  virtual void NormalizedGains(const ElementSet& s,
                               std::span<double> gains) const;
};

// A function whose value is an exact ratio Numerator(s) / denominator().
// Coverage tests on these are integer comparisons.
class RationalFunction : public SubmodularFunction {
 public:
  explicit RationalFunction(int64_t denominator) : denominator_(denominator) {}

  virtual int64_t Numerator(const ElementSet& s) const = 0;
  int64_t denominator() const { return denominator_; }

  // numerators[e] = Numerator(s + e); defaults to one evaluation per element.
  virtual void NumeratorsWith(const ElementSet& s,
                              std::span<int64_t> numerators) const;

  double Value(const ElementSet& s) const override {
    return static_cast<double>(Numerator(s)) /
           static_cast<double>(denominator_);
  }
  bool IsCovered(const ElementSet& s) const override {
    return Numerator(s) >= denominator_;
  }
  void Gains(const ElementSet& s, std::span<double> gains) const override;
  void NormalizedGains(const ElementSet& s,
                       std::span<double> gains) const override;

 private:
  int64_t denominator_;
};

}  // namespace subrank

#endif  // SUBRANK_SUBMODULAR_FUNCTION_H_
