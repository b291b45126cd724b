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

#include "subrank/submodular_function.h"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace subrank {

void SubmodularFunction::Gains(const ElementSet& s,
                               std::span<double> gains) const {
  const double base = Value(s);
  ElementSet with = s;
  for (Element e = 0; e < num_elements(); ++e) {
    if (s.Contains(e)) {
      gains[e] = 0.0;
      continue;
    }
    with.Insert(e);
    gains[e] = Value(with) - base;
    with.Erase(e);
  }
}

void SubmodularFunction::NormalizedGains(const ElementSet& s,
                                         std::span<double> gains) const {
  const double residual = 1.0 - Value(s);
  if (IsCovered(s) || residual <= 0.0) {
    std::fill(gains.begin(), gains.end(), 0.0);
    return;
  }
  Gains(s, gains);
  for (double& g : gains) g /= residual;
}

void RationalFunction::NumeratorsWith(const ElementSet& s,
                                      std::span<int64_t> numerators) const {
  ElementSet with = s;
  for (Element e = 0; e < num_elements(); ++e) {
    if (s.Contains(e)) {
      numerators[e] = Numerator(s);
      continue;
    }
    with.Insert(e);
    numerators[e] = Numerator(with);
    with.Erase(e);
  }
}

void RationalFunction::Gains(const ElementSet& s,
                             std::span<double> gains) const {
  std::vector<int64_t> with(num_elements());
  NumeratorsWith(s, with);
  const int64_t base = Numerator(s);
  const double den = static_cast<double>(denominator_);
  for (Element e = 0; e < num_elements(); ++e) {
    gains[e] = s.Contains(e) ? 0.0 : static_cast<double>(with[e] - base) / den;
  }
}

void RationalFunction::NormalizedGains(const ElementSet& s,
                                       std::span<double> gains) const {
  const int64_t base = Numerator(s);
  const int64_t residual = denominator_ - base;
  if (residual <= 0) {
    std::fill(gains.begin(), gains.end(), 0.0);
    return;
  }
  std::vector<int64_t> with(num_elements());
  NumeratorsWith(s, with);
  for (Element e = 0; e < num_elements(); ++e) {
    gains[e] = s.Contains(e) ? 0.0
                             : static_cast<double>(with[e] - base) /
                                   static_cast<double>(residual);
  }
}

}  // namespace subrank
