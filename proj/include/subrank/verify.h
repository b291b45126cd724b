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

// Self-checks exposed through the command line. Each suite runs seeded
// property checks at desk scale and reports one line per check.

#ifndef SUBRANK_VERIFY_H_
#define SUBRANK_VERIFY_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace subrank {

enum class VerifySuite { kCore, kAlgorithms, kGmsc, kAll };

absl::StatusOr<VerifySuite> ParseVerifySuite(std::string_view name);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  // "[PASS] core/name: detail" lines.
  std::string ToString() const;
};

VerifyReport RunVerification(VerifySuite suite);

}  // namespace subrank

#endif  // SUBRANK_VERIFY_H_
