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

// JSON files for ranking and GMSC instances.
//
// Ranking instance:
//   {"n": 6,
//    "agents": [{"functions": [{"family": "singleton",
//                               "params": {"element": 1}, "weight": 1.01}]}],
//    "tables": {"t1": [[0, 1], [1, 1]]}}
// Family params:
//   coverage   {"items": [{"id": 1, "w": 3}], "covers": {"1": [1]}}
//   odt        {"table_ref": "t1", "row": 1}
//   gmsc       {"members": [1, 2], "K": 1}
//   singleton  {"element": 1}
// GMSC instance:
//   {"n": 4, "agents": [[{"members": [1, 2], "K": 2}]]}
// Elements and rows are 1-based in files.

#ifndef SUBRANK_INSTANCE_IO_H_
#define SUBRANK_INSTANCE_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "subrank/gmsc.h"
#include "subrank/instance.h"

namespace subrank {

absl::StatusOr<Instance> ParseInstanceJson(const std::string& text);
absl::StatusOr<GmscInstance> ParseGmscJson(const std::string& text);

// True when the document's agents are plain arrays of sets.
bool LooksLikeGmscJson(const std::string& text);

// Fails for oracles outside the four file families.
absl::StatusOr<std::string> InstanceToJson(const Instance& instance);
std::string GmscToJson(const GmscInstance& instance);

absl::StatusOr<std::string> ReadTextFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, const std::string& text);

// Reads either format; GMSC files become unit-weight ranking instances.
absl::StatusOr<Instance> LoadAnyInstance(const std::string& path);

}  // namespace subrank

#endif  // SUBRANK_INSTANCE_IO_H_
