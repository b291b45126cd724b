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

#include "subrank/instance_io.h"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "subrank/functions.h"

namespace subrank {
namespace {

using nlohmann::json;

absl::Status Invalid(const std::string& where, const std::string& what) {
  return absl::InvalidArgumentError(absl::StrCat(where, ": ", what));
}

absl::StatusOr<GmscSet> SetFromJson(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("members") || !j.contains("K")) {
    return Invalid(where, "expected {\"members\": [...], \"K\": int}");
  }
  GmscSet set;
  for (int e : j["members"].get<std::vector<int>>()) set.members.push_back(e - 1);
  set.requirement = j["K"].get<int>();
  return set;
}

json SetToJson(const GmscSet& set) {
  std::vector<int> members;
  for (Element e : set.members) members.push_back(e + 1);
  return json{{"members", members}, {"K", set.requirement}};
}

absl::StatusOr<std::shared_ptr<const SubmodularFunction>> FunctionFromJson(
    int n, const json& j, const std::string& where,
    const std::map<std::string, std::shared_ptr<const OdtTable>>& tables) {
  const std::string family = j.value("family", "");
  const json params = j.value("params", json::object());
  if (family == "singleton") {
    auto f = SingletonFunction::Create(n, params.at("element").get<int>() - 1);
    if (!f.ok()) return Invalid(where, std::string(f.status().message()));
    return std::shared_ptr<const SubmodularFunction>(*f);
  }
  if (family == "gmsc") {
    auto set = SetFromJson(params, where);
    if (!set.ok()) return set.status();
    auto f = GmscFunction::Create(n, *std::move(set));
    if (!f.ok()) return Invalid(where, std::string(f.status().message()));
    return std::shared_ptr<const SubmodularFunction>(*f);
  }
  if (family == "coverage") {
    std::map<std::string, int> item_index;
    std::vector<int64_t> weights;
    for (const json& item : params.at("items")) {
      const std::string id = item.at("id").dump();
      if (!item_index.emplace(id, static_cast<int>(weights.size())).second) {
        return Invalid(where, absl::StrCat("duplicate item id ", id));
      }
      weights.push_back(item.at("w").get<int64_t>());
    }
    std::vector<std::vector<int>> covers(n);
    for (const auto& [key, ids] : params.at("covers").items()) {
      int e = 0;
      try {
        e = std::stoi(key) - 1;
      } catch (const std::exception&) {
        return Invalid(where, absl::StrCat("bad element key '", key, "'"));
      }
      if (e < 0 || e >= n) {
        return Invalid(where, absl::StrCat("element ", key, " outside [1, ",
                                           n, "]"));
      }
      for (const json& id : ids) {
        const auto it = item_index.find(id.dump());
        if (it == item_index.end()) {
          return Invalid(where, absl::StrCat("unknown item id ", id.dump()));
        }
        covers[e].push_back(it->second);
      }
    }
    auto f = CoverageFunction::Create(n, std::move(weights), std::move(covers));
    if (!f.ok()) return Invalid(where, std::string(f.status().message()));
    return std::shared_ptr<const SubmodularFunction>(*f);
  }
  if (family == "odt") {
    const std::string ref = params.at("table_ref").get<std::string>();
    const auto it = tables.find(ref);
    if (it == tables.end()) {
      return Invalid(where, absl::StrCat("unknown table_ref '", ref, "'"));
    }
    if (it->second->num_columns() != n) {
      return Invalid(where, absl::StrCat("table '", ref, "' has ",
                                         it->second->num_columns(),
                                         " columns, n = ", n));
    }
    auto f = OdtFunction::Create(it->second, params.at("row").get<int>() - 1);
    if (!f.ok()) return Invalid(where, std::string(f.status().message()));
    return std::shared_ptr<const SubmodularFunction>(*f);
  }
  return Invalid(where, absl::StrCat("unknown family '", family, "'"));
}

absl::StatusOr<json> ParseDocument(const std::string& text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("agents") ||
        !doc["agents"].is_array()) {
      return absl::InvalidArgumentError(
          "instance must be an object with \"n\" and \"agents\"");
    }
    return doc;
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("invalid JSON: ", e.what()));
  }
}

}  // namespace

absl::StatusOr<Instance> ParseInstanceJson(const std::string& text) {
  auto doc = ParseDocument(text);
  if (!doc.ok()) return doc.status();
  try {
    const int n = (*doc)["n"].get<int>();
    std::map<std::string, std::shared_ptr<const OdtTable>> tables;
    if (doc->contains("tables")) {
      for (const auto& [name, rows] : (*doc)["tables"].items()) {
        auto table = OdtTable::Create(rows.get<std::vector<std::vector<int>>>());
        if (!table.ok()) {
          return Invalid(absl::StrCat("table '", name, "'"),
                         std::string(table.status().message()));
        }
        tables.emplace(name, *table);
      }
    }
    std::vector<Agent> agents;
    const json& list = (*doc)["agents"];
    for (size_t i = 0; i < list.size(); ++i) {
      Agent agent;
      const json& functions = list[i].at("functions");
      for (size_t j = 0; j < functions.size(); ++j) {
        const std::string where =
            absl::StrCat("agent ", i + 1, " function ", j + 1);
        auto f = FunctionFromJson(n, functions[j], where, tables);
        if (!f.ok()) return f.status();
        agent.functions.push_back(
            {*std::move(f), functions[j].value("weight", 1.0)});
      }
      agents.push_back(std::move(agent));
    }
    return Instance::Create(n, std::move(agents));
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("instance: ", e.what()));
  }
}

bool LooksLikeGmscJson(const std::string& text) {
  auto doc = ParseDocument(text);
  if (!doc.ok()) return false;
  const json& agents = (*doc)["agents"];
  return !agents.empty() && agents[0].is_array();
}

absl::StatusOr<GmscInstance> ParseGmscJson(const std::string& text) {
  auto doc = ParseDocument(text);
  if (!doc.ok()) return doc.status();
  try {
    const int n = (*doc)["n"].get<int>();
    std::vector<std::vector<GmscSet>> agents;
    const json& list = (*doc)["agents"];
    for (size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_array()) {
        return Invalid(absl::StrCat("agent ", i + 1), "expected a list of sets");
      }
      std::vector<GmscSet> sets;
      for (size_t j = 0; j < list[i].size(); ++j) {
        auto set =
            SetFromJson(list[i][j], absl::StrCat("agent ", i + 1, " set ", j + 1));
        if (!set.ok()) return set.status();
        sets.push_back(*std::move(set));
      }
      agents.push_back(std::move(sets));
    }
    return GmscInstance::Create(n, std::move(agents));
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("instance: ", e.what()));
  }
}

absl::StatusOr<std::string> InstanceToJson(const Instance& instance) {
  json agents = json::array();
  json tables = json::object();
  std::map<const OdtTable*, std::string> table_names;
  for (int i = 0; i < instance.num_agents(); ++i) {
    json functions = json::array();
    for (const WeightedFunction& wf : instance.agent(i).functions) {
      const SubmodularFunction* f = wf.function.get();
      json params;
      if (const auto* s = dynamic_cast<const SingletonFunction*>(f)) {
        params = {{"element", s->element() + 1}};
      } else if (const auto* g = dynamic_cast<const GmscFunction*>(f)) {
        params = SetToJson(g->set());
      } else if (const auto* c = dynamic_cast<const CoverageFunction*>(f)) {
        json items = json::array();
        for (size_t item = 0; item < c->item_weights().size(); ++item) {
          items.push_back({{"id", item + 1}, {"w", c->item_weights()[item]}});
        }
        json covers = json::object();
        for (size_t e = 0; e < c->covers().size(); ++e) {
          if (c->covers()[e].empty()) continue;
          std::vector<int> ids;
          for (int item : c->covers()[e]) ids.push_back(item + 1);
          covers[std::to_string(e + 1)] = ids;
        }
        params = {{"items", items}, {"covers", covers}};
      } else if (const auto* o = dynamic_cast<const OdtFunction*>(f)) {
        auto [it, inserted] = table_names.emplace(
            o->table().get(), absl::StrCat("t", table_names.size() + 1));
        if (inserted) tables[it->second] = o->table()->rows();
        params = {{"table_ref", it->second}, {"row", o->row() + 1}};
      } else {
        return absl::InvalidArgumentError(absl::StrCat(
            "family '", f->family(), "' has no file representation"));
      }
      functions.push_back(
          {{"family", f->family()}, {"params", params}, {"weight", wf.weight}});
    }
    agents.push_back({{"functions", functions}});
  }
  json doc = {{"n", instance.n()}, {"agents", agents}};
  if (!tables.empty()) doc["tables"] = tables;
  return doc.dump(2) + "\n";
}

std::string GmscToJson(const GmscInstance& instance) {
  json agents = json::array();
  for (const auto& sets : instance.agents()) {
    json list = json::array();
    for (const GmscSet& set : sets) list.push_back(SetToJson(set));
    agents.push_back(list);
  }
  return json{{"n", instance.n()}, {"agents", agents}}.dump(2) + "\n";
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write '", path, "'"));
  }
  out << text;
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<Instance> LoadAnyInstance(const std::string& path) {
  auto text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  if (LooksLikeGmscJson(*text)) {
    auto gmsc = ParseGmscJson(*text);
    if (!gmsc.ok()) return gmsc.status();
    return gmsc->ToInstance();
  }
  return ParseInstanceJson(*text);
}

}  // namespace subrank
