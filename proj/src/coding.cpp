// Copyright 2026 The netconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netconv/coding.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "netconv/error.hpp"
#include "netconv/network.hpp"

namespace netconv {

std::optional<std::int64_t> CodingTable::code_of(const std::string& value) const {
  auto it = std::find(levels.begin(), levels.end(), value);
  if (it == levels.end()) return std::nullopt;
  return base + static_cast<std::int64_t>(it - levels.begin());
}

const std::string& CodingTable::level_of(std::int64_t code) const {
  if (!contains_code(code)) {
    throw Error("code-range", "", "code " + std::to_string(code) + " outside coding table '" + name + "'");
  }
  return levels[static_cast<std::size_t>(code - base)];
}

CodingTable build_coding_table(std::string name, std::span<const OptionalText> values,
                               LevelPolicy policy, int base) {
  CodingTable table{std::move(name), {}, base};
  if (policy == LevelPolicy::sorted) {
    std::set<std::string> distinct;
    for (const auto& v : values) {
      if (v && !v->empty()) distinct.insert(*v);
    }
    table.levels.assign(distinct.begin(), distinct.end());
    return table;
  }
  std::set<std::string> seen;
  for (const auto& v : values) {
    if (v && !v->empty() && seen.insert(*v).second) table.levels.push_back(*v);
  }
  return table;
}

namespace {

// Level lookup for bulk encoding; linear `code_of` is fine for single values.
std::unordered_map<std::string, std::int64_t> level_index(const CodingTable& table) {
  std::unordered_map<std::string, std::int64_t> index;
  index.reserve(table.levels.size());
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    index.emplace(table.levels[i], table.base + static_cast<std::int64_t>(i));
  }
  return index;
}

}  // namespace

std::vector<std::int64_t> encode(std::span<const OptionalText> values, const CodingTable& table,
                                 std::int64_t missing_code) {
  const auto index = level_index(table);
  std::vector<std::int64_t> codes;
  codes.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& v = values[i];
    if (!v) {
      if (table.contains_code(missing_code)) {
        throw Error("missing-code-live", "index " + std::to_string(i),
                    "missing code " + std::to_string(missing_code) + " is also a level code of '" +
                        table.name + "'");
      }
      codes.push_back(missing_code);
      continue;
    }
    auto it = index.find(*v);
    if (it == index.end()) {
      throw Error("unknown-level", "index " + std::to_string(i),
                  "value '" + *v + "' is not a level of '" + table.name + "'");
    }
    codes.push_back(it->second);
  }
  return codes;
}

std::vector<OptionalText> decode(std::span<const std::int64_t> codes, const CodingTable& table,
                                 std::int64_t missing_code) {
  std::vector<OptionalText> values;
  values.reserve(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto code = codes[i];
    if (code == missing_code && !table.contains_code(code)) {
      values.emplace_back(std::nullopt);
    } else if (table.contains_code(code)) {
      values.emplace_back(table.levels[static_cast<std::size_t>(code - table.base)]);
    } else {
      throw Error("code-range", "index " + std::to_string(i),
                  "code " + std::to_string(code) + " outside [" + std::to_string(table.base) + ", " +
                      std::to_string(table.base + static_cast<std::int64_t>(table.size()) - 1) + "]");
    }
  }
  return values;
}

Network factorize_network(Network network, int base) {
  if (base != 0 && base != 1) {
    throw Error("org-range", "/info/org", "index base must be 0 or 1, got " + std::to_string(base));
  }
  if (is_factorized(network)) {
    throw Error("already-factorized", "", "network already uses integer codes");
  }

  std::vector<OptionalText> ids;
  ids.reserve(network.nodes.size());
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    const auto& id = std::get<std::string>(network.nodes[i].id);
    if (id.empty()) throw Error("node-id-invalid", "/nodes/" + std::to_string(i) + "/id", "empty node id");
    ids.emplace_back(id);
  }
  auto node_coding = build_coding_table("node", ids, LevelPolicy::file_order, base);
  if (node_coding.size() != ids.size()) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!seen.insert(*ids[i]).second) {
        throw Error("duplicate-node-id", "/nodes/" + std::to_string(i) + "/id",
                    "duplicate node id '" + *ids[i] + "'");
      }
    }
  }

  std::vector<OptionalText> rel_names(network.relations.levels.begin(), network.relations.levels.end());
  for (const auto& link : network.links) {
    if (link.rel) rel_names.emplace_back(std::get<std::string>(*link.rel));
  }
  auto relations = build_coding_table(network.relations.name, rel_names, LevelPolicy::sorted, base);

  const auto node_index = level_index(node_coding);
  const auto rel_index = level_index(relations);
  for (std::size_t i = 0; i < network.links.size(); ++i) {
    auto& link = network.links[i];
    for (auto* end : {&link.n1, &link.n2}) {
      auto it = node_index.find(std::get<std::string>(*end));
      if (it == node_index.end()) {
        throw Error("dangling-endpoint", "/links/" + std::to_string(i),
                    "unknown node '" + key_text(*end) + "'");
      }
      *end = it->second;
    }
    if (link.rel) {
      auto it = rel_index.find(std::get<std::string>(*link.rel));
      if (it == rel_index.end()) {
        throw Error("relation-unknown", "/links/" + std::to_string(i) + "/rel", "empty relation name");
      }
      link.rel = it->second;
    }
  }
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    network.nodes[i].id = base + static_cast<std::int64_t>(i);
  }

  network.labeled_org = network.info.org;
  network.node_coding = std::move(node_coding);
  network.relations = std::move(relations);
  set_org(network, base);
  return network;
}

Network defactorize_network(Network network) {
  if (!network.nodes.empty() && !is_factorized(network)) {
    throw Error("cannot-invert", "", "network is not factorized");
  }
  const auto& nodes = network.node_coding;
  const auto& rels = network.relations;
  const auto node_label = [&](const Key& key, const std::string& where) -> std::string {
    const auto code = std::get<std::int64_t>(key);
    if (!nodes.contains_code(code)) {
      throw Error("cannot-invert", where, "node code " + std::to_string(code) + " has no entry in the node coding table");
    }
    return nodes.level_of(code);
  };

  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    network.nodes[i].id = node_label(network.nodes[i].id, "/nodes/" + std::to_string(i) + "/id");
  }
  for (std::size_t i = 0; i < network.links.size(); ++i) {
    auto& link = network.links[i];
    const auto where = "/links/" + std::to_string(i);
    link.n1 = node_label(link.n1, where + "/n1");
    link.n2 = node_label(link.n2, where + "/n2");
    if (link.rel) {
      const auto code = std::get<std::int64_t>(*link.rel);
      if (!rels.contains_code(code)) {
        throw Error("cannot-invert", where + "/rel", "relation code " + std::to_string(code) + " has no name");
      }
      link.rel = rels.level_of(code);
    }
  }

  network.node_coding.levels.clear();
  const int org = network.labeled_org.value_or(network.info.org);
  network.labeled_org.reset();
  set_org(network, org);
  return network;
}

Network rebase_network(Network network, int base) {
  if (base != 0 && base != 1) {
    throw Error("org-range", "/info/org", "index base must be 0 or 1, got " + std::to_string(base));
  }
  const std::int64_t shift = base - network.info.org;
  if (shift != 0 && is_factorized(network)) {
    const auto move = [shift](Key& key) {
      if (auto* code = std::get_if<std::int64_t>(&key)) *code += shift;
    };
    for (auto& node : network.nodes) move(node.id);
    for (auto& link : network.links) {
      move(link.n1);
      move(link.n2);
      if (link.rel) move(*link.rel);
    }
  }
  set_org(network, base);
  return network;
}

}  // namespace netconv
