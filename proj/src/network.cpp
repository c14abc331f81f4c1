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

#include "netconv/network.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "netconv/error.hpp"

namespace netconv {

std::string key_text(const Key& key) {
  if (const auto* code = std::get_if<std::int64_t>(&key)) return std::to_string(*code);
  return std::get<std::string>(key);
}

NetworkStats network_stats(const Network& network) {
  std::set<Key> ids;
  for (const auto& node : network.nodes) ids.insert(node.id);

  NetworkStats stats;
  stats.n_nodes = static_cast<std::int64_t>(network.nodes.size());
  std::set<Key> relations;
  for (std::size_t i = 0; i < network.links.size(); ++i) {
    const auto& link = network.links[i];
    for (const Key* end : {&link.n1, &link.n2}) {
      if (!ids.contains(*end)) {
        throw Error("dangling-endpoint", "/links/" + std::to_string(i),
                    "link " + std::to_string(i) + " references unknown node '" + key_text(*end) + "'");
      }
    }
    (link.kind == LinkKind::arc ? stats.n_arcs : stats.n_edges) += 1;
    if (link.rel) relations.insert(*link.rel);
  }
  stats.n_relations = static_cast<std::int64_t>(relations.size());

  std::set<std::string> modes;
  for (const auto& node : network.nodes) {
    if (node.mode) modes.insert(*node.mode);
  }
  stats.n_modes = modes.empty() ? 1 : static_cast<std::int64_t>(modes.size());
  return stats;
}

bool is_factorized(const Network& network) {
  const auto is_code = [](const Key& k) { return std::holds_alternative<std::int64_t>(k); };
  if (!network.nodes.empty()) {
    return std::all_of(network.nodes.begin(), network.nodes.end(),
                       [&](const NodeRecord& n) { return is_code(n.id); });
  }
  if (network.links.empty()) return false;
  return std::all_of(network.links.begin(), network.links.end(),
                     [&](const LinkRecord& l) { return is_code(l.n1) && is_code(l.n2); });
}

void reconcile_counters(Network& network) {
  network.info.n_nodes = static_cast<std::int64_t>(network.nodes.size());
  network.info.n_arcs = 0;
  network.info.n_edges = 0;
  for (const auto& link : network.links) {
    (link.kind == LinkKind::arc ? network.info.n_arcs : network.info.n_edges) += 1;
  }
}

bool parallel(const LinkRecord& a, const LinkRecord& b) {
  if (a.kind != b.kind || a.rel != b.rel) return false;
  if (a.n1 == b.n1 && a.n2 == b.n2) return true;
  return a.kind == LinkKind::edge && a.n1 == b.n2 && a.n2 == b.n1;
}

namespace {

using LinkSignature = std::tuple<LinkKind, std::optional<Key>, Key, Key>;

LinkSignature signature(const LinkRecord& link) {
  if (link.kind == LinkKind::edge && link.n2 < link.n1) {
    return {link.kind, link.rel, link.n2, link.n1};
  }
  return {link.kind, link.rel, link.n1, link.n2};
}

}  // namespace

void derive_flags(Network& network) {
  reconcile_counters(network);
  std::set<LinkSignature> seen;
  bool simple = true;
  std::set<Key> relations;
  for (const auto& link : network.links) {
    if (!seen.insert(signature(link)).second) simple = false;
    if (link.rel) relations.insert(*link.rel);
  }
  std::set<std::string> modes;
  for (const auto& node : network.nodes) {
    if (node.mode) modes.insert(*node.mode);
  }
  network.info.simple = simple;
  network.info.directed = network.info.n_edges == 0;
  network.info.multirel = relations.size() > 1;
  network.info.mode = modes.empty() ? 1 : static_cast<std::int64_t>(modes.size());
}

void set_org(Network& network, int org) {
  network.info.org = org;
  network.relations.base = org;
  network.node_coding.base = org;
  for (auto& [name, table] : network.property_codings) table.base = org;
}

Network canonical_order(Network network) {
  auto& table = network.relations;
  table.base = network.info.org;
  if (is_factorized(network)) {
    std::vector<std::string> sorted = table.levels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() == table.levels.size()) {
      CodingTable next{table.name, sorted, table.base};
      for (auto& link : network.links) {
        if (!link.rel) continue;
        const auto* code = std::get_if<std::int64_t>(&*link.rel);
        if (code == nullptr || !table.contains_code(*code)) continue;
        link.rel = *next.code_of(table.level_of(*code));
      }
      table = std::move(next);
    }
  } else {
    std::set<std::string> names(table.levels.begin(), table.levels.end());
    for (const auto& link : network.links) {
      if (link.rel) {
        if (const auto* name = std::get_if<std::string>(&*link.rel); name && !name->empty()) {
          names.insert(*name);
        }
      }
    }
    names.erase(std::string{});
    table.levels.assign(names.begin(), names.end());
  }
  reconcile_counters(network);
  return network;
}

}  // namespace netconv
