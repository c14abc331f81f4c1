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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "netconv/coding.hpp"
#include "netconv/property.hpp"

namespace netconv {

/// Node identifier, relation name, or their integer codes.
///
/// Labeled networks use text keys throughout; factorized networks use codes
/// drawn from the network's coding tables.
using Key = std::variant<std::int64_t, std::string>;

std::string key_text(const Key& key);

enum class LinkKind { arc, edge };

struct TimeWindow {
  std::int64_t t_min = 0;
  std::int64_t t_max = 0;
  std::map<std::int64_t, std::string> t_labs;

  bool operator==(const TimeWindow&) const = default;
};

/// One entry of the dataset's life log.
struct EventRecord {
  std::string date;
  std::string title;
  std::optional<std::string> author;
  std::optional<std::string> desc;
  std::optional<std::string> url;
  std::optional<std::string> cite;
  std::optional<std::string> copy;

  bool operator==(const EventRecord&) const = default;
};

struct InfoBlock {
  int org = 1;
  std::int64_t n_nodes = 0;
  std::int64_t n_arcs = 0;
  std::int64_t n_edges = 0;
  bool simple = true;
  bool directed = true;
  bool multirel = false;
  std::int64_t mode = 1;
  std::string network;
  std::string title;
  std::optional<TimeWindow> time;
  std::vector<EventRecord> meta;
  std::optional<std::string> created;
  std::optional<std::string> modified;
  PropertyMap extra;
  // Opaque `data` subtree kept as compact JSON text.
  std::optional<std::string> data;

  bool operator==(const InfoBlock&) const = default;
};

struct NodeRecord {
  Key id;
  std::string lab;
  std::optional<std::string> slab;
  std::optional<double> x;
  std::optional<double> y;
  std::optional<std::string> mode;
  std::optional<TemporalQuantity> tq;
  PropertyMap props;

  bool operator==(const NodeRecord&) const = default;
};

struct LinkRecord {
  LinkKind kind = LinkKind::arc;
  Key n1;
  Key n2;
  std::optional<Key> rel;
  double weight = 1.0;
  std::optional<std::string> label;
  std::optional<TemporalQuantity> tq;
  PropertyMap props;

  bool operator==(const LinkRecord&) const = default;
};

struct Network {
  InfoBlock info;
  std::vector<NodeRecord> nodes;
  std::vector<LinkRecord> links;
  CodingTable relations{"relation", {}, 1};
  CodingTable node_coding{"node", {}, 1};
  std::map<std::string, CodingTable> property_codings;
  // Index base of the labeled network this one was factorized from;
  // restored by defactorize_network.
  std::optional<int> labeled_org;

  bool operator==(const Network&) const = default;
};

struct NetworkStats {
  std::int64_t n_nodes = 0;
  std::int64_t n_arcs = 0;
  std::int64_t n_edges = 0;
  std::int64_t n_relations = 0;
  std::int64_t n_modes = 1;

  bool operator==(const NetworkStats&) const = default;
};

/// Counts computed from the node and link lists (never copied from info).
/// Throws Error("dangling-endpoint") naming the first unresolved link.
NetworkStats network_stats(const Network& network);

/// True when every node id and link endpoint is an integer code.
/// An empty network counts as labeled.
bool is_factorized(const Network& network);

/// Sorts the relation coding by code point (remapping relation codes of a
/// factorized network) and recomputes the info counters.
Network canonical_order(Network network);

/// Recomputes n_nodes, n_arcs and n_edges from the lists.
void reconcile_counters(Network& network);

/// Sets simple, directed, multirel and mode from the content. Readers of
/// formats that cannot carry these flags use this so their output is
/// reproducible.
void derive_flags(Network& network);

/// Sets info.org and the base of every coding table.
void set_org(Network& network, int org);

/// True when the two links have the same kind, relation and endpoints
/// (ordered for arcs, unordered for edges).
bool parallel(const LinkRecord& a, const LinkRecord& b);

}  // namespace netconv
