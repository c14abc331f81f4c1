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

// Shared helpers for the test binaries: fixture access, independent oracles
// and random generators for round-trip classes.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netconv/network.hpp"
#include "netconv/property.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(NETCONV_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

// ---------------------------------------------------------------------------
// Oracles. Deliberately naive; they share no code with the library.

// Sorted distinct non-missing, non-empty values.
inline std::vector<std::string> oracle_levels(const std::vector<std::optional<std::string>>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    if (!v || v->empty()) continue;
    bool seen = false;
    for (const auto& o : out) seen = seen || o == *v;
    if (!seen) out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Position of each value in `levels` plus `base`; missing maps to `missing`.
inline std::vector<std::int64_t> oracle_encode(const std::vector<std::optional<std::string>>& values,
                                               const std::vector<std::string>& levels, int base, std::int64_t missing) {
  std::vector<std::int64_t> out;
  for (const auto& v : values) {
    std::int64_t code = missing;
    if (v && !v->empty()) {
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] == *v) code = base + static_cast<std::int64_t>(i);
      }
    }
    out.push_back(code);
  }
  return out;
}

struct Triple {
  std::int64_t s, f;
  std::int64_t v;
};

// Value at t by scanning every segment; nullopt when none covers t.
inline std::optional<std::int64_t> oracle_tq_at(const std::vector<Triple>& tq, std::int64_t t) {
  std::optional<std::int64_t> hit;
  for (const auto& seg : tq) {
    if (seg.s <= t && t < seg.f) hit = seg.v;
  }
  return hit;
}

// True when any two half-open segments intersect.
inline bool oracle_any_overlap(const std::vector<Triple>& tq) {
  for (std::size_t i = 0; i < tq.size(); ++i) {
    for (std::size_t j = i + 1; j < tq.size(); ++j) {
      if (std::max(tq[i].s, tq[j].s) < std::min(tq[i].f, tq[j].f)) return true;
    }
  }
  return false;
}

inline netconv::TemporalQuantity to_tq(const std::vector<Triple>& tq) {
  netconv::TemporalQuantity out;
  for (const auto& seg : tq) out.segments.push_back({seg.s, seg.f, netconv::PropertyValue(seg.v)});
  return out;
}

// ---------------------------------------------------------------------------
// Random generation.

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  double real() {
    switch (range(0, 3)) {
      case 0: return static_cast<double>(range(-1000, 1000));
      case 1: return std::uniform_real_distribution<double>(-1e6, 1e6)(rng_);
      case 2: return std::uniform_real_distribution<double>(0, 1)(rng_);
      default: return static_cast<double>(range(0, 99999)) / 10.0;
    }
  }
  std::int64_t integer() { return std::uniform_int_distribution<std::int64_t>(-1'000'000'000'000, 1'000'000'000'000)(rng_); }

  // Text over a pool that stresses quoting: delimiters, quotes, spaces,
  // non-ASCII letters and the NA markers.
  std::string text(int min_len = 1, int max_len = 12, bool with_newline = false) {
    static const std::vector<std::string> special{"NA", "NaN", "na", "0", "1.5", "-", " ", "x y"};
    if (coin(0.05)) return special[static_cast<std::size_t>(range(0, static_cast<int>(special.size()) - 1))];
    static const std::vector<std::string> pool{"a", "b", "c", "k", "Z", "Q", "7", " ", ";", ",", "\"", "'",
                                               "é", "š", "Ž", "中", "-", "_", ".", "%", "*", ":", "\t"};
    std::string out;
    const int len = range(min_len, max_len);
    for (int i = 0; i < len; ++i) out += pool[static_cast<std::size_t>(range(0, static_cast<int>(pool.size()) - 1))];
    if (with_newline && coin(0.1)) out += "\nline";
    return out;
  }

  // Text without control characters or leading/trailing blanks.
  std::string plain_text(int min_len = 1, int max_len = 12) {
    std::string out = text(min_len, max_len);
    std::replace(out.begin(), out.end(), '\t', '~');
    const auto first = out.find_first_not_of(' ');
    if (first == std::string::npos) return "v" + std::to_string(range(0, 999));
    out = out.substr(first, out.find_last_not_of(' ') - first + 1);
    return out;
  }

  std::vector<std::string> distinct_texts(int n, bool plain) {
    std::set<std::string> seen;
    std::vector<std::string> out;
    while (static_cast<int>(out.size()) < n) {
      auto t = plain ? plain_text() : text();
      while (t.empty() || seen.contains(t)) t += "_" + std::to_string(out.size());
      seen.insert(t);
      out.push_back(t);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Well-formed tq with integer values.
inline std::vector<Triple> random_triples(Gen& g, int max_segments, std::int64_t t0, std::int64_t t1) {
  std::vector<Triple> out;
  std::int64_t t = t0 + g.range(0, 3);
  const int n = g.range(0, max_segments);
  for (int i = 0; i < n && t < t1; ++i) {
    const std::int64_t f = std::min<std::int64_t>(t1, t + g.range(1, 6));
    out.push_back({t, f, static_cast<std::int64_t>(g.range(-5, 50))});
    t = f + g.range(0, 4);
  }
  return out;
}

inline netconv::PropertyValue random_scalar(Gen& g) {
  switch (g.range(0, 3)) {
    case 0: return netconv::PropertyValue(g.coin());
    case 1: return netconv::PropertyValue(g.integer());
    case 2: return netconv::PropertyValue(g.real());
    default: return netconv::PropertyValue(g.text(0, 10, true));
  }
}

inline netconv::PropertyValue random_value(Gen& g, int depth = 0) {
  using netconv::PropertyValue;
  const int kind = g.range(0, depth > 1 ? 3 : 7);
  if (kind <= 3) return random_scalar(g);
  if (kind == 4) {
    netconv::PropertyList list;
    const int n = g.range(0, 4);
    for (int i = 0; i < n; ++i) list.push_back(random_value(g, depth + 1));
    return PropertyValue(std::move(list));
  }
  if (kind == 5) {
    const double a = g.real(), b = g.real();
    return PropertyValue(netconv::Interval{std::min(a, b), std::max(a, b)});
  }
  if (kind == 6) {
    netconv::TemporalQuantity tq;
    std::int64_t t = g.range(-5, 5);
    const int n = g.range(1, 3);
    for (int i = 0; i < n; ++i) {
      const std::int64_t f = t + g.range(1, 5);
      tq.segments.push_back({t, f, random_scalar(g)});
      t = f;
    }
    return PropertyValue(std::move(tq));
  }
  PropertyValue::Record rec;
  const int n = g.range(0, 3);
  for (int i = 0; i < n; ++i) rec.fields["f" + std::to_string(g.range(0, 9))] = random_value(g, depth + 1);
  return PropertyValue(std::move(rec));
}

inline netconv::PropertyMap random_props(Gen& g, int max_props, const std::string& prefix) {
  netconv::PropertyMap props;
  const int n = g.range(0, max_props);
  for (int i = 0; i < n; ++i) props[prefix + std::to_string(g.range(0, 6))] = random_value(g);
  return props;
}

// Labeled network in the class the two-table CSV format carries exactly:
// text ids, text properties, reals for coordinates, derived info flags.
inline netconv::Network random_csv_network(Gen& g, int max_nodes = 200, int max_links = 200) {
  using namespace netconv;
  Network net;
  const int n = g.range(0, max_nodes);
  const auto names = g.distinct_texts(n, false);
  const auto modes = g.distinct_texts(3, false);
  const auto rels = g.distinct_texts(g.range(1, 5), false);
  const bool with_lab = g.coin(0.3), with_slab = g.coin(0.3), with_xy = g.coin(0.5), with_mode = g.coin(0.6);
  for (int i = 0; i < n; ++i) {
    NodeRecord node;
    node.id = names[static_cast<std::size_t>(i)];
    node.lab = with_lab && g.coin() ? g.text() : names[static_cast<std::size_t>(i)];
    if (with_slab && g.coin()) node.slab = g.text();
    if (with_mode && g.coin(0.8)) node.mode = modes[static_cast<std::size_t>(g.range(0, 2))];
    if (with_xy && g.coin(0.9)) node.x = g.real();
    if (with_xy && g.coin(0.9)) node.y = g.real();
    const int np = g.range(0, 3);
    for (int p = 0; p < np; ++p) node.props["attr" + std::to_string(g.range(0, 4))] = g.text(1, 10, true);
    net.nodes.push_back(std::move(node));
  }
  const bool mixed = g.coin(0.3), weighted = g.coin(0.5);
  const int m = n == 0 ? 0 : g.range(0, max_links);
  for (int i = 0; i < m; ++i) {
    LinkRecord link;
    link.n1 = names[static_cast<std::size_t>(g.range(0, n - 1))];
    link.n2 = names[static_cast<std::size_t>(g.range(0, n - 1))];
    if (g.coin(0.95)) link.rel = rels[static_cast<std::size_t>(g.range(0, static_cast<int>(rels.size()) - 1))];
    if (mixed && g.coin()) link.kind = LinkKind::edge;
    if (weighted && g.coin()) link.weight = g.real();
    if (g.coin(0.2)) link.label = g.text();
    if (g.coin(0.2)) link.props["note"] = g.text(1, 8, true);
    net.links.push_back(std::move(link));
  }
  return net;
}

// Factorized, property-free network in the class Pajek NET carries: base 1,
// ids 1..n in order, distinct vertex labels, sorted relation names.
inline netconv::Network random_pajek_network(Gen& g, bool coordinates, int max_nodes = 200, int max_links = 200) {
  using namespace netconv;
  Network net;
  const int n = g.range(0, max_nodes);
  const auto labels = g.distinct_texts(n, true);
  for (int i = 0; i < n; ++i) {
    NodeRecord node;
    node.id = std::int64_t{i + 1};
    node.lab = labels[static_cast<std::size_t>(i)];
    if (coordinates) {
      node.x = g.real();
      node.y = g.real();
    }
    net.nodes.push_back(std::move(node));
  }
  net.node_coding = CodingTable{"node", labels, 1};
  if (g.coin(0.3)) net.info.title = "t" + std::to_string(g.range(0, 99)) + " " + g.plain_text();

  auto rels = g.distinct_texts(g.range(0, 5), true);
  std::sort(rels.begin(), rels.end());
  net.relations = CodingTable{"relation", rels, 1};
  const bool mixed = g.coin(0.4);
  const bool all_edges = !mixed && g.coin(0.2);
  const int m = n == 0 ? 0 : g.range(0, max_links);
  for (int i = 0; i < m; ++i) {
    LinkRecord link;
    link.n1 = std::int64_t{g.range(1, n)};
    link.n2 = std::int64_t{g.range(1, n)};
    if (!rels.empty()) link.rel = std::int64_t{g.range(1, static_cast<int>(rels.size()))};
    if (all_edges || (mixed && g.coin())) link.kind = LinkKind::edge;
    if (g.coin(0.5)) link.weight = g.real();
    if (g.coin(0.2)) {
      auto label = g.plain_text();
      if (link.rel && rels[static_cast<std::size_t>(std::get<std::int64_t>(*link.rel) - 1)] == label) label += "!";
      link.label = label;
    }
    net.links.push_back(std::move(link));
  }
  derive_flags(net);
  return net;
}

// Network with every member NetsJSON carries, labeled or factorized.
inline netconv::Network random_netsjson_network(Gen& g, int max_nodes = 200, int max_links = 200) {
  using namespace netconv;
  Network net;
  const bool factorized = g.coin(0.5);
  const int org = g.range(0, 1);
  const int n = g.range(0, max_nodes);
  const auto labels = g.distinct_texts(n, false);
  auto rels = g.distinct_texts(g.range(0, 4), false);
  std::sort(rels.begin(), rels.end());

  auto& info = net.info;
  info.org = org;
  info.simple = g.coin();
  info.directed = g.coin();
  info.multirel = g.coin();
  info.mode = g.range(1, 4);
  info.network = g.text(0, 8);
  info.title = g.text(0, 20, true);
  std::int64_t t0 = 0, t1 = 0;
  if (g.coin(0.5)) {
    TimeWindow w;
    w.t_min = g.range(-10, 10);
    w.t_max = w.t_min + g.range(0, 40);
    for (int k = g.range(0, 3); k > 0; --k) w.t_labs[g.range(-20, 60)] = g.text();
    t0 = w.t_min;
    t1 = w.t_max + 1;
    info.time = w;
  }
  for (int k = g.range(0, 3); k > 0; --k) {
    EventRecord ev;
    ev.date = "20" + std::to_string(10 + g.range(0, 15)) + "-0" + std::to_string(g.range(1, 9)) + "-1" + std::to_string(g.range(0, 9));
    ev.title = g.text();
    if (g.coin()) ev.author = g.text();
    if (g.coin()) ev.desc = g.text(0, 30, true);
    if (g.coin()) ev.url = "https://example.org/" + std::to_string(g.range(0, 999));
    if (g.coin()) ev.cite = g.text();
    if (g.coin()) ev.copy = g.text();
    info.meta.push_back(std::move(ev));
  }
  if (g.coin(0.7)) info.created = "2019-03-0" + std::to_string(g.range(1, 9));
  if (info.created && g.coin(0.7)) info.modified = "2024-11-2" + std::to_string(g.range(0, 9));
  info.extra = random_props(g, 2, "info_");
  if (g.coin(0.2)) {
    static const std::vector<std::string> blobs{R"({"k":[1,2,3]})", R"([true,null,"x"])", R"("raw")", R"({"a":{"b":1.5}})"};
    info.data = blobs[static_cast<std::size_t>(g.range(0, 3))];
  }

  std::vector<Key> ids;
  for (int i = 0; i < n; ++i) {
    NodeRecord node;
    node.id = factorized ? Key{std::int64_t{org + i}} : Key{labels[static_cast<std::size_t>(i)]};
    ids.push_back(node.id);
    node.lab = factorized || g.coin(0.3) ? labels[static_cast<std::size_t>(i)] : g.text(0, 8);
    if (g.coin(0.2)) node.slab = g.text();
    if (g.coin(0.5)) node.x = g.real();
    if (g.coin(0.5)) node.y = g.real();
    if (g.coin(0.4)) node.mode = "m" + std::to_string(g.range(1, 3));
    if (info.time && g.coin(0.6)) node.tq = to_tq(random_triples(g, 4, t0, t1));
    node.props = random_props(g, 3, "p");
    net.nodes.push_back(std::move(node));
  }
  if (factorized) {
    net.node_coding = CodingTable{"node", labels, org};
    if (g.coin(0.3)) net.labeled_org = g.range(0, 1);
  }
  net.relations = CodingTable{"relation", rels, org};

  const int m = n == 0 ? 0 : g.range(0, max_links);
  for (int i = 0; i < m; ++i) {
    LinkRecord link;
    link.kind = g.coin(0.3) ? LinkKind::edge : LinkKind::arc;
    link.n1 = ids[static_cast<std::size_t>(g.range(0, n - 1))];
    link.n2 = ids[static_cast<std::size_t>(g.range(0, n - 1))];
    if (!rels.empty() && g.coin(0.9)) {
      const auto r = static_cast<std::size_t>(g.range(0, static_cast<int>(rels.size()) - 1));
      link.rel = factorized ? Key{std::int64_t{org + static_cast<std::int64_t>(r)}} : Key{rels[r]};
    }
    if (g.coin(0.5)) link.weight = g.real();
    if (g.coin(0.2)) link.label = g.text(0, 8);
    if (info.time && g.coin(0.5)) link.tq = to_tq(random_triples(g, 3, t0, t1));
    link.props = random_props(g, 2, "q");
    net.links.push_back(std::move(link));
  }
  if (g.coin(0.3)) {
    CodingTable table{"p0", g.distinct_texts(g.range(1, 4), false), org};
    net.property_codings.emplace("p0", std::move(table));
  }
  set_org(net, org);
  reconcile_counters(net);
  return net;
}

}  // namespace testing
