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

#include "netconv/validation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "netconv/utf8.hpp"

namespace netconv {

std::string_view to_string(Level level) { return level == Level::strict ? "strict" : "lenient"; }

bool ValidationReport::has_errors() const { return count(Severity::error) > 0; }

std::size_t ValidationReport::count(Severity severity) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.severity == severity; }));
}

namespace {

constexpr RuleInfo kRules[] = {
    // NetsJSON document structure
    {"json-syntax", "netsjson", "input is not well-formed JSON"},
    {"missing-member", "netsjson", "a required member (netsJSON, info, nodes, links, id, n1, n2, Tmin, Tmax) is absent"},
    {"unsupported-version", "netsjson", "netsJSON member is not \"basic\""},
    {"wrong-type", "netsjson", "a member has the wrong JSON type"},
    {"unknown-member", "netsjson", "unrecognized top-level member (dropped on read)"},
    {"mixed-id-kinds", "netsjson", "node ids, endpoints and relations mix integer codes and text"},
    {"invalid-link-type", "netsjson", "link type is neither \"arc\" nor \"edge\""},
    {"tq-malformed", "netsjson", "temporal quantity is not a list of [start, finish, value] triples"},
    {"tlabs-key", "netsjson", "Tlabs key is not an integer time point"},
    {"counter-mismatch", "netsjson", "nNodes/nArcs/nEdges disagree with the lists (warning lenient, error strict)"},
    // CSV tables
    {"csv-encoding", "csv", "input is not UTF-8"},
    {"csv-quote", "csv", "unterminated quoted field"},
    {"csv-ragged", "csv", "row has a different number of cells than the header"},
    {"csv-schema", "csv", "required column missing or duplicate column name"},
    {"csv-value", "csv", "weight or type cell cannot be interpreted"},
    // Pajek NET / CLU
    {"pajek-syntax", "pajek", "line does not follow the NET/CLU grammar"},
    {"pajek-section", "pajek", "unsupported section keyword"},
    {"vertex-range", "pajek", "vertex number outside [1, n]"},
    {"relation-conflict", "pajek", "relation number declared twice with different names"},
    {"clu-count", "clu", "number of class values differs from *vertices"},
    // Network model
    {"org-range", "model", "index base is not 0 or 1"},
    {"mode-range", "model", "mode count is below 1"},
    {"mode-mismatch", "model", "declared mode count below the distinct node modes (warning lenient, error strict)"},
    {"date-format", "model", "created, modified or event date is not an ISO-8601 calendar date"},
    {"dates-order", "model", "modified without created, or created after modified"},
    {"metadata-missing", "model", "created or modified date absent (strict only)"},
    {"event-title-missing", "model", "event record has an empty title"},
    {"coding-invalid", "model", "coding table has duplicate or empty levels, or a base other than org"},
    {"node-id-invalid", "model", "empty text id, or code below org"},
    {"duplicate-node-id", "model", "node identifier used twice"},
    {"slab-too-long", "model", "short label longer than the label"},
    {"interval-order", "model", "interval value with lo > hi"},
    {"dangling-endpoint", "model", "link endpoint does not resolve to a node"},
    {"relation-unknown", "model", "link relation missing from the relation coding"},
    {"simple-violated", "model", "simple network contains parallel links"},
    {"multirel-violated", "model", "single-relation network uses several relations"},
    {"directed-with-edges", "model", "directed network contains edges (warning)"},
    // Temporal
    {"time-window-invalid", "temporal", "Tmin greater than Tmax"},
    {"tlabs-out-of-window", "temporal", "Tlabs key outside [Tmin, Tmax]"},
    {"tq-without-window", "temporal", "temporal quantities present but no time window (warning)"},
    {"tq-empty-interval", "temporal", "tq segment with start >= finish"},
    {"tq-unsorted", "temporal", "tq segments not sorted by start"},
    {"tq-overlap", "temporal", "tq segments overlap"},
    {"tq-outside-window", "temporal", "tq segment outside [Tmin, Tmax + 1)"},
    {"tq-missing", "temporal", "node or link of a temporal network lacks tq (strict only)"},
    // Operation errors (raised by library calls and commands, not by documents)
    {"unknown-property", "operation", "no node carries the requested partition property"},
    {"property-type", "operation", "partition property holds non-categorical values"},
    {"unknown-level", "operation", "value not present in the coding table"},
    {"code-range", "operation", "code outside the coding table"},
    {"missing-code-live", "operation", "missing-value code collides with a level code"},
    {"cannot-invert", "operation", "coding tables needed for defactorization are missing"},
    {"already-factorized", "operation", "factorization requested on a factorized network"},
    {"pajek-base", "operation", "Pajek output requested with index base 0"},
    {"pajek-encoding", "operation", "label contains a control character Pajek cannot carry"},
    {"text-encoding", "operation", "text to serialize is not valid UTF-8"},
    {"io-error", "operation", "file cannot be read or written"},
};

class Sink {
 public:
  explicit Sink(Level level) { report_.level = level; }

  void add(Severity sev, std::string rule, std::string location, std::string message) {
    report_.findings.push_back({sev, std::move(rule), std::move(location), std::move(message)});
  }
  void error(std::string rule, std::string location, std::string message) {
    add(Severity::error, std::move(rule), std::move(location), std::move(message));
  }
  // Warning at lenient level, error at strict level.
  void graded(std::string rule, std::string location, std::string message) {
    add(report_.level == Level::strict ? Severity::error : Severity::warning, std::move(rule), std::move(location),
        std::move(message));
  }
  Level level() const { return report_.level; }
  ValidationReport take() {
    sort_findings(report_.findings);
    return std::move(report_);
  }

 private:
  ValidationReport report_;
};

std::string at(std::string_view base, std::size_t index) { return std::string(base) + "/" + std::to_string(index); }

void check_intervals(const PropertyValue& value, const std::string& where, Sink& sink) {
  if (value.is<Interval>()) {
    const auto& iv = value.as<Interval>();
    if (!(iv.lo <= iv.hi)) {
      sink.error("interval-order", where, "interval lo " + format_real(iv.lo) + " exceeds hi " + format_real(iv.hi));
    }
  } else if (value.is<PropertyList>()) {
    const auto& list = value.as<PropertyList>();
    for (std::size_t i = 0; i < list.size(); ++i) check_intervals(list[i], at(where, i), sink);
  } else if (value.is<PropertyValue::Record>()) {
    for (const auto& [name, v] : value.as<PropertyValue::Record>().fields) check_intervals(v, where + "/" + name, sink);
  } else if (value.is<TemporalQuantity>()) {
    const auto& segs = value.as<TemporalQuantity>().segments;
    for (std::size_t i = 0; i < segs.size(); ++i) check_intervals(segs[i].value, at(where + "/$tq", i) + "/2", sink);
  }
}

void check_tq_values(const std::optional<TemporalQuantity>& tq, const std::string& where, Sink& sink) {
  if (!tq) return;
  for (std::size_t i = 0; i < tq->segments.size(); ++i) {
    check_intervals(tq->segments[i].value, at(where, i) + "/2", sink);
  }
}

void check_props(const PropertyMap& props, const std::string& owner, Sink& sink) {
  for (const auto& [name, value] : props) check_intervals(value, owner + "/" + name, sink);
}

void check_coding(const CodingTable& table, int org, const std::string& where, Sink& sink) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    if (table.levels[i].empty()) {
      sink.error("coding-invalid", at(where, i), "empty level in coding table '" + table.name + "'");
    } else if (!seen.insert(table.levels[i]).second) {
      sink.error("coding-invalid", at(where, i), "duplicate level '" + table.levels[i] + "'");
    }
  }
  if (table.base != org) {
    sink.error("coding-invalid", where,
               "coding table base " + std::to_string(table.base) + " differs from org " + std::to_string(org));
  }
}

bool is_code(const Key& key) { return std::holds_alternative<std::int64_t>(key); }

}  // namespace

std::span<const RuleInfo> rule_registry() { return kRules; }

bool is_registered_rule(std::string_view id) {
  return std::any_of(std::begin(kRules), std::end(kRules), [&](const RuleInfo& r) { return r.id == id; });
}

bool is_iso_date(std::string_view text) {
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return false;
  const auto num = [&](std::size_t pos, std::size_t len) -> std::optional<int> {
    int v = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, v);
    if (ec != std::errc{} || ptr != first + len || !std::isdigit(static_cast<unsigned char>(*first))) return std::nullopt;
    return v;
  };
  auto y = num(0, 4), m = num(5, 2), d = num(8, 2);
  if (!y || !m || !d) return false;
  const std::chrono::year_month_day ymd{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
                                        std::chrono::day{static_cast<unsigned>(*d)}};
  if (!ymd.ok()) return false;
  return text.size() == 10 || (text[10] == 'T' && text.size() > 11);
}

ValidationReport check_network(const Network& net, Level level) {
  Sink sink(level);
  const auto& info = net.info;

  if (info.org != 0 && info.org != 1) sink.error("org-range", "/info/org", "org must be 0 or 1, got " + std::to_string(info.org));
  if (info.mode < 1) sink.error("mode-range", "/info/mode", "mode must be at least 1");

  std::int64_t arcs = 0, edges = 0;
  for (const auto& link : net.links) (link.kind == LinkKind::arc ? arcs : edges) += 1;
  const auto counter = [&](const char* member, std::int64_t declared, std::int64_t actual) {
    if (declared != actual) {
      sink.graded("counter-mismatch", std::string("/info/") + member,
                  std::string(member) + " is " + std::to_string(declared) + " but the lists hold " + std::to_string(actual));
    }
  };
  counter("nNodes", info.n_nodes, static_cast<std::int64_t>(net.nodes.size()));
  counter("nArcs", info.n_arcs, arcs);
  counter("nEdges", info.n_edges, edges);

  std::set<std::string> modes;
  for (const auto& node : net.nodes) {
    if (node.mode) modes.insert(*node.mode);
  }
  if (!modes.empty() && info.mode >= 1 && info.mode < static_cast<std::int64_t>(modes.size())) {
    sink.graded("mode-mismatch", "/info/mode",
                "mode is " + std::to_string(info.mode) + " but nodes carry " + std::to_string(modes.size()) + " modes");
  }

  const bool created_ok = info.created && is_iso_date(*info.created);
  const bool modified_ok = info.modified && is_iso_date(*info.modified);
  if (info.created && !created_ok) sink.error("date-format", "/info/created", "'" + *info.created + "' is not an ISO-8601 date");
  if (info.modified && !modified_ok) sink.error("date-format", "/info/modified", "'" + *info.modified + "' is not an ISO-8601 date");
  if (info.modified && !info.created) {
    sink.error("dates-order", "/info/modified", "modified date given without a creation date");
  } else if (created_ok && modified_ok && *info.modified < *info.created) {
    sink.error("dates-order", "/info/modified", "modified " + *info.modified + " precedes created " + *info.created);
  }
  if (level == Level::strict) {
    if (!info.created) sink.error("metadata-missing", "/info", "creation date (created) is required at strict level");
    if (!info.modified) sink.error("metadata-missing", "/info", "modification date (modified) is required at strict level");
  }
  for (std::size_t i = 0; i < info.meta.size(); ++i) {
    const auto& ev = info.meta[i];
    const auto where = at("/info/meta", i);
    if (!is_iso_date(ev.date)) sink.error("date-format", where + "/date", "'" + ev.date + "' is not an ISO-8601 date");
    if (ev.title.empty()) sink.error("event-title-missing", where + "/title", "event has no title");
  }
  for (const auto& [name, value] : info.extra) check_intervals(value, "/info/" + name, sink);

  check_coding(net.relations, info.org, "/info/codings/relation", sink);
  check_coding(net.node_coding, info.org, "/info/codings/node", sink);
  for (const auto& [name, table] : net.property_codings) {
    check_coding(table, info.org, "/info/codings/properties/" + name, sink);
  }

  const bool factorized = is_factorized(net);
  std::set<Key> ids;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    const auto& node = net.nodes[i];
    const auto where = at("/nodes", i);
    if (is_code(node.id) != factorized) {
      sink.error("mixed-id-kinds", where + "/id", "node id kind differs from the other nodes");
    } else if (const auto* code = std::get_if<std::int64_t>(&node.id); code && *code < info.org) {
      sink.error("node-id-invalid", where + "/id", "node code " + std::to_string(*code) + " below org");
    } else if (const auto* text = std::get_if<std::string>(&node.id); text && text->empty()) {
      sink.error("node-id-invalid", where + "/id", "empty node id");
    }
    if (!ids.insert(node.id).second) sink.error("duplicate-node-id", where + "/id", "duplicate node id '" + key_text(node.id) + "'");
    if (node.slab && utf8::length(*node.slab) > utf8::length(node.lab)) {
      sink.error("slab-too-long", where + "/slab", "short label is longer than the label");
    }
    check_tq_values(node.tq, where + "/tq", sink);
    check_props(node.props, where, sink);
  }

  std::set<std::tuple<LinkKind, std::optional<Key>, Key, Key>> seen;
  std::optional<Key> first_rel;
  bool multirel_reported = false;
  bool edges_reported = false;
  for (std::size_t i = 0; i < net.links.size(); ++i) {
    const auto& link = net.links[i];
    const auto where = at("/links", i);
    for (const auto& [member, end] : {std::pair{"/n1", &link.n1}, std::pair{"/n2", &link.n2}}) {
      if (!ids.contains(*end)) {
        sink.error("dangling-endpoint", where + member, "unknown node '" + key_text(*end) + "'");
      }
    }
    if (link.rel) {
      if (is_code(*link.rel) != factorized && !net.nodes.empty()) {
        sink.error("mixed-id-kinds", where + "/rel", "relation kind differs from the node id kind");
      } else if (const auto* code = std::get_if<std::int64_t>(&*link.rel)) {
        if (!net.relations.contains_code(*code)) {
          sink.error("relation-unknown", where + "/rel", "relation code " + std::to_string(*code) + " not in the relation coding");
        }
      } else {
        const auto& name = std::get<std::string>(*link.rel);
        if (!net.relations.code_of(name)) sink.error("relation-unknown", where + "/rel", "relation '" + name + "' not in the relation coding");
      }
      if (!first_rel) {
        first_rel = link.rel;
      } else if (!info.multirel && *first_rel != *link.rel && !multirel_reported) {
        sink.error("multirel-violated", where + "/rel", "network is declared single-relational but uses several relations");
        multirel_reported = true;
      }
    }
    if (info.simple) {
      auto sig = link.kind == LinkKind::edge && link.n2 < link.n1
                     ? std::tuple{link.kind, link.rel, link.n2, link.n1}
                     : std::tuple{link.kind, link.rel, link.n1, link.n2};
      if (!seen.insert(std::move(sig)).second) {
        sink.error("simple-violated", where, "parallel link in a network declared simple");
      }
    }
    if (info.directed && link.kind == LinkKind::edge && !edges_reported) {
      sink.add(Severity::warning, "directed-with-edges", where, "network is declared directed but contains edges");
      edges_reported = true;
    }
    check_tq_values(link.tq, where + "/tq", sink);
    check_props(link.props, where, sink);
  }
  return sink.take();
}

namespace {

void check_tq(const TemporalQuantity& tq, const std::string& where, const std::optional<TimeWindow>& window, Sink& sink) {
  const auto& segs = tq.segments;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& s = segs[k];
    const auto loc = at(where, k);
    if (s.start >= s.finish) {
      sink.error("tq-empty-interval", loc,
                 "segment [" + std::to_string(s.start) + ", " + std::to_string(s.finish) + ") is empty");
    }
    if (k > 0) {
      const auto& prev = segs[k - 1];
      if (prev.start > s.start) {
        sink.error("tq-unsorted", loc, "segment starts before its predecessor");
      } else if (prev.finish > s.start) {
        sink.error("tq-overlap", loc,
                   "segment starting at " + std::to_string(s.start) + " overlaps the one ending at " + std::to_string(prev.finish));
      }
    }
    if (window && (s.start < window->t_min || s.finish > window->t_max + 1)) {
      sink.error("tq-outside-window", loc,
                 "segment [" + std::to_string(s.start) + ", " + std::to_string(s.finish) + ") leaves the time window");
    }
  }
}

void check_tq_props(const PropertyMap& props, const std::string& owner, const std::optional<TimeWindow>& window,
                    Sink& sink, bool& any) {
  for (const auto& [name, value] : props) {
    if (value.is<TemporalQuantity>()) {
      any = true;
      check_tq(value.as<TemporalQuantity>(), owner + "/" + name + "/$tq", window, sink);
    }
  }
}

}  // namespace

ValidationReport check_temporal(const Network& net, Level level) {
  Sink sink(level);
  const auto& window = net.info.time;
  if (window) {
    if (window->t_min > window->t_max) {
      sink.error("time-window-invalid", "/info/time",
                 "Tmin " + std::to_string(window->t_min) + " exceeds Tmax " + std::to_string(window->t_max));
    }
    for (const auto& [t, label] : window->t_labs) {
      if (t < window->t_min || t > window->t_max) {
        sink.error("tlabs-out-of-window", "/info/time/Tlabs/" + std::to_string(t), "label time outside [Tmin, Tmax]");
      }
    }
  }

  bool any = false;
  std::string first_tq;
  const auto visit = [&](const std::optional<TemporalQuantity>& tq, const PropertyMap& props, const std::string& where) {
    if (tq) {
      if (!any) first_tq = where + "/tq";
      any = true;
      check_tq(*tq, where + "/tq", window, sink);
    } else if (window && level == Level::strict) {
      sink.error("tq-missing", where, "temporal network element without tq");
    }
    bool in_props = false;
    check_tq_props(props, where, window, sink, in_props);
    if (in_props && !any) first_tq = where;
    any |= in_props;
  };
  for (std::size_t i = 0; i < net.nodes.size(); ++i) visit(net.nodes[i].tq, net.nodes[i].props, at("/nodes", i));
  for (std::size_t i = 0; i < net.links.size(); ++i) visit(net.links[i].tq, net.links[i].props, at("/links", i));
  if (any && !window) {
    sink.add(Severity::warning, "tq-without-window", first_tq, "temporal quantities present but info.time is absent");
  }
  return sink.take();
}

ValidationReport validate_network(const Network& network, Level level) {
  auto report = check_network(network, level);
  auto temporal = check_temporal(network, level);
  report.findings.insert(report.findings.end(), temporal.findings.begin(), temporal.findings.end());
  sort_findings(report.findings);
  return report;
}

namespace {

struct LocationKey {
  int section = 0;
  long long index = -1;
  bool operator<(const LocationKey& o) const { return std::tie(section, index) < std::tie(o.section, o.index); }
};

long long leading_number(std::string_view s) {
  long long v = -1;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

LocationKey location_key(std::string_view loc) {
  if (loc.starts_with("line ")) return {0, leading_number(loc.substr(5))};
  if (loc.starts_with("row ")) return {0, leading_number(loc.substr(4))};
  if (loc.empty() || loc[0] != '/') return {-1, -1};
  loc.remove_prefix(1);
  const auto slash = loc.find('/');
  const auto head = loc.substr(0, slash);
  static constexpr std::array<std::string_view, 5> order{"netsJSON", "info", "nodes", "links", "data"};
  auto it = std::find(order.begin(), order.end(), head);
  const int section = it == order.end() ? 5 : static_cast<int>(it - order.begin());
  long long index = -1;
  if (slash != std::string_view::npos && (section == 2 || section == 3)) index = leading_number(loc.substr(slash + 1));
  return {section, index};
}

}  // namespace

void sort_findings(std::vector<Finding>& findings) {
  std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    return location_key(a.location) < location_key(b.location);
  });
}

std::string render_text(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& f : report.findings) {
    out << to_string(f.severity) << ' ' << f.rule << ' ' << (f.location.empty() ? "-" : f.location) << ": " << f.message
        << '\n';
  }
  return out.str();
}

std::string render_json_lines(const ValidationReport& report) {
  std::string out;
  for (const auto& f : report.findings) {
    nlohmann::ordered_json j;
    j["severity"] = to_string(f.severity);
    j["rule"] = f.rule;
    j["location"] = f.location;
    j["message"] = f.message;
    out += j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

}  // namespace netconv
