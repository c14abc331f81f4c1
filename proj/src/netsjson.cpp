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

#include "netconv/netsjson.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <set>

#include <json.hpp>

#include "netconv/error.hpp"

namespace netconv {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kIntervalTag = "$interval";
constexpr const char* kTqTag = "$tq";

std::string escape_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string ptr(const std::string& base, std::string_view key) { return base + "/" + escape_token(key); }
std::string ptr(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

// Walks a parsed document into a Network, recording findings as it goes.
// With `stop` set the first error is thrown; otherwise the walk continues
// past bad elements so every structural problem is reported.
// Relation levels a reader reconstructs when the document has no relation
// coding: the sorted names of a labeled network, or the decimal codes
// org..max of a factorized one.
std::vector<std::string> derived_relation_levels(const Network& net) {
  std::vector<std::string> levels;
  if (is_factorized(net)) {
    std::int64_t max_code = net.info.org - 1;
    for (const auto& link : net.links) {
      if (link.rel) {
        if (const auto* c = std::get_if<std::int64_t>(&*link.rel)) max_code = std::max(max_code, *c);
      }
    }
    for (std::int64_t c = net.info.org; c <= max_code; ++c) levels.push_back(std::to_string(c));
    return levels;
  }
  std::set<std::string> names;
  for (const auto& link : net.links) {
    if (link.rel) {
      if (const auto* s = std::get_if<std::string>(&*link.rel)) names.insert(*s);
    }
  }
  names.erase("");
  return {names.begin(), names.end()};
}

// Node coding recovered from labels when the ids of a factorized network are
// exactly org..org+n-1 and the labels are distinct and non-empty.
std::vector<std::string> derived_node_levels(const Network& net) {
  if (!is_factorized(net) || net.nodes.empty()) return {};
  std::vector<std::string> levels(net.nodes.size());
  std::set<std::string> distinct;
  for (const auto& node : net.nodes) {
    const auto code = std::get<std::int64_t>(node.id) - net.info.org;
    if (code < 0 || code >= static_cast<std::int64_t>(levels.size()) || node.lab.empty() ||
        !levels[static_cast<std::size_t>(code)].empty() || !distinct.insert(node.lab).second) {
      return {};
    }
    levels[static_cast<std::size_t>(code)] = node.lab;
  }
  return levels;
}

class DocumentReader {
 public:
  DocumentReader(Level level, bool stop) : level_(level), stop_(stop) {}

  std::optional<Network> read(const json& doc);

  std::vector<Finding> findings;
  bool structural_error = false;

 private:
  void report(Severity sev, std::string rule, std::string location, std::string message) {
    Finding f{sev, std::move(rule), std::move(location), std::move(message)};
    if (sev == Severity::error) {
      structural_error = true;
      if (stop_) throw Error(f);
    }
    findings.push_back(std::move(f));
  }
  void error(std::string rule, std::string location, std::string message) {
    report(Severity::error, std::move(rule), std::move(location), std::move(message));
  }
  void wrong_type(const std::string& location, const char* expected) {
    error("wrong-type", location, std::string("expected ") + expected);
  }

  std::optional<std::int64_t> get_int(const json& obj, const char* key, const std::string& base);
  std::optional<double> get_number(const json& obj, const char* key, const std::string& base);
  std::optional<bool> get_bool(const json& obj, const char* key, const std::string& base);
  std::optional<std::string> get_string(const json& obj, const char* key, const std::string& base);
  std::optional<std::vector<std::string>> get_levels(const json& value, const std::string& where);

  PropertyValue to_value(const json& j, const std::string& where);
  std::optional<TemporalQuantity> to_tq(const json& j, const std::string& where);
  std::optional<Key> to_key(const json& j, const std::string& where, bool is_node_id);

  void read_info(const json& info, Network& net);
  void read_node(const json& obj, std::size_t index, Network& net);
  void read_link(const json& obj, std::size_t index, Network& net);
  void finish(Network& net);

  Level level_;
  bool stop_;
  std::optional<bool> codes_;  // true once ids are known to be integer codes
  std::optional<std::int64_t> declared_nodes_, declared_arcs_, declared_edges_, declared_mode_;
  std::optional<bool> declared_simple_, declared_directed_, declared_multirel_;
  std::optional<std::vector<std::string>> relation_levels_, node_levels_;
};

std::optional<std::int64_t> DocumentReader::get_int(const json& obj, const char* key, const std::string& base) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (it->is_number_integer() && !(it->is_number_unsigned() &&
                                   it->get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))) {
    return it->get<std::int64_t>();
  }
  wrong_type(ptr(base, key), "an integer");
  return std::nullopt;
}

std::optional<double> DocumentReader::get_number(const json& obj, const char* key, const std::string& base) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (it->is_number()) return it->get<double>();
  wrong_type(ptr(base, key), "a number");
  return std::nullopt;
}

std::optional<bool> DocumentReader::get_bool(const json& obj, const char* key, const std::string& base) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (it->is_boolean()) return it->get<bool>();
  wrong_type(ptr(base, key), "a boolean");
  return std::nullopt;
}

std::optional<std::string> DocumentReader::get_string(const json& obj, const char* key, const std::string& base) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  wrong_type(ptr(base, key), "a string");
  return std::nullopt;
}

std::optional<std::vector<std::string>> DocumentReader::get_levels(const json& value, const std::string& where) {
  if (!value.is_array()) {
    wrong_type(where, "an array of strings");
    return std::nullopt;
  }
  std::vector<std::string> levels;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      wrong_type(ptr(where, i), "a string");
      return std::nullopt;
    }
    levels.push_back(value[i].get<std::string>());
  }
  return levels;
}

PropertyValue DocumentReader::to_value(const json& j, const std::string& where) {
  switch (j.type()) {
    case json::value_t::null:
      return {};
    case json::value_t::boolean:
      return j.get<bool>();
    case json::value_t::number_integer:
      return j.get<std::int64_t>();
    case json::value_t::number_unsigned: {
      const auto u = j.get<std::uint64_t>();
      if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(u);
      return static_cast<double>(u);
    }
    case json::value_t::number_float:
      return j.get<double>();
    case json::value_t::string:
      return j.get<std::string>();
    case json::value_t::array: {
      PropertyList list;
      list.reserve(j.size());
      for (std::size_t i = 0; i < j.size(); ++i) list.push_back(to_value(j[i], ptr(where, i)));
      return list;
    }
    case json::value_t::object: {
      if (j.size() == 1 && j.contains(kIntervalTag)) {
        const auto& iv = j[kIntervalTag];
        if (iv.is_array() && iv.size() == 2 && iv[0].is_number() && iv[1].is_number()) {
          return Interval{iv[0].get<double>(), iv[1].get<double>()};
        }
        wrong_type(ptr(where, kIntervalTag), "[lo, hi]");
        return {};
      }
      if (j.size() == 1 && j.contains(kTqTag)) {
        if (auto tq = to_tq(j[kTqTag], ptr(where, kTqTag))) return *tq;
        return {};
      }
      PropertyValue::Record record;
      for (const auto& [key, value] : j.items()) record.fields[key] = to_value(value, ptr(where, key));
      return record;
    }
    default:
      wrong_type(where, "a JSON value");
      return {};
  }
}

std::optional<TemporalQuantity> DocumentReader::to_tq(const json& j, const std::string& where) {
  if (!j.is_array()) {
    error("tq-malformed", where, "temporal quantity must be an array of [start, finish, value] triples");
    return std::nullopt;
  }
  TemporalQuantity tq;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& t = j[k];
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      error("tq-malformed", ptr(where, k), "expected [start, finish, value] with integer start and finish");
      return std::nullopt;
    }
    tq.segments.push_back({t[0].get<std::int64_t>(), t[1].get<std::int64_t>(), to_value(t[2], ptr(ptr(where, k), 2))});
  }
  return tq;
}

std::optional<Key> DocumentReader::to_key(const json& j, const std::string& where, bool is_node_id) {
  std::optional<Key> key;
  if (j.is_number_integer()) {
    key = j.get<std::int64_t>();
  } else if (j.is_string()) {
    key = j.get<std::string>();
  } else {
    wrong_type(where, "an integer or a string");
    return std::nullopt;
  }
  const bool code = std::holds_alternative<std::int64_t>(*key);
  if (!codes_) {
    if (is_node_id) codes_ = code;
  } else if (*codes_ != code) {
    error("mixed-id-kinds", where, code ? "integer code in a document with text ids" : "text id in a document with integer codes");
  }
  return key;
}

void DocumentReader::read_info(const json& info, Network& net) {
  const std::string base = "/info";
  auto& out = net.info;
  if (auto v = get_int(info, "org", base)) out.org = static_cast<int>(std::clamp<std::int64_t>(*v, -1000, 1000));
  declared_nodes_ = get_int(info, "nNodes", base);
  declared_arcs_ = get_int(info, "nArcs", base);
  declared_edges_ = get_int(info, "nEdges", base);
  declared_simple_ = get_bool(info, "simple", base);
  declared_directed_ = get_bool(info, "directed", base);
  declared_multirel_ = get_bool(info, "multirel", base);
  declared_mode_ = get_int(info, "mode", base);
  if (auto v = get_string(info, "network", base)) out.network = *v;
  if (auto v = get_string(info, "title", base)) out.title = *v;
  out.created = get_string(info, "created", base);
  out.modified = get_string(info, "modified", base);

  if (auto it = info.find("time"); it != info.end()) {
    const auto where = ptr(base, "time");
    if (!it->is_object()) {
      wrong_type(where, "an object");
    } else {
      TimeWindow window;
      auto t_min = get_int(*it, "Tmin", where);
      auto t_max = get_int(*it, "Tmax", where);
      if (!it->contains("Tmin") || !it->contains("Tmax")) error("missing-member", where, "time needs Tmin and Tmax");
      window.t_min = t_min.value_or(0);
      window.t_max = t_max.value_or(0);
      if (auto labs = it->find("Tlabs"); labs != it->end()) {
        const auto labs_at = ptr(where, "Tlabs");
        if (!labs->is_object()) {
          wrong_type(labs_at, "an object");
        } else {
          for (const auto& [key, label] : labs->items()) {
            std::int64_t t = 0;
            auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), t);
            if (ec != std::errc{} || p != key.data() + key.size() || key.empty()) {
              error("tlabs-key", ptr(labs_at, key), "Tlabs key '" + key + "' is not an integer");
              continue;
            }
            if (!label.is_string()) {
              wrong_type(ptr(labs_at, key), "a string");
              continue;
            }
            window.t_labs[t] = label.get<std::string>();
          }
        }
      }
      out.time = window;
    }
  }

  if (auto it = info.find("meta"); it != info.end()) {
    const auto where = ptr(base, "meta");
    if (!it->is_array()) {
      wrong_type(where, "an array of events");
    } else {
      for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& ev = (*it)[i];
        const auto ev_at = ptr(where, i);
        if (!ev.is_object()) {
          wrong_type(ev_at, "an event object");
          continue;
        }
        EventRecord rec;
        rec.date = get_string(ev, "date", ev_at).value_or("");
        rec.title = get_string(ev, "title", ev_at).value_or("");
        rec.author = get_string(ev, "author", ev_at);
        rec.desc = get_string(ev, "desc", ev_at);
        rec.url = get_string(ev, "url", ev_at);
        rec.cite = get_string(ev, "cite", ev_at);
        rec.copy = get_string(ev, "copy", ev_at);
        out.meta.push_back(std::move(rec));
      }
    }
  }

  if (auto it = info.find("codings"); it != info.end()) {
    const auto where = ptr(base, "codings");
    if (!it->is_object()) {
      wrong_type(where, "an object");
    } else {
      if (auto r = it->find("relation"); r != it->end()) relation_levels_ = get_levels(*r, ptr(where, "relation"));
      if (auto n = it->find("node"); n != it->end()) node_levels_ = get_levels(*n, ptr(where, "node"));
      if (auto p = it->find("properties"); p != it->end()) {
        const auto props_at = ptr(where, "properties");
        if (!p->is_object()) {
          wrong_type(props_at, "an object");
        } else {
          for (const auto& [name, levels] : p->items()) {
            if (auto l = get_levels(levels, ptr(props_at, name))) net.property_codings[name] = CodingTable{name, *l, 1};
          }
        }
      }
      if (auto v = get_int(*it, "labeledOrg", where)) net.labeled_org = static_cast<int>(std::clamp<std::int64_t>(*v, -1000, 1000));
    }
  }

  static const std::set<std::string> known{"org", "nNodes", "nArcs", "nEdges", "simple", "directed", "multirel", "mode",
                                           "network", "title", "time", "meta", "created", "modified", "codings"};
  for (const auto& [key, value] : info.items()) {
    if (!known.contains(key)) out.extra[key] = to_value(value, ptr(base, key));
  }
}

void DocumentReader::read_node(const json& obj, std::size_t index, Network& net) {
  const auto where = ptr(std::string("/nodes"), index);
  if (!obj.is_object()) {
    wrong_type(where, "a node object");
    return;
  }
  NodeRecord node;
  auto id = obj.find("id");
  if (id == obj.end()) {
    error("missing-member", where, "node has no id");
    return;
  }
  auto key = to_key(*id, ptr(where, "id"), true);
  if (!key) return;
  node.id = std::move(*key);
  node.lab = get_string(obj, "lab", where).value_or("");
  node.slab = get_string(obj, "slab", where);
  node.x = get_number(obj, "x", where);
  node.y = get_number(obj, "y", where);
  node.mode = get_string(obj, "mode", where);
  if (auto tq = obj.find("tq"); tq != obj.end()) node.tq = to_tq(*tq, ptr(where, "tq"));

  static const std::set<std::string> known{"id", "lab", "slab", "x", "y", "mode", "tq"};
  for (const auto& [k, value] : obj.items()) {
    if (!known.contains(k)) node.props[k] = to_value(value, ptr(where, k));
  }
  net.nodes.push_back(std::move(node));
}

void DocumentReader::read_link(const json& obj, std::size_t index, Network& net) {
  const auto where = ptr(std::string("/links"), index);
  if (!obj.is_object()) {
    wrong_type(where, "a link object");
    return;
  }
  LinkRecord link;
  if (auto type = get_string(obj, "type", where)) {
    if (*type == "arc") {
      link.kind = LinkKind::arc;
    } else if (*type == "edge") {
      link.kind = LinkKind::edge;
    } else {
      error("invalid-link-type", ptr(where, "type"), "link type must be \"arc\" or \"edge\", got \"" + *type + "\"");
    }
  }
  for (const char* member : {"n1", "n2"}) {
    auto it = obj.find(member);
    if (it == obj.end()) {
      error("missing-member", where, std::string("link has no ") + member);
      return;
    }
    if (!codes_) codes_ = it->is_number_integer();
    auto key = to_key(*it, ptr(where, member), false);
    if (!key) return;
    (member[1] == '1' ? link.n1 : link.n2) = std::move(*key);
  }
  if (auto rel = obj.find("rel"); rel != obj.end() && !rel->is_null()) link.rel = to_key(*rel, ptr(where, "rel"), false);
  // A NaN weight serializes as null.
  if (auto w = obj.find("weight"); w != obj.end() && w->is_null()) {
    link.weight = std::numeric_limits<double>::quiet_NaN();
  } else if (auto num = get_number(obj, "weight", where)) {
    link.weight = *num;
  }
  link.label = get_string(obj, "label", where);
  if (auto tq = obj.find("tq"); tq != obj.end()) link.tq = to_tq(*tq, ptr(where, "tq"));

  static const std::set<std::string> known{"type", "n1", "n2", "rel", "weight", "label", "tq"};
  for (const auto& [k, value] : obj.items()) {
    if (!known.contains(k)) link.props[k] = to_value(value, ptr(where, k));
  }
  net.links.push_back(std::move(link));
}

void DocumentReader::finish(Network& net) {
  const int org = net.info.org;
  net.relations.levels = relation_levels_ ? *relation_levels_ : derived_relation_levels(net);
  net.node_coding.levels = node_levels_ ? *node_levels_ : derived_node_levels(net);
  set_org(net, org);

  const auto counter = [&](const char* member, const std::optional<std::int64_t>& declared, std::int64_t actual) {
    if (declared && *declared != actual) {
      // Graded, not structural: the network itself is readable.
      findings.push_back({level_ == Level::strict ? Severity::error : Severity::warning, "counter-mismatch",
                          ptr(std::string("/info"), member),
                          std::string(member) + " is " + std::to_string(*declared) + " but the document lists " +
                              std::to_string(actual)});
    }
  };
  derive_flags(net);
  counter("nNodes", declared_nodes_, net.info.n_nodes);
  counter("nArcs", declared_arcs_, net.info.n_arcs);
  counter("nEdges", declared_edges_, net.info.n_edges);
  if (declared_simple_) net.info.simple = *declared_simple_;
  if (declared_directed_) net.info.directed = *declared_directed_;
  if (declared_multirel_) net.info.multirel = *declared_multirel_;
  if (declared_mode_) net.info.mode = *declared_mode_;
}

std::optional<Network> DocumentReader::read(const json& doc) {
  if (!doc.is_object()) {
    wrong_type("", "a JSON object at the top level");
    return std::nullopt;
  }
  static const std::set<std::string> top{"netsJSON", "info", "nodes", "links", "data"};
  for (const auto& [key, value] : doc.items()) {
    if (!top.contains(key)) report(Severity::warning, "unknown-member", ptr(std::string(), key), "member '" + key + "' is not part of basic NetsJSON");
  }

  auto tag = doc.find("netsJSON");
  if (tag == doc.end()) {
    error("missing-member", "", "document lacks the netsJSON member");
  } else if (!tag->is_string()) {
    wrong_type("/netsJSON", "a string");
  } else if (tag->get<std::string>() != "basic") {
    error("unsupported-version", "/netsJSON", "only \"basic\" NetsJSON is supported, got \"" + tag->get<std::string>() + "\"");
  }
  for (const auto& [member, array] : {std::pair{"info", false}, std::pair{"nodes", true}, std::pair{"links", true}}) {
    auto it = doc.find(member);
    if (it == doc.end()) {
      error("missing-member", "", std::string("document lacks the ") + member + " member");
    } else if (array ? !it->is_array() : !it->is_object()) {
      wrong_type(std::string("/") + member, array ? "an array" : "an object");
    }
  }
  if (structural_error) return std::nullopt;

  Network net;
  read_info(doc["info"], net);
  const auto& nodes = doc["nodes"];
  for (std::size_t i = 0; i < nodes.size(); ++i) read_node(nodes[i], i, net);
  const auto& links = doc["links"];
  for (std::size_t i = 0; i < links.size(); ++i) read_link(links[i], i, net);
  if (auto data = doc.find("data"); data != doc.end()) net.info.data = data->dump();
  finish(net);
  return net;
}

json value_to_json(const PropertyValue& value);

json tq_to_json(const TemporalQuantity& tq) {
  json arr = json::array();
  for (const auto& s : tq.segments) arr.push_back(json::array({s.start, s.finish, value_to_json(s.value)}));
  return arr;
}

json value_to_json(const PropertyValue& value) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, PropertyList>) {
          json arr = json::array();
          for (const auto& item : v) arr.push_back(value_to_json(item));
          return arr;
        } else if constexpr (std::is_same_v<T, Interval>) {
          return json{{kIntervalTag, json::array({v.lo, v.hi})}};
        } else if constexpr (std::is_same_v<T, TemporalQuantity>) {
          return json{{kTqTag, tq_to_json(v)}};
        } else if constexpr (std::is_same_v<T, PropertyValue::Record>) {
          json obj = json::object();
          for (const auto& [key, item] : v.fields) obj[key] = value_to_json(item);
          return obj;
        } else {
          return v;
        }
      },
      value.value);
}

json key_to_json(const Key& key) {
  if (const auto* code = std::get_if<std::int64_t>(&key)) return *code;
  return std::get<std::string>(key);
}

void put_props(json& obj, const PropertyMap& props) {
  for (const auto& [key, value] : props) {
    if (!obj.contains(key)) obj[key] = value_to_json(value);
  }
}

// The relation coding is written only when a reader could not rebuild it
// from the links (factorized documents, unused or unsorted relations).
}  // namespace

Network parse_netsjson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error("json-syntax", "byte " + std::to_string(e.byte), e.what());
  }
  DocumentReader reader(Level::lenient, true);
  return *reader.read(doc);
}

Network parse_netsjson(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_netsjson(text);
}

std::string write_netsjson(const Network& input, const NetsJsonWriteOptions& opts) {
  Network net = input;
  reconcile_counters(net);
  const auto& info = net.info;

  json doc = json::object();
  doc["netsJSON"] = "basic";

  json ji = json::object();
  ji["org"] = info.org;
  ji["nNodes"] = info.n_nodes;
  ji["nArcs"] = info.n_arcs;
  ji["nEdges"] = info.n_edges;
  ji["simple"] = info.simple;
  ji["directed"] = info.directed;
  ji["multirel"] = info.multirel;
  ji["mode"] = info.mode;
  ji["network"] = info.network;
  ji["title"] = info.title;
  if (info.time) {
    json labs = json::object();
    for (const auto& [t, label] : info.time->t_labs) labs[std::to_string(t)] = label;
    ji["time"] = {{"Tmin", info.time->t_min}, {"Tmax", info.time->t_max}, {"Tlabs", labs}};
  }
  if (!info.meta.empty()) {
    json events = json::array();
    for (const auto& ev : info.meta) {
      json e = {{"date", ev.date}, {"title", ev.title}};
      if (ev.author) e["author"] = *ev.author;
      if (ev.desc) e["desc"] = *ev.desc;
      if (ev.url) e["url"] = *ev.url;
      if (ev.cite) e["cite"] = *ev.cite;
      if (ev.copy) e["copy"] = *ev.copy;
      events.push_back(std::move(e));
    }
    ji["meta"] = std::move(events);
  }
  if (info.created) ji["created"] = *info.created;
  if (info.modified) ji["modified"] = *info.modified;

  json codings = json::object();
  if (net.relations.levels != derived_relation_levels(net)) codings["relation"] = net.relations.levels;
  if (net.node_coding.levels != derived_node_levels(net)) codings["node"] = net.node_coding.levels;
  if (!net.property_codings.empty()) {
    json props = json::object();
    for (const auto& [name, table] : net.property_codings) props[name] = table.levels;
    codings["properties"] = std::move(props);
  }
  if (net.labeled_org) codings["labeledOrg"] = *net.labeled_org;
  if (!codings.empty()) ji["codings"] = std::move(codings);
  put_props(ji, info.extra);
  doc["info"] = std::move(ji);

  json nodes = json::array();
  for (const auto& node : net.nodes) {
    json n = json::object();
    n["id"] = key_to_json(node.id);
    n["lab"] = node.lab;
    if (node.slab) n["slab"] = *node.slab;
    if (node.x) n["x"] = *node.x;
    if (node.y) n["y"] = *node.y;
    if (node.mode) n["mode"] = *node.mode;
    if (node.tq) n["tq"] = tq_to_json(*node.tq);
    put_props(n, node.props);
    nodes.push_back(std::move(n));
  }
  doc["nodes"] = std::move(nodes);

  json links = json::array();
  for (const auto& link : net.links) {
    json l = json::object();
    if (!opts.omit_defaults || link.kind != LinkKind::arc) l["type"] = link.kind == LinkKind::arc ? "arc" : "edge";
    l["n1"] = key_to_json(link.n1);
    l["n2"] = key_to_json(link.n2);
    if (link.rel) l["rel"] = key_to_json(*link.rel);
    if (!opts.omit_defaults || link.weight != 1.0) l["weight"] = link.weight;
    if (link.label) l["label"] = *link.label;
    if (link.tq) l["tq"] = tq_to_json(*link.tq);
    put_props(l, link.props);
    links.push_back(std::move(l));
  }
  doc["links"] = std::move(links);
  if (info.data) doc["data"] = json::parse(*info.data);

  try {
    return doc.dump(opts.pretty ? 2 : -1) + "\n";
  } catch (const json::type_error& e) {
    throw Error("text-encoding", "", e.what());
  }
}

std::string write_netsjson(const Network& network, bool pretty) {
  NetsJsonWriteOptions opts;
  opts.pretty = pretty;
  return write_netsjson(network, opts);
}

ValidationReport validate_netsjson_document(std::string_view text, bool strict) {
  const Level level = strict ? Level::strict : Level::lenient;
  ValidationReport report;
  report.level = level;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    report.findings.push_back({Severity::error, "json-syntax", "byte " + std::to_string(e.byte), e.what()});
    return report;
  }
  DocumentReader reader(level, false);
  auto net = reader.read(doc);
  report.findings = std::move(reader.findings);
  if (net && !reader.structural_error) {
    auto model = validate_network(*net, level);
    report.findings.insert(report.findings.end(), model.findings.begin(), model.findings.end());
  }
  sort_findings(report.findings);
  return report;
}

ValidationReport validate_netsjson_document(std::istream& in, bool strict) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return validate_netsjson_document(text, strict);
}

}  // namespace netconv
