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

#include "netconv/pajek.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "netconv/error.hpp"

namespace netconv {

namespace {

std::string quote(const std::string& text, const char* what) {
  for (unsigned char c : text) {
    if (c < 0x20 || c == 0x7F) {
      throw Error("pajek-encoding", "", std::string(what) + " '" + text + "' contains a control character");
    }
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Token {
  std::string text;
  bool quoted = false;
};

// Whitespace-separated tokens; "..." groups with doubled quotes inside.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    Token tok;
    if (line[i] == '"') {
      tok.quoted = true;
      ++i;
      for (;;) {
        if (i >= line.size()) throw Error("pajek-syntax", "line " + std::to_string(line_no), "unterminated quote");
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            tok.text += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        tok.text += line[i++];
      }
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) tok.text += line[i++];
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

template <class T>
std::optional<T> parse_num(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::pair<std::size_t, std::string>> read_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    lines.emplace_back(no, std::move(line));
  }
  return lines;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '%';
}

}  // namespace

std::string write_pajek_net(const Network& input, int base, const PajekWriteOptions& opts) {
  if (base != 1) throw Error("pajek-base", "", "Pajek vertex numbering starts at 1");
  Network net = canonical_order(input);
  net = is_factorized(net) ? rebase_network(std::move(net), 1) : factorize_network(std::move(net), 1);

  std::map<std::int64_t, std::size_t> position;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    position.emplace(std::get<std::int64_t>(net.nodes[i].id), i + 1);
  }
  const auto vertex = [&](const Key& key, std::size_t link) {
    auto it = position.find(std::get<std::int64_t>(key));
    if (it == position.end()) {
      throw Error("dangling-endpoint", "/links/" + std::to_string(link), "unknown node " + key_text(key));
    }
    return it->second;
  };

  std::ostringstream out;
  if (!net.info.title.empty()) out << "*network " << net.info.title << '\n';
  out << "*vertices " << net.nodes.size() << '\n';
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    const auto& node = net.nodes[i];
    std::string label = node.lab;
    if (label.empty()) {
      const auto code = std::get<std::int64_t>(node.id);
      label = net.node_coding.contains_code(code) ? net.node_coding.level_of(code) : std::to_string(i + 1);
    }
    out << (i + 1) << ' ' << quote(label, "vertex label");
    if (opts.coordinates && node.x && node.y) out << ' ' << format_real(*node.x) << ' ' << format_real(*node.y);
    out << '\n';
  }

  const bool has_arcs = net.links.empty() || std::any_of(net.links.begin(), net.links.end(), [](const auto& l) {
                          return l.kind == LinkKind::arc;
                        });
  const char* decl = has_arcs ? "*arcs" : "*edges";
  for (std::size_t r = 0; r < net.relations.size(); ++r) {
    out << decl << " :" << (r + 1) << ' ' << quote(net.relations.levels[r], "relation name") << '\n';
  }

  if (net.links.empty()) out << "*arcs\n";
  std::optional<LinkKind> section;
  for (std::size_t i = 0; i < net.links.size(); ++i) {
    const auto& link = net.links[i];
    if (section != link.kind) {
      out << (link.kind == LinkKind::arc ? "*arcs" : "*edges") << '\n';
      section = link.kind;
    }
    std::optional<std::string> label = link.label;
    if (link.rel) {
      const auto code = std::get<std::int64_t>(*link.rel);
      out << code << ": ";
      if (!label && net.relations.contains_code(code)) label = net.relations.level_of(code);
    }
    out << vertex(link.n1, i) << ' ' << vertex(link.n2, i) << ' ' << format_real(link.weight);
    if (label) out << " l " << quote(*label, "link label");
    out << '\n';
  }
  return out.str();
}

Network read_pajek_net(std::istream& in) {
  enum class Section { none, vertices, arcs, edges };
  struct PendingLink {
    LinkRecord link;
    std::optional<std::int64_t> rel;
    std::optional<std::string> text_label;
  };

  Network net;
  Section section = Section::none;
  std::optional<std::int64_t> section_rel;
  std::int64_t n = -1;
  std::vector<std::string> labels;
  std::vector<std::optional<std::pair<double, double>>> coords;
  std::map<std::int64_t, std::string> declared;
  std::vector<PendingLink> pending;

  for (const auto& [no, line] : read_lines(in)) {
    if (skippable(line)) continue;
    const auto where = "line " + std::to_string(no);
    const auto first = line.find_first_not_of(" \t");

    if (line[first] == '*') {
      const auto word_end = line.find_first_of(" \t", first);
      if (lower(line.substr(first, word_end - first)) == "*network") {
        const auto title_at = word_end == std::string::npos ? word_end : line.find_first_not_of(" \t", word_end);
        net.info.title = title_at == std::string::npos ? "" : line.substr(title_at);
        continue;
      }
      const auto tokens = tokenize(std::string_view(line).substr(first), no);
      std::string keyword = lower(tokens[0].text);
      std::vector<Token> rest(tokens.begin() + 1, tokens.end());
      // `*arcs:3` written without the space
      if (auto colon = keyword.find(':'); colon != std::string::npos) {
        rest.insert(rest.begin(), Token{keyword.substr(colon), false});
        keyword.erase(colon);
      }

      if (keyword == "*vertices") {
        if (n >= 0) throw Error("pajek-syntax", where, "second *vertices section");
        auto count = rest.empty() ? std::nullopt : parse_num<std::int64_t>(rest[0].text);
        if (!count || *count < 0) throw Error("pajek-syntax", where, "*vertices needs a non-negative count");
        n = *count;
        labels.resize(static_cast<std::size_t>(n));
        coords.resize(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
        section = Section::vertices;
        continue;
      }
      if (keyword == "*arcs" || keyword == "*edges") {
        if (n < 0) throw Error("pajek-syntax", where, "link section before *vertices");
        section = keyword == "*arcs" ? Section::arcs : Section::edges;
        section_rel.reset();
        if (!rest.empty() && rest[0].text.starts_with(':')) {
          auto code = parse_num<std::int64_t>(std::string_view(rest[0].text).substr(1));
          if (!code || *code < 1) throw Error("pajek-syntax", where, "bad relation number '" + rest[0].text + "'");
          section_rel = code;
          if (rest.size() > 1) {
            const auto& name = rest[1].text;
            auto [it, inserted] = declared.emplace(*code, name);
            if (!inserted && it->second != name) {
              throw Error("relation-conflict", where,
                          "relation " + std::to_string(*code) + " declared as '" + it->second + "' and '" + name + "'");
            }
          }
        }
        continue;
      }
      throw Error("pajek-section", where, "unsupported section '" + tokens[0].text + "'");
    }

    const auto tokens = tokenize(line, no);
    if (section == Section::none) throw Error("pajek-syntax", where, "data line outside any section");

    if (section == Section::vertices) {
      auto index = parse_num<std::int64_t>(tokens[0].text);
      if (!index) throw Error("pajek-syntax", where, "vertex number expected");
      if (*index < 1 || *index > n) {
        throw Error("vertex-range", where, "vertex " + tokens[0].text + " outside [1, " + std::to_string(n) + "]");
      }
      const auto slot = static_cast<std::size_t>(*index - 1);
      if (tokens.size() > 1) labels[slot] = tokens[1].text;
      if (tokens.size() > 3) {
        auto x = parse_num<double>(tokens[2].text);
        auto y = parse_num<double>(tokens[3].text);
        if (x && y) coords[slot] = std::pair{*x, *y};
      }
      continue;
    }

    PendingLink item;
    item.link.kind = section == Section::arcs ? LinkKind::arc : LinkKind::edge;
    item.rel = section_rel;
    std::size_t t = 0;
    if (tokens[0].text.ends_with(':') && !tokens[0].quoted) {
      auto code = parse_num<std::int64_t>(std::string_view(tokens[0].text).substr(0, tokens[0].text.size() - 1));
      if (!code || *code < 1) throw Error("pajek-syntax", where, "bad relation prefix '" + tokens[0].text + "'");
      item.rel = code;
      t = 1;
    }
    if (tokens.size() < t + 2) throw Error("pajek-syntax", where, "link line needs two vertex numbers");
    for (int end = 0; end < 2; ++end) {
      const auto& tok = tokens[t + static_cast<std::size_t>(end)];
      auto v = parse_num<std::int64_t>(tok.text);
      if (!v) throw Error("pajek-syntax", where, "vertex number expected, got '" + tok.text + "'");
      if (*v < 1 || *v > n) {
        throw Error("vertex-range", where, "vertex " + tok.text + " outside [1, " + std::to_string(n) + "]");
      }
      (end == 0 ? item.link.n1 : item.link.n2) = *v;
    }
    t += 2;
    if (t < tokens.size() && !tokens[t].quoted) {
      if (auto w = parse_num<double>(tokens[t].text)) {
        item.link.weight = *w;
        ++t;
      }
    }
    for (; t < tokens.size(); ++t) {
      if (!tokens[t].quoted && tokens[t].text == "l" && t + 1 < tokens.size()) {
        item.text_label = tokens[++t].text;
      }
    }
    pending.push_back(std::move(item));
  }

  if (n < 0) throw Error("pajek-syntax", "line 1", "missing *vertices section");

  for (std::int64_t i = 0; i < n; ++i) {
    NodeRecord node;
    node.id = i + 1;
    node.lab = labels[static_cast<std::size_t>(i)];
    if (const auto& c = coords[static_cast<std::size_t>(i)]) {
      node.x = c->first;
      node.y = c->second;
    }
    net.nodes.push_back(std::move(node));
  }

  // Relation names: declarations first, then the first `l` label seen for an
  // undeclared code, then the number itself.
  std::int64_t max_code = declared.empty() ? 0 : declared.rbegin()->first;
  const bool relational = !declared.empty() || std::any_of(pending.begin(), pending.end(), [](const auto& p) {
                            return p.rel.has_value();
                          });
  std::map<std::int64_t, std::string> names = declared;
  for (auto& p : pending) {
    if (!p.rel && relational) p.rel = 1;
    if (p.rel) {
      max_code = std::max(max_code, *p.rel);
      if (p.text_label) names.emplace(*p.rel, *p.text_label);
    }
  }
  net.relations = CodingTable{"relation", {}, 1};
  for (std::int64_t r = 1; r <= max_code; ++r) {
    auto it = names.find(r);
    net.relations.levels.push_back(it != names.end() ? it->second : std::to_string(r));
  }
  for (auto& p : pending) {
    if (p.rel) p.link.rel = *p.rel;
    if (p.text_label && (!p.rel || net.relations.levels[static_cast<std::size_t>(*p.rel - 1)] != *p.text_label)) {
      p.link.label = p.text_label;
    }
    net.links.push_back(std::move(p.link));
  }

  std::set<std::string> distinct(labels.begin(), labels.end());
  const bool usable = distinct.size() == labels.size() && !distinct.contains("");
  net.node_coding = CodingTable{"node", usable ? labels : std::vector<std::string>{}, 1};
  derive_flags(net);
  set_org(net, 1);
  return net;
}

Partition partition_from_property(const Network& network, const std::string& property, int base,
                                  std::int64_t missing_code) {
  std::vector<OptionalText> values;
  values.reserve(network.nodes.size());
  bool seen = false;
  for (std::size_t i = 0; i < network.nodes.size(); ++i) {
    const auto& node = network.nodes[i];
    if (property == "mode") {
      values.push_back(node.mode);
      seen |= node.mode.has_value();
      continue;
    }
    auto it = node.props.find(property);
    if (it == node.props.end() || it->second.is_absent()) {
      values.emplace_back(std::nullopt);
      continue;
    }
    auto text = scalar_text(it->second);
    if (!text) {
      throw Error("property-type", "/nodes/" + std::to_string(i) + "/" + property,
                  "property '" + property + "' is not categorical");
    }
    values.push_back(std::move(text));
    seen = true;
  }
  if (!seen) throw Error("unknown-property", "", "no node carries property '" + property + "'");

  Partition partition;
  partition.name = property;
  partition.coding = build_coding_table(property, values, LevelPolicy::sorted, base);
  partition.missing_code = missing_code;
  partition.values = encode(values, partition.coding, missing_code);
  return partition;
}

std::string write_pajek_clu(const Partition& partition) {
  if (partition.coding.base != 1) throw Error("pajek-base", "", "Pajek class numbering starts at 1");
  std::ostringstream out;
  if (partition.coding.size() > 0) {
    out << '%';
    for (std::size_t i = 0; i < partition.coding.size(); ++i) {
      const auto& level = partition.coding.levels[i];
      out << ' ' << (partition.coding.base + static_cast<std::int64_t>(i)) << ' ';
      const bool plain = !level.empty() && level.find_first_of(" \t\"") == std::string::npos;
      out << (plain ? level : quote(level, "partition level"));
    }
    out << '\n';
  }
  out << "*vertices " << partition.values.size() << '\n';
  for (auto v : partition.values) out << v << '\n';
  return out.str();
}

Partition read_pajek_clu(std::istream& in, std::string name) {
  Partition partition;
  partition.name = std::move(name);
  partition.coding.name = partition.name;
  std::optional<std::int64_t> declared;
  std::size_t declared_line = 0;
  bool legend = false;

  for (const auto& [no, line] : read_lines(in)) {
    const auto where = "line " + std::to_string(no);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '%') {
      if (legend || declared) continue;
      auto tokens = tokenize(std::string_view(line).substr(first + 1), no);
      if (tokens.empty() || tokens.size() % 2 != 0) continue;
      std::vector<std::string> levels;
      std::optional<std::int64_t> base;
      bool ok = true;
      for (std::size_t i = 0; i < tokens.size() && ok; i += 2) {
        auto code = parse_num<std::int64_t>(tokens[i].text);
        if (!code || tokens[i].quoted) {
          ok = false;
          break;
        }
        if (!base) base = *code;
        ok = *code == *base + static_cast<std::int64_t>(levels.size());
        levels.push_back(tokens[i + 1].text);
      }
      if (!ok) continue;  // ordinary comment
      partition.coding.levels = std::move(levels);
      partition.coding.base = static_cast<int>(*base);
      legend = true;
      continue;
    }
    const auto tokens = tokenize(line, no);
    if (tokens[0].text.starts_with('*')) {
      if (lower(tokens[0].text) != "*vertices" || declared) {
        throw Error("pajek-section", where, "unexpected section '" + tokens[0].text + "' in partition");
      }
      auto count = tokens.size() > 1 ? parse_num<std::int64_t>(tokens[1].text) : std::nullopt;
      if (!count || *count < 0) throw Error("pajek-syntax", where, "*vertices needs a non-negative count");
      declared = count;
      declared_line = no;
      continue;
    }
    if (!declared) throw Error("pajek-syntax", where, "value before *vertices");
    for (const auto& tok : tokens) {
      auto v = parse_num<std::int64_t>(tok.text);
      if (!v) throw Error("pajek-syntax", where, "integer class expected, got '" + tok.text + "'");
      partition.values.push_back(*v);
    }
  }
  if (!declared) throw Error("pajek-syntax", "line 1", "missing *vertices line");
  if (static_cast<std::int64_t>(partition.values.size()) != *declared) {
    throw Error("clu-count", "line " + std::to_string(declared_line),
                "declared " + std::to_string(*declared) + " values, found " + std::to_string(partition.values.size()));
  }
  if (!legend) {
    partition.coding.base = 1;
    std::int64_t max_value = 0;
    for (auto v : partition.values) max_value = std::max(max_value, v);
    for (std::int64_t v = 1; v <= max_value; ++v) partition.coding.levels.push_back(std::to_string(v));
  }
  return partition;
}

}  // namespace netconv
