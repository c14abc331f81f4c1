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

#include "netconv/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>

#include "netconv/error.hpp"
#include "netconv/utf8.hpp"

namespace netconv {

std::optional<std::size_t> Table::column(const std::string& name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

namespace {

struct RawCell {
  std::string text;
  bool quoted = false;
};

struct RawRow {
  std::size_t line = 0;
  std::vector<RawCell> cells;
};

bool is_utf8_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
  name.erase(std::remove(name.begin(), name.end(), '-'), name.end());
  return name == "UTF8";
}

// RFC 4180 records with a configurable delimiter. Blank lines are skipped.
std::vector<RawRow> split_records(const std::string& text, char delim) {
  std::vector<RawRow> rows;
  RawRow row;
  RawCell cell;
  std::size_t line = 1;
  std::size_t i = 0;
  bool row_has_content = false;
  row.line = line;

  const auto finish_cell = [&] {
    row.cells.push_back(std::move(cell));
    cell = RawCell{};
  };
  const auto finish_row = [&] {
    if (row_has_content) {
      finish_cell();
      rows.push_back(std::move(row));
    }
    row = RawRow{};
    cell = RawCell{};
    row_has_content = false;
    row.line = line;
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '"' && cell.text.empty() && !cell.quoted) {
      cell.quoted = true;
      row_has_content = true;
      const std::size_t open_line = line;
      ++i;
      for (;;) {
        if (i >= text.size()) {
          throw Error("csv-quote", "line " + std::to_string(open_line), "unterminated quoted field");
        }
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            cell.text += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        if (text[i] == '\n') ++line;
        cell.text += text[i++];
      }
      continue;
    }
    if (c == delim) {
      row_has_content = true;
      finish_cell();
      ++i;
      continue;
    }
    if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      finish_row();
      ++i;
      continue;
    }
    row_has_content = true;
    cell.text += c;
    ++i;
  }
  finish_row();
  return rows;
}

std::optional<double> parse_number(std::string text, char decimal) {
  if (text.empty()) return std::nullopt;
  if (decimal != '.') {
    if (text.find('.') != std::string::npos) return std::nullopt;
    std::replace(text.begin(), text.end(), decimal, '.');
  }
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

std::string number_text(double value, char decimal) {
  std::string s = format_real(value);
  if (decimal != '.') std::replace(s.begin(), s.end(), '.', decimal);
  return s;
}

void require_columns(const Table& table, std::initializer_list<const char*> names, const char* what) {
  for (const char* name : names) {
    if (!table.column(name)) {
      throw Error("csv-schema", "line 1", std::string(what) + " table lacks required column '" + name + "'");
    }
  }
}

}  // namespace

Table read_table(std::istream& in, const TableOptions& opts) {
  if (opts.delimiter == '"') throw Error("csv-schema", "", "delimiter must differ from the quote character");
  if (!is_utf8_name(opts.encoding)) {
    throw Error("csv-encoding", "", "unsupported encoding '" + opts.encoding + "'; only UTF-8 is read");
  }
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
  if (auto bad = utf8::first_invalid(text)) {
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(*bad), '\n');
    throw Error("csv-encoding", "line " + std::to_string(line), "invalid UTF-8 byte sequence");
  }

  auto records = split_records(text, opts.delimiter);
  Table table;
  std::size_t first = 0;
  if (opts.has_header) {
    if (records.empty()) return table;
    for (auto& cell : records[0].cells) table.header.push_back(std::move(cell.text));
    std::set<std::string> names;
    for (const auto& name : table.header) {
      if (!names.insert(name).second) {
        throw Error("csv-schema", "line " + std::to_string(records[0].line), "duplicate column '" + name + "'");
      }
    }
    first = 1;
  } else if (!records.empty()) {
    for (std::size_t c = 0; c < records[0].cells.size(); ++c) table.header.push_back("V" + std::to_string(c + 1));
  }

  for (std::size_t r = first; r < records.size(); ++r) {
    auto& rec = records[r];
    if (rec.cells.size() != table.header.size()) {
      throw Error("csv-ragged", "line " + std::to_string(rec.line),
                  "expected " + std::to_string(table.header.size()) + " cells, found " +
                      std::to_string(rec.cells.size()));
    }
    std::vector<std::optional<std::string>> row;
    row.reserve(rec.cells.size());
    for (auto& cell : rec.cells) {
      if (!cell.quoted && opts.na_strings.contains(cell.text)) {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(std::move(cell.text));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

NodeTable read_node_table(std::istream& in, const TableOptions& opts) {
  auto table = read_table(in, opts);
  if (!opts.has_header && !table.header.empty()) table.header[0] = "name";
  require_columns(table, {"name"}, "node");
  const auto name = *table.column("name");
  std::set<std::string> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& cell = table.rows[r][name];
    const auto where = "row " + std::to_string(r + 1);
    if (!cell || cell->empty()) throw Error("node-id-invalid", where, "missing node name");
    if (!seen.insert(*cell).second) throw Error("duplicate-node-id", where, "duplicate node name '" + *cell + "'");
  }
  return table;
}

LinkTable read_link_table(std::istream& in, const TableOptions& opts) {
  auto table = read_table(in, opts);
  if (!opts.has_header) {
    const char* defaults[] = {"from", "relation", "to"};
    for (std::size_t c = 0; c < std::min<std::size_t>(3, table.header.size()); ++c) table.header[c] = defaults[c];
  }
  require_columns(table, {"from", "relation", "to"}, "link");
  return table;
}

void write_table(std::ostream& out, const Table& table, const TableOptions& opts,
                 const std::set<std::string>& always_quote) {
  std::string missing;
  if (!opts.na_strings.contains(missing) && !opts.na_strings.empty()) missing = *opts.na_strings.begin();
  // A lone missing cell must not turn into a blank line, which readers skip.
  std::string lone_missing = missing;
  for (const auto& na : opts.na_strings) {
    if (lone_missing.empty()) lone_missing = na;
  }

  const auto needs_quotes = [&](const std::string& s) {
    if (opts.na_strings.contains(s)) return true;
    if (!s.empty() && s.front() == '"') return true;
    return s.find_first_of(std::string{opts.delimiter, '"', '\n', '\r'}) != std::string::npos;
  };
  const auto put = [&](const std::string& s, bool force) {
    if (force || needs_quotes(s)) {
      out << '"';
      for (char c : s) {
        if (c == '"') out << '"';
        out << c;
      }
      out << '"';
    } else {
      out << s;
    }
  };

  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out << opts.delimiter;
    put(table.header[c], false);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << opts.delimiter;
      if (row[c]) {
        put(*row[c], always_quote.contains(table.header[c]));
      } else {
        out << (row.size() == 1 ? lone_missing : missing);
      }
    }
    out << '\n';
  }
}

void write_node_table(std::ostream& out, const NodeTable& table, const TableOptions& opts) {
  write_table(out, table, opts, {"name"});
}

void write_link_table(std::ostream& out, const LinkTable& table, const TableOptions& opts) {
  write_table(out, table, opts, {"from", "to"});
}

namespace {

const std::set<std::string>& numeric_columns() {
  static const std::set<std::string> names{"x", "y", "year", "vol", "num", "fPage", "lPage"};
  return names;
}

const std::set<std::string>& reserved_node_columns() {
  static const std::set<std::string> names{"name", "lab", "slab", "mode", "x", "y"};
  return names;
}

const std::set<std::string>& reserved_link_columns() {
  static const std::set<std::string> names{"from", "relation", "to", "type", "weight", "label"};
  return names;
}

bool column_is_numeric(const Table& table, std::size_t col, char decimal) {
  return std::all_of(table.rows.begin(), table.rows.end(), [&](const auto& row) {
    return !row[col] || parse_number(*row[col], decimal).has_value();
  });
}

}  // namespace

Network tables_to_network(const NodeTable& nodes, const LinkTable& links, bool directed, int base,
                          const TableOptions& opts) {
  if (base != 0 && base != 1) throw Error("org-range", "", "index base must be 0 or 1");
  require_columns(nodes, {"name"}, "node");
  require_columns(links, {"from", "relation", "to"}, "link");

  Network network;
  const auto name_col = *nodes.column("name");
  std::vector<bool> numeric(nodes.header.size(), false);
  for (std::size_t c = 0; c < nodes.header.size(); ++c) {
    numeric[c] = numeric_columns().contains(nodes.header[c]) && column_is_numeric(nodes, c, opts.decimal_separator);
  }

  std::set<std::string> names;
  for (std::size_t r = 0; r < nodes.rows.size(); ++r) {
    const auto& row = nodes.rows[r];
    const auto where = "row " + std::to_string(r + 1);
    if (row.size() != nodes.header.size()) throw Error("csv-ragged", where, "row width differs from header");
    const auto& name = row[name_col];
    if (!name || name->empty()) throw Error("node-id-invalid", where, "missing node name");
    if (!names.insert(*name).second) throw Error("duplicate-node-id", where, "duplicate node name '" + *name + "'");

    NodeRecord node;
    node.id = *name;
    node.lab = *name;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == name_col || !row[c]) continue;
      const auto& column = nodes.header[c];
      const auto& cell = *row[c];
      if (column == "lab") {
        node.lab = cell;
      } else if (column == "slab") {
        node.slab = cell;
      } else if (column == "mode") {
        node.mode = cell;
      } else if (numeric[c]) {
        const double value = *parse_number(cell, opts.decimal_separator);
        if (column == "x") {
          node.x = value;
        } else if (column == "y") {
          node.y = value;
        } else {
          node.props[column] = value;
        }
      } else {
        node.props[column] = cell;
      }
    }
    network.nodes.push_back(std::move(node));
  }

  const auto from_col = *links.column("from");
  const auto rel_col = *links.column("relation");
  const auto to_col = *links.column("to");
  std::vector<OptionalText> rel_names;
  for (std::size_t r = 0; r < links.rows.size(); ++r) {
    const auto& row = links.rows[r];
    const auto where = "row " + std::to_string(r + 1);
    if (row.size() != links.header.size()) throw Error("csv-ragged", where, "row width differs from header");

    LinkRecord link;
    link.kind = directed ? LinkKind::arc : LinkKind::edge;
    for (std::size_t col : {from_col, to_col}) {
      const auto& cell = row[col];
      if (!cell || !names.contains(*cell)) {
        throw Error("dangling-endpoint", where,
                    "link references unknown node '" + cell.value_or("") + "' in column '" + links.header[col] + "'");
      }
    }
    link.n1 = *row[from_col];
    link.n2 = *row[to_col];
    if (row[rel_col]) {
      link.rel = *row[rel_col];
      rel_names.push_back(*row[rel_col]);
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == from_col || c == to_col || c == rel_col || !row[c]) continue;
      const auto& column = links.header[c];
      const auto& cell = *row[c];
      if (column == "type") {
        if (cell == "arc") {
          link.kind = LinkKind::arc;
        } else if (cell == "edge") {
          link.kind = LinkKind::edge;
        } else {
          throw Error("csv-value", where, "link type must be 'arc' or 'edge', got '" + cell + "'");
        }
      } else if (column == "weight") {
        auto value = parse_number(cell, opts.decimal_separator);
        if (!value) throw Error("csv-value", where, "weight '" + cell + "' is not a number");
        link.weight = *value;
      } else if (column == "label") {
        link.label = cell;
      } else {
        link.props[column] = cell;
      }
    }
    network.links.push_back(std::move(link));
  }

  network.relations = build_coding_table("relation", rel_names, LevelPolicy::sorted, base);
  network.relations.levels.erase(std::remove(network.relations.levels.begin(), network.relations.levels.end(), ""),
                                 network.relations.levels.end());
  derive_flags(network);
  network.info.directed = directed && network.info.n_edges == 0;
  set_org(network, base);
  return network;
}

std::pair<NodeTable, LinkTable> network_to_tables(const Network& source, const TableOptions& opts) {
  const Network network = is_factorized(source) ? defactorize_network(source) : source;
  const char dec = opts.decimal_separator;

  bool any_lab = false, any_slab = false, any_mode = false, any_xy = false;
  std::set<std::string> node_props;
  for (const auto& node : network.nodes) {
    any_lab |= node.lab != key_text(node.id);
    any_slab |= node.slab.has_value();
    any_mode |= node.mode.has_value();
    any_xy |= node.x.has_value() || node.y.has_value();
    for (const auto& [name, value] : node.props) {
      if (!reserved_node_columns().contains(name)) node_props.insert(name);
    }
  }

  NodeTable nodes;
  nodes.header.push_back("name");
  if (any_lab) nodes.header.push_back("lab");
  if (any_slab) nodes.header.push_back("slab");
  if (any_mode) nodes.header.push_back("mode");
  nodes.header.insert(nodes.header.end(), node_props.begin(), node_props.end());
  if (any_xy) {
    nodes.header.push_back("x");
    nodes.header.push_back("y");
  }

  const auto prop_cell = [dec](const PropertyMap& props, const std::string& name) -> std::optional<std::string> {
    auto it = props.find(name);
    if (it == props.end()) return std::nullopt;
    if (it->second.is<double>()) return number_text(it->second.as<double>(), dec);
    return scalar_text(it->second);
  };

  for (const auto& node : network.nodes) {
    std::vector<std::optional<std::string>> row;
    row.reserve(nodes.header.size());
    for (const auto& column : nodes.header) {
      if (column == "name") {
        row.emplace_back(key_text(node.id));
      } else if (column == "lab") {
        row.emplace_back(node.lab);
      } else if (column == "slab") {
        row.emplace_back(node.slab);
      } else if (column == "mode") {
        row.emplace_back(node.mode);
      } else if (column == "x") {
        row.emplace_back(node.x ? std::optional(number_text(*node.x, dec)) : std::nullopt);
      } else if (column == "y") {
        row.emplace_back(node.y ? std::optional(number_text(*node.y, dec)) : std::nullopt);
      } else {
        row.emplace_back(prop_cell(node.props, column));
      }
    }
    nodes.rows.push_back(std::move(row));
  }

  bool any_edge = false, any_weight = false, any_label = false;
  std::set<std::string> link_props;
  for (const auto& link : network.links) {
    any_edge |= link.kind == LinkKind::edge;
    any_weight |= link.weight != 1.0;
    any_label |= link.label.has_value();
    for (const auto& [name, value] : link.props) {
      if (!reserved_link_columns().contains(name)) link_props.insert(name);
    }
  }

  LinkTable links;
  links.header = {"from", "relation", "to"};
  if (any_edge) links.header.push_back("type");
  if (any_weight) links.header.push_back("weight");
  if (any_label) links.header.push_back("label");
  links.header.insert(links.header.end(), link_props.begin(), link_props.end());

  for (const auto& link : network.links) {
    std::vector<std::optional<std::string>> row;
    row.reserve(links.header.size());
    for (const auto& column : links.header) {
      if (column == "from") {
        row.emplace_back(key_text(link.n1));
      } else if (column == "relation") {
        row.emplace_back(link.rel ? std::optional(key_text(*link.rel)) : std::nullopt);
      } else if (column == "to") {
        row.emplace_back(key_text(link.n2));
      } else if (column == "type") {
        row.emplace_back(link.kind == LinkKind::arc ? "arc" : "edge");
      } else if (column == "weight") {
        row.emplace_back(number_text(link.weight, dec));
      } else if (column == "label") {
        row.emplace_back(link.label);
      } else {
        row.emplace_back(prop_cell(link.props, column));
      }
    }
    links.rows.push_back(std::move(row));
  }
  return {std::move(nodes), std::move(links)};
}

}  // namespace netconv
