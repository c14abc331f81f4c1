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

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netconv/network.hpp"

namespace netconv {

struct TableOptions {
  char delimiter = ';';
  std::string encoding = "UTF-8";
  char decimal_separator = '.';
  std::set<std::string> na_strings{"", "NA", "NaN"};
  bool has_header = true;
};

/// A cell is nullopt when missing. Quoted cells are never missing, so a
/// quoted "NA" stays text.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<std::string>>> rows;

  /// Index of a column, or nullopt.
  std::optional<std::size_t> column(const std::string& name) const;
  bool operator==(const Table&) const = default;
};

using NodeTable = Table;
using LinkTable = Table;

/// Reads a delimited table. Throws Error with rules "csv-ragged",
/// "csv-encoding" or "csv-schema" (for malformed headers).
Table read_table(std::istream& in, const TableOptions& opts = {});

/// Node table: requires a unique, non-missing `name` column.
NodeTable read_node_table(std::istream& in, const TableOptions& opts = {});

/// Link table: requires `from`, `relation` and `to` columns.
LinkTable read_link_table(std::istream& in, const TableOptions& opts = {});

/// Writes a table. Cells containing the delimiter, a quote, CR/LF, or text
/// that would read back as missing are quoted; columns listed in
/// `always_quote` are quoted whenever present.
void write_table(std::ostream& out, const Table& table, const TableOptions& opts = {},
                 const std::set<std::string>& always_quote = {});

/// Builds a labeled network from the two tables.
///
/// Recognized node columns: name, lab, slab, mode, x, y. The columns x, y,
/// year, vol, num, fPage and lPage become reals when every present cell
/// parses as a number. Recognized link columns: from, relation, to, type,
/// weight, label. Every other column becomes a text property.
Network tables_to_network(const NodeTable& nodes, const LinkTable& links, bool directed = true,
                          int base = 1, const TableOptions& opts = {});

/// Inverse of tables_to_network for labeled networks. Factorized networks
/// are defactorized first; throws Error("cannot-invert") when they lack the
/// coding tables.
std::pair<NodeTable, LinkTable> network_to_tables(const Network& network, const TableOptions& opts = {});

/// Writes a node or link table with the identifier columns (name, from, to)
/// always quoted.
void write_node_table(std::ostream& out, const NodeTable& table, const TableOptions& opts = {});
void write_link_table(std::ostream& out, const LinkTable& table, const TableOptions& opts = {});

}  // namespace netconv
