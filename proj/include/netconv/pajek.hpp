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
#include <iosfwd>
#include <string>
#include <vector>

#include "netconv/coding.hpp"
#include "netconv/network.hpp"

namespace netconv {

struct PajekWriteOptions {
  // Append `x y` to vertex lines of nodes that carry both coordinates.
  bool coordinates = false;
};

/// Pajek NET text for `network`.
///
/// Layout: optional `*network title`, `*vertices n`, one `i "label"` line
/// per node, one `*arcs :r "name"` declaration per relation in code order,
/// then link sections (`*arcs` / `*edges`, a new header whenever the kind
/// changes) with lines `r: n1 n2 w l "name"`. Labeled networks are
/// factorized and relations sorted first. Only base 1 is accepted; base-0
/// networks are shifted.
std::string write_pajek_net(const Network& network, int base = 1, const PajekWriteOptions& opts = {});

/// Parses Pajek NET text into a factorized network (base 1) whose node
/// coding is taken from the vertex labels.
///
/// Accepts `%` comments, blank lines, CRLF, case-insensitive keywords,
/// relation sections (`*arcs :r "name"` followed by lines without prefix),
/// and link lines without the `r:` prefix or the `l "name"` suffix.
Network read_pajek_net(std::istream& in);

struct Partition {
  std::string name;
  std::vector<std::int64_t> values;
  CodingTable coding;
  std::int64_t missing_code = 0;

  bool operator==(const Partition&) const = default;
};

/// Class codes of a node property, coded over its sorted distinct values.
/// `property` may be "mode" or any node property holding scalar values.
/// Throws Error("unknown-property") when no node carries it.
Partition partition_from_property(const Network& network, const std::string& property, int base = 1,
                                  std::int64_t missing_code = 0);

/// `% 1 f 2 m` legend (omitted for an empty coding), `*vertices n`, then one
/// code per line.
std::string write_pajek_clu(const Partition& partition);

/// Inverse of write_pajek_clu. Without a legend the coding is synthesized
/// as the bare integer levels 1..max. Throws Error("clu-count") when the
/// number of values differs from the declared count.
Partition read_pajek_clu(std::istream& in, std::string name = {});

}  // namespace netconv
