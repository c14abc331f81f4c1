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
#include <string>
#include <string_view>

#include "netconv/network.hpp"
#include "netconv/validation.hpp"

namespace netconv {

struct NetsJsonWriteOptions {
  // Two-space indentation instead of a single line.
  bool pretty = false;
  // Omit `"type": "arc"` and `"weight": 1` on links.
  bool omit_defaults = false;
};

/// Reads a basic NetsJSON document.
///
/// Unknown members of info, node and link objects become properties. Node
/// ids are either all integers (factorized form) or all text. Declared
/// counters are replaced by counts of the lists; declared flags are kept.
/// Throws Error with the first error-severity finding.
Network parse_netsjson(std::string_view text);
Network parse_netsjson(std::istream& in);

/// Members in the fixed order netsJSON, info, nodes, links, data. Same
/// network, same bytes.
std::string write_netsjson(const Network& network, const NetsJsonWriteOptions& opts = {});
std::string write_netsjson(const Network& network, bool pretty);

/// Schema findings for a document, followed by the network-level checks at
/// the requested level when the document is structurally readable.
ValidationReport validate_netsjson_document(std::string_view text, bool strict);
ValidationReport validate_netsjson_document(std::istream& in, bool strict);

}  // namespace netconv
