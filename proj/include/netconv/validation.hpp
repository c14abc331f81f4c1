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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netconv/error.hpp"
#include "netconv/network.hpp"

namespace netconv {

/// Lenient mirrors what legacy tools accept; strict adds counter
/// consistency, creation/modification dates and tq presence for temporal
/// networks.
enum class Level { lenient, strict };

std::string_view to_string(Level level);

struct ValidationReport {
  std::vector<Finding> findings;
  Level level = Level::lenient;

  bool has_errors() const;
  std::size_t count(Severity severity) const;
  bool operator==(const ValidationReport&) const = default;
};

struct RuleInfo {
  std::string_view id;
  std::string_view applies_to;
  std::string_view summary;
};

/// Every rule identifier a Finding can carry.
std::span<const RuleInfo> rule_registry();
bool is_registered_rule(std::string_view id);

/// Core-model invariants and flag-vs-content checks. Locations are JSON
/// pointers into the network's NetsJSON rendering (`/links/3/rel`).
ValidationReport check_network(const Network& network, Level level);

/// Time window, tq ordering and containment checks.
ValidationReport check_temporal(const Network& network, Level level);

/// check_network and check_temporal merged in location order.
ValidationReport validate_network(const Network& network, Level level);

/// Stable sort by input location: JSON pointer section then element index,
/// or the number in `line N` / `row N`.
void sort_findings(std::vector<Finding>& findings);

/// `severity rule location: message`, one finding per line.
std::string render_text(const ValidationReport& report);

/// One JSON object per line with severity, rule, location and message.
std::string render_json_lines(const ValidationReport& report);

/// Calendar date `YYYY-MM-DD`, optionally followed by `T` and a time.
bool is_iso_date(std::string_view text);

}  // namespace netconv
