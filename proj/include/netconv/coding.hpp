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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netconv {

struct Network;

/// Ordered list of distinct categorical values; `levels[i]` has code
/// `base + i`.
struct CodingTable {
  std::string name;
  std::vector<std::string> levels;
  int base = 1;

  std::size_t size() const noexcept { return levels.size(); }
  bool contains_code(std::int64_t code) const noexcept {
    return code >= base && code < base + static_cast<std::int64_t>(levels.size());
  }
  /// Code of `value`, or nullopt when it is not a level.
  std::optional<std::int64_t> code_of(const std::string& value) const;
  const std::string& level_of(std::int64_t code) const;

  bool operator==(const CodingTable&) const = default;
};

enum class LevelPolicy { file_order, sorted };

using OptionalText = std::optional<std::string>;

/// Distinct non-missing values, in first-appearance order or sorted by code
/// point. Empty strings are not levels.
CodingTable build_coding_table(std::string name, std::span<const OptionalText> values,
                               LevelPolicy policy, int base);

/// Element-wise codes; missing values map to `missing_code`.
/// Throws Error("unknown-level") for values absent from the table.
std::vector<std::int64_t> encode(std::span<const OptionalText> values, const CodingTable& table,
                                 std::int64_t missing_code);

/// Inverse of encode. `missing_code` decodes to nullopt.
/// Throws Error("code-range") for codes outside the table.
std::vector<OptionalText> decode(std::span<const std::int64_t> codes, const CodingTable& table,
                                 std::int64_t missing_code);

/// Replaces node ids, link endpoints and relation names by codes. Node
/// coding follows file order, relation coding is sorted. Throws
/// Error("duplicate-node-id") or Error("already-factorized").
Network factorize_network(Network network, int base);

/// Restores labels from the coding tables stored by factorize_network.
/// Throws Error("cannot-invert") when a needed table is missing or short.
Network defactorize_network(Network network);

/// Shifts every code of a factorized network to a new index base.
Network rebase_network(Network network, int base);

}  // namespace netconv
