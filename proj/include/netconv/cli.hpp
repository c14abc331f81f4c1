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
#include <string>
#include <string_view>
#include <vector>

namespace netconv {

enum class Format { csv, net, netsjson, clu };

std::optional<Format> parse_format(std::string_view name);
/// `.csv`, `.net`, `.json`, `.clu`; nullopt otherwise.
std::optional<Format> format_from_path(std::string_view path);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid = 1;
inline constexpr int failure = 2;
}  // namespace exit_code

/// Runs the `netconv` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on validation failure, 2 on parse, I/O or usage
/// failure.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace netconv
