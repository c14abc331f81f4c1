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

#include <stdexcept>
#include <string>
#include <string_view>

namespace netconv {

enum class Severity { info, warning, error };

std::string_view to_string(Severity severity);

/// One validation or parse problem.
///
/// `rule` is a stable identifier from the rule registry (docs/rules.md).
/// `location` is format specific: a JSON pointer such as `/links/3/n1`,
/// `line 12` for Pajek files, or `row 5` for CSV tables.
struct Finding {
  Severity severity = Severity::error;
  std::string rule;
  std::string location;
  std::string message;

  bool operator==(const Finding&) const = default;
};

/// Thrown by readers and transformations. Carries the finding that
/// describes the failure so callers can report it uniformly.
class Error : public std::runtime_error {
 public:
  explicit Error(Finding finding);
  Error(std::string rule, std::string location, std::string message);

  const Finding& finding() const noexcept { return finding_; }
  const std::string& rule() const noexcept { return finding_.rule; }

 private:
  Finding finding_;
};

}  // namespace netconv
