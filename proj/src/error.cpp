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

#include "netconv/error.hpp"

#include <utility>

namespace netconv {

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::info:
      return "info";
    case Severity::warning:
      return "warning";
    case Severity::error:
      return "error";
  }
  return "error";
}

namespace {

std::string describe(const Finding& f) {
  std::string out = f.rule;
  if (!f.location.empty()) out += " at " + f.location;
  if (!f.message.empty()) out += ": " + f.message;
  return out;
}

}  // namespace

Error::Error(Finding finding) : std::runtime_error(describe(finding)), finding_(std::move(finding)) {}

Error::Error(std::string rule, std::string location, std::string message)
    : Error(Finding{Severity::error, std::move(rule), std::move(location), std::move(message)}) {}

}  // namespace netconv
