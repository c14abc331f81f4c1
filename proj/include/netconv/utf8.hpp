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

#include <cstddef>
#include <optional>
#include <string_view>

namespace netconv::utf8 {

/// Byte offset of the first malformed sequence, or nullopt for valid UTF-8.
std::optional<std::size_t> first_invalid(std::string_view text);

/// Number of code points; assumes valid UTF-8.
std::size_t length(std::string_view text);

}  // namespace netconv::utf8
