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

#include "netconv/property.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace netconv {

bool operator==(const TemporalQuantity& a, const TemporalQuantity& b) {
  return a.segments == b.segments;
}

bool operator==(const PropertyValue::Record& a, const PropertyValue::Record& b) {
  return a.fields == b.fields;
}

bool operator==(const PropertyValue& a, const PropertyValue& b) { return a.value == b.value; }

bool operator==(const TqSegment& a, const TqSegment& b) {
  return a.start == b.start && a.finish == b.finish && a.value == b.value;
}

PropertyValue::PropertyValue(TemporalQuantity tq) : value(std::move(tq)) {}
PropertyValue::PropertyValue(Record r) : value(std::move(r)) {}

PropertyValue tq_value_at(const TemporalQuantity& tq, std::int64_t t) {
  const auto& segs = tq.segments;
  // First segment starting after t; the candidate is the one before it.
  auto it = std::upper_bound(segs.begin(), segs.end(), t,
                             [](std::int64_t time, const TqSegment& s) { return time < s.start; });
  if (it == segs.begin()) return {};
  --it;
  if (t < it->finish) return it->value;
  return {};
}

bool tq_is_well_formed(const TemporalQuantity& tq) {
  for (std::size_t i = 0; i < tq.segments.size(); ++i) {
    const auto& s = tq.segments[i];
    if (s.start >= s.finish) return false;
    if (i > 0 && tq.segments[i - 1].finish > s.start) return false;
  }
  return true;
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::optional<std::string> scalar_text(const PropertyValue& value) {
  if (value.is<bool>()) return value.as<bool>() ? "true" : "false";
  if (value.is<std::int64_t>()) return std::to_string(value.as<std::int64_t>());
  if (value.is<double>()) return format_real(value.as<double>());
  if (value.is<std::string>()) return value.as<std::string>();
  return std::nullopt;
}

}  // namespace netconv
