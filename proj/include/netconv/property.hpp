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
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace netconv {

struct PropertyValue;
struct TqSegment;

/// A value defined piecewise over half-open integer intervals [start, finish).
///
/// Well-formed quantities have start < finish for every segment and segments
/// sorted by start and pairwise disjoint. The type itself does not enforce
/// this; see `tq_is_well_formed` and the temporal checks in validation.
struct TemporalQuantity {
  std::vector<TqSegment> segments;

  bool empty() const noexcept { return segments.empty(); }
  friend bool operator==(const TemporalQuantity& a, const TemporalQuantity& b);
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Interval&) const = default;
};

using PropertyList = std::vector<PropertyValue>;
using PropertyMap = std::map<std::string, PropertyValue>;

/// Tagged union of structured property values.
///
/// `Record` holds nested user-defined objects read from NetsJSON; keys are
/// kept sorted.
struct PropertyValue {
  struct Record {
    PropertyMap fields;
    friend bool operator==(const Record& a, const Record& b);
  };

  using Storage = std::variant<std::monostate, bool, std::int64_t, double,
                               std::string, PropertyList, Interval,
                               TemporalQuantity, Record>;
  Storage value;

  PropertyValue() = default;
  PropertyValue(bool b) : value(b) {}
  PropertyValue(int i) : value(static_cast<std::int64_t>(i)) {}
  PropertyValue(std::int64_t i) : value(i) {}
  PropertyValue(double d) : value(d) {}
  PropertyValue(std::string s) : value(std::move(s)) {}
  PropertyValue(const char* s) : value(std::string(s)) {}
  PropertyValue(PropertyList l) : value(std::move(l)) {}
  PropertyValue(Interval i) : value(i) {}
  PropertyValue(TemporalQuantity tq);
  PropertyValue(Record r);

  bool is_absent() const noexcept { return value.index() == 0; }
  template <class T>
  bool is() const noexcept { return std::holds_alternative<T>(value); }
  template <class T>
  const T& as() const { return std::get<T>(value); }

  friend bool operator==(const PropertyValue& a, const PropertyValue& b);
};

struct TqSegment {
  std::int64_t start = 0;
  std::int64_t finish = 0;
  PropertyValue value;

  friend bool operator==(const TqSegment& a, const TqSegment& b);
};

/// Value holding at time `t`, or absent when no segment covers `t`.
/// Requires the segments to be sorted and disjoint.
PropertyValue tq_value_at(const TemporalQuantity& tq, std::int64_t t);

/// True when every segment is non-empty, sorted and disjoint from the next.
bool tq_is_well_formed(const TemporalQuantity& tq);

/// Text rendering of scalar values, used where a format has only text cells.
/// Returns nullopt for absent, list, interval, record and temporal values.
std::optional<std::string> scalar_text(const PropertyValue& value);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

}  // namespace netconv
