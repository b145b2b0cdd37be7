// Copyright 2026 The Anamorphic ECC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// schema-v1: a 30-bit covert command packed into cm.
//
//   bits 29..24  action        6 bits  [0, 64)
//   bits 23..12  time_minutes 12 bits  valid range [0, 1440)
//   bits 11..4   location      8 bits  [0, 256)
//   bits  3..0   flags         4 bits  flags[0] is bit 0
//
// The layout is a local convention, not an interoperable format.

#include <array>
#include <cstdint>
#include <string_view>

namespace anamorphic {

inline constexpr std::string_view kSchemaVersion = "v1";
inline constexpr unsigned kSchemaBits = 30;
inline constexpr std::uint32_t kMinutesPerDay = 1440;

struct CovertSchema {
  std::uint32_t action = 0;
  std::uint32_t time_minutes = 0;
  std::uint32_t location = 0;
  std::array<bool, 4> flags{};

  /// time_minutes names a minute of the day.
  bool time_valid() const noexcept { return time_minutes < kMinutesPerDay; }

  friend bool operator==(const CovertSchema&, const CovertSchema&) = default;
};

/// Throws Error(field_out_of_range) if any field exceeds its range
/// (including time_minutes >= 1440).
std::uint64_t encode_schema(const CovertSchema& schema);

/// Exact inverse of encode_schema. Throws Error(out_of_range) for
/// cm >= 2^30. A time field >= 1440 still decodes; check time_valid().
CovertSchema decode_schema(std::uint64_t cm);

/// decode_schema, additionally throwing Error(time_field_invalid) when
/// the time field is not a minute of the day.
CovertSchema decode_schema_strict(std::uint64_t cm);

}  // namespace anamorphic
