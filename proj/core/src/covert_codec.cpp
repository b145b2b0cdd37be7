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

#include "anamorphic/covert_codec.hpp"

#include <string>

#include "anamorphic/error.hpp"

namespace anamorphic {

namespace {

constexpr unsigned kActionShift = 24;
constexpr unsigned kTimeShift = 12;
constexpr unsigned kLocationShift = 4;

constexpr std::uint32_t kActionLimit = 1u << 6;
constexpr std::uint32_t kTimeMask = (1u << 12) - 1;
constexpr std::uint32_t kLocationLimit = 1u << 8;

void check_field(std::uint32_t value, std::uint32_t limit, const char* name) {
  if (value >= limit) {
    throw Error(Errc::field_out_of_range,
                std::string(name) + " must be below " + std::to_string(limit) + ", got " + std::to_string(value));
  }
}

}  // namespace

std::uint64_t encode_schema(const CovertSchema& schema) {
  check_field(schema.action, kActionLimit, "action");
  check_field(schema.time_minutes, kMinutesPerDay, "time_minutes");
  check_field(schema.location, kLocationLimit, "location");
  std::uint64_t flags = 0;
  for (std::size_t i = 0; i < schema.flags.size(); ++i) {
    if (schema.flags[i]) flags |= std::uint64_t{1} << i;
  }
  return std::uint64_t{schema.action} << kActionShift | std::uint64_t{schema.time_minutes} << kTimeShift |
         std::uint64_t{schema.location} << kLocationShift | flags;
}

CovertSchema decode_schema(std::uint64_t cm) {
  if (cm >> kSchemaBits != 0) throw Error(Errc::out_of_range, "cm does not fit the 30-bit schema");
  CovertSchema s;
  s.action = static_cast<std::uint32_t>(cm >> kActionShift);
  s.time_minutes = static_cast<std::uint32_t>(cm >> kTimeShift) & kTimeMask;
  s.location = static_cast<std::uint32_t>(cm >> kLocationShift) & (kLocationLimit - 1);
  for (std::size_t i = 0; i < s.flags.size(); ++i) s.flags[i] = (cm >> i & 1) != 0;
  return s;
}

CovertSchema decode_schema_strict(std::uint64_t cm) {
  CovertSchema s = decode_schema(cm);
  if (!s.time_valid()) {
    throw Error(Errc::time_field_invalid, "time field " + std::to_string(s.time_minutes) + " is not a minute of the day");
  }
  return s;
}

}  // namespace anamorphic
