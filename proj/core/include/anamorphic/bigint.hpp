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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace anamorphic {

/// Arbitrary-precision non-negative integers (ciphertext c0, field and
/// group residues) are GMP integers.
using BigInt = mpz_class;

/// Big-endian bytes to integer. An empty span yields zero.
BigInt from_bytes_be(std::span<const std::uint8_t> bytes);

/// Integer to exactly `width` big-endian bytes, left-padded with zeros.
/// Throws Error(out_of_range) if the value is negative or does not fit.
std::vector<std::uint8_t> to_bytes_be(const BigInt& value, std::size_t width);

/// Minimal big-endian encoding; zero encodes as an empty vector.
std::vector<std::uint8_t> to_bytes_be(const BigInt& value);

std::size_t byte_length(const BigInt& value);

/// Lowercase hex, left-padded to `width` characters when width > 0.
std::string to_hex(const BigInt& value, std::size_t width = 0);
std::string to_decimal(const BigInt& value);

/// Strict parsers: digits only (no sign, no prefix, no whitespace).
/// Throw Error(invalid_encoding) on anything else.
BigInt parse_hex(std::string_view text);
BigInt parse_decimal(std::string_view text);

std::string bytes_to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> hex_to_bytes(std::string_view text);

/// 2^bits as a BigInt.
BigInt pow2(unsigned bits);

}  // namespace anamorphic
