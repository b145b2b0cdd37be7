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

#include "anamorphic/bigint.hpp"

#include <algorithm>

#include "anamorphic/error.hpp"

namespace anamorphic {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BigInt from_bytes_be(std::span<const std::uint8_t> bytes) {
  BigInt out = 0;
  if (!bytes.empty()) {
    mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return out;
}

std::size_t byte_length(const BigInt& value) {
  if (sgn(value) == 0) return 0;
  return (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
}

std::vector<std::uint8_t> to_bytes_be(const BigInt& value, std::size_t width) {
  if (sgn(value) < 0) throw Error(Errc::out_of_range, "negative integer has no byte encoding");
  const std::size_t len = byte_length(value);
  if (len > width) throw Error(Errc::out_of_range, "integer does not fit in requested width");
  std::vector<std::uint8_t> out(width, 0);
  if (len > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (width - len), &written, 1, 1, 1, 0, value.get_mpz_t());
  }
  return out;
}

std::vector<std::uint8_t> to_bytes_be(const BigInt& value) {
  return to_bytes_be(value, byte_length(value));
}

std::string to_hex(const BigInt& value, std::size_t width) {
  std::string s = value.get_str(16);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_hex(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return hex_value(c) >= 0; })) {
    throw Error(Errc::invalid_encoding, "expected a non-empty hex string");
  }
  return BigInt(std::string(text), 16);
}

BigInt parse_decimal(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(Errc::invalid_encoding, "expected a non-empty decimal string");
  }
  return BigInt(std::string(text), 10);
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

std::vector<std::uint8_t> hex_to_bytes(std::string_view text) {
  if (text.size() % 2 != 0) throw Error(Errc::invalid_encoding, "hex string has odd length");
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const int hi = hex_value(text[i]);
    const int lo = hex_value(text[i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::invalid_encoding, "invalid hex digit");
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

BigInt pow2(unsigned bits) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, bits);
  return out;
}

}  // namespace anamorphic
