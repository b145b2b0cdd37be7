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

// secp256k1 group arithmetic in affine coordinates with an explicit
// identity element.
//
// NOT CONSTANT TIME. Field inversion, scalar multiplication and point
// decoding all branch and allocate on secret-dependent data. This code is a
// research artifact for exercising the anamorphic construction and its
// benchmarks; do not use it to protect real secrets.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anamorphic/bigint.hpp"

namespace anamorphic {

/// Residue modulo the secp256k1 field prime p. Always fully reduced.
class FieldElement {
 public:
  FieldElement() = default;
  /// Throws Error(out_of_range) unless 0 <= value < p.
  explicit FieldElement(BigInt value);

  static FieldElement reduce(const BigInt& value);

  const BigInt& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  FieldElement square() const;
  /// Throws Error(out_of_range) for zero.
  FieldElement inverse() const;
  /// Some square root when one exists (p = 3 mod 4, so a^((p+1)/4)).
  std::optional<FieldElement> sqrt() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

 private:
  struct Unchecked {};
  FieldElement(BigInt value, Unchecked) : value_(std::move(value)) {}

  BigInt value_ = 0;
};

/// Residue modulo the secp256k1 group order n. Private keys, nonces and
/// covert messages (as exponents) live here.
class Scalar {
 public:
  Scalar() = default;
  /// Throws Error(out_of_range) unless 0 <= value < n.
  explicit Scalar(BigInt value);

  static Scalar reduce(const BigInt& value);
  static Scalar from_u64(std::uint64_t value);

  const BigInt& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  BigInt value_ = 0;
};

/// A point of secp256k1: the identity, or affine (x, y) with y^2 = x^3 + 7.
class CurvePoint {
 public:
  /// The identity.
  CurvePoint() = default;

  static CurvePoint identity() { return CurvePoint(); }
  /// Throws Error(not_on_curve) if (x, y) does not satisfy the curve equation.
  static CurvePoint from_affine(const FieldElement& x, const FieldElement& y);

  bool is_identity() const noexcept { return !coords_.has_value(); }
  /// Affine coordinates; throw Error(identity_point) on the identity.
  const FieldElement& x() const;
  const FieldElement& y() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);

 private:
  friend CurvePoint point_add(const CurvePoint& p, const CurvePoint& q);
  friend CurvePoint point_double(const CurvePoint& p);
  friend CurvePoint point_negate(const CurvePoint& p);

  struct Affine {
    FieldElement x;
    FieldElement y;
  };
  explicit CurvePoint(Affine a) : coords_(std::move(a)) {}

  std::optional<Affine> coords_;
};

namespace secp256k1 {

/// SEC 2 domain parameters.
const BigInt& field_prime();
const BigInt& group_order();
const CurvePoint& generator();
inline constexpr unsigned kCurveB = 7;

}  // namespace secp256k1

bool is_on_curve(const FieldElement& x, const FieldElement& y);

CurvePoint point_add(const CurvePoint& p, const CurvePoint& q);
CurvePoint point_double(const CurvePoint& p);
CurvePoint point_negate(const CurvePoint& p);
CurvePoint point_sub(const CurvePoint& p, const CurvePoint& q);

/// Left-to-right double-and-add.
CurvePoint scalar_mul(const Scalar& k, const CurvePoint& p);
/// k * G.
CurvePoint scalar_mul_base(const Scalar& k);

inline CurvePoint operator+(const CurvePoint& p, const CurvePoint& q) { return point_add(p, q); }
inline CurvePoint operator-(const CurvePoint& p, const CurvePoint& q) { return point_sub(p, q); }
inline CurvePoint operator-(const CurvePoint& p) { return point_negate(p); }
inline CurvePoint operator*(const Scalar& k, const CurvePoint& p) { return scalar_mul(k, p); }

inline constexpr std::size_t kCompressedPointSize = 33;

/// SEC1 compressed form (0x02/0x03 || x); the identity is the single byte 0x00.
std::vector<std::uint8_t> encode_point(const CurvePoint& p);
/// Appends the encoding to `out` without an intermediate allocation.
void encode_point_into(const CurvePoint& p, std::string& out);

/// Inverse of encode_point. Throws Error with malformed_length,
/// invalid_prefix or not_on_curve.
CurvePoint decode_point(std::span<const std::uint8_t> bytes);

/// Int(P): the big-endian integer of the 64-byte string x || y.
/// Throws Error(identity_point) for the identity.
BigInt point_to_int(const CurvePoint& p);

/// Lowercase hex of encode_point.
std::string point_to_hex(const CurvePoint& p);
/// Throws Error(invalid_encoding) for bad hex, then as decode_point.
CurvePoint point_from_hex(std::string_view hex);

/// 64-character big-endian hex.
std::string scalar_to_hex(const Scalar& k);
/// Accepts 1..64 hex digits; the value must be below n.
Scalar scalar_from_hex(std::string_view hex);

}  // namespace anamorphic
