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

#include "anamorphic/curve.hpp"

#include "anamorphic/error.hpp"

namespace anamorphic {

namespace secp256k1 {

const BigInt& field_prime() {
  static const BigInt p("fffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f", 16);
  return p;
}

const BigInt& group_order() {
  static const BigInt n("fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141", 16);
  return n;
}

const CurvePoint& generator() {
  static const CurvePoint g = CurvePoint::from_affine(
      FieldElement(BigInt("79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798", 16)),
      FieldElement(BigInt("483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8", 16)));
  return g;
}

}  // namespace secp256k1

namespace {

const BigInt& sqrt_exponent() {
  static const BigInt e = (secp256k1::field_prime() + 1) / 4;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(BigInt value) : value_(std::move(value)) {
  if (sgn(value_) < 0 || value_ >= secp256k1::field_prime()) {
    throw Error(Errc::out_of_range, "field element out of range");
  }
}

FieldElement FieldElement::reduce(const BigInt& value) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), secp256k1::field_prime().get_mpz_t());
  return FieldElement(std::move(r), Unchecked{});
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  BigInt r = a.value_ + b.value_;
  if (r >= secp256k1::field_prime()) r -= secp256k1::field_prime();
  return FieldElement(std::move(r), FieldElement::Unchecked{});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  BigInt r = a.value_ - b.value_;
  if (sgn(r) < 0) r += secp256k1::field_prime();
  return FieldElement(std::move(r), FieldElement::Unchecked{});
}

FieldElement operator-(const FieldElement& a) {
  if (a.is_zero()) return a;
  return FieldElement(secp256k1::field_prime() - a.value_, FieldElement::Unchecked{});
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  BigInt r;
  mpz_mul(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), secp256k1::field_prime().get_mpz_t());
  return FieldElement(std::move(r), FieldElement::Unchecked{});
}

FieldElement FieldElement::square() const { return *this * *this; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::out_of_range, "zero has no inverse");
  BigInt r;
  mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), secp256k1::field_prime().get_mpz_t());
  return FieldElement(std::move(r), Unchecked{});
}

std::optional<FieldElement> FieldElement::sqrt() const {
  BigInt r;
  mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), sqrt_exponent().get_mpz_t(),
           secp256k1::field_prime().get_mpz_t());
  FieldElement root(std::move(r), Unchecked{});
  if (root.square() != *this) return std::nullopt;
  return root;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(BigInt value) : value_(std::move(value)) {
  if (sgn(value_) < 0 || value_ >= secp256k1::group_order()) {
    throw Error(Errc::out_of_range, "scalar out of range");
  }
}

Scalar Scalar::reduce(const BigInt& value) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), secp256k1::group_order().get_mpz_t());
  return Scalar(std::move(r));
}

Scalar Scalar::from_u64(std::uint64_t value) {
  BigInt v;
  mpz_import(v.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return reduce(v);
}

Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar::reduce(a.value_ + b.value_); }
Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar::reduce(a.value_ - b.value_); }
Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar::reduce(a.value_ * b.value_); }
Scalar operator-(const Scalar& a) { return Scalar::reduce(-a.value_); }

// ---------------------------------------------------------------------------
// CurvePoint

bool is_on_curve(const FieldElement& x, const FieldElement& y) {
  static const FieldElement b(BigInt(secp256k1::kCurveB));
  return y.square() == x.square() * x + b;
}

CurvePoint CurvePoint::from_affine(const FieldElement& x, const FieldElement& y) {
  if (!is_on_curve(x, y)) throw Error(Errc::not_on_curve, "point is not on secp256k1");
  return CurvePoint(Affine{x, y});
}

const FieldElement& CurvePoint::x() const {
  if (!coords_) throw Error(Errc::identity_point, "identity has no affine coordinates");
  return coords_->x;
}

const FieldElement& CurvePoint::y() const {
  if (!coords_) throw Error(Errc::identity_point, "identity has no affine coordinates");
  return coords_->y;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (a.is_identity() || b.is_identity()) return a.is_identity() == b.is_identity();
  return a.coords_->x == b.coords_->x && a.coords_->y == b.coords_->y;
}

CurvePoint point_negate(const CurvePoint& p) {
  if (p.is_identity()) return p;
  return CurvePoint(CurvePoint::Affine{p.coords_->x, -p.coords_->y});
}

CurvePoint point_double(const CurvePoint& p) {
  if (p.is_identity() || p.coords_->y.is_zero()) return CurvePoint::identity();
  const FieldElement& x = p.coords_->x;
  const FieldElement& y = p.coords_->y;
  const FieldElement x2 = x.square();
  const FieldElement lambda = (x2 + x2 + x2) * (y + y).inverse();
  const FieldElement x3 = lambda.square() - x - x;
  const FieldElement y3 = lambda * (x - x3) - y;
  return CurvePoint(CurvePoint::Affine{x3, y3});
}

CurvePoint point_add(const CurvePoint& p, const CurvePoint& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  const FieldElement& x1 = p.coords_->x;
  const FieldElement& y1 = p.coords_->y;
  const FieldElement& x2 = q.coords_->x;
  const FieldElement& y2 = q.coords_->y;
  if (x1 == x2) {
    if (y1 == y2) return point_double(p);
    return CurvePoint::identity();
  }
  const FieldElement lambda = (y2 - y1) * (x2 - x1).inverse();
  const FieldElement x3 = lambda.square() - x1 - x2;
  const FieldElement y3 = lambda * (x1 - x3) - y1;
  return CurvePoint(CurvePoint::Affine{x3, y3});
}

CurvePoint point_sub(const CurvePoint& p, const CurvePoint& q) { return point_add(p, point_negate(q)); }

CurvePoint scalar_mul(const Scalar& k, const CurvePoint& p) {
  CurvePoint acc;
  if (k.is_zero() || p.is_identity()) return acc;
  const mpz_srcptr bits = k.value().get_mpz_t();
  for (long i = static_cast<long>(mpz_sizeinbase(bits, 2)) - 1; i >= 0; --i) {
    acc = point_double(acc);
    if (mpz_tstbit(bits, static_cast<mp_bitcnt_t>(i))) acc = point_add(acc, p);
  }
  return acc;
}

CurvePoint scalar_mul_base(const Scalar& k) { return scalar_mul(k, secp256k1::generator()); }

// ---------------------------------------------------------------------------
// Encodings

void encode_point_into(const CurvePoint& p, std::string& out) {
  if (p.is_identity()) {
    out.push_back('\0');
    return;
  }
  const std::size_t start = out.size();
  out.resize(start + kCompressedPointSize, '\0');
  out[start] = p.y().is_odd() ? '\x03' : '\x02';
  const BigInt& x = p.x().value();
  const std::size_t len = byte_length(x);
  if (len > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + start + kCompressedPointSize - len, &written, 1, 1, 1, 0, x.get_mpz_t());
  }
}

std::vector<std::uint8_t> encode_point(const CurvePoint& p) {
  std::string buf;
  buf.reserve(kCompressedPointSize);
  encode_point_into(p, buf);
  return {buf.begin(), buf.end()};
}

CurvePoint decode_point(std::span<const std::uint8_t> bytes) {
  if (bytes.size() == 1) {
    if (bytes[0] == 0x00) return CurvePoint::identity();
    if (bytes[0] == 0x02 || bytes[0] == 0x03) throw Error(Errc::malformed_length, "truncated compressed point");
    throw Error(Errc::invalid_prefix, "invalid point prefix");
  }
  if (bytes.size() != kCompressedPointSize) {
    throw Error(Errc::malformed_length, "compressed point must be 33 bytes");
  }
  const std::uint8_t prefix = bytes[0];
  if (prefix != 0x02 && prefix != 0x03) throw Error(Errc::invalid_prefix, "invalid point prefix");

  const BigInt xv = from_bytes_be(bytes.subspan(1));
  if (xv >= secp256k1::field_prime()) throw Error(Errc::not_on_curve, "x coordinate not a field element");
  const FieldElement x(xv);
  static const FieldElement b(BigInt(secp256k1::kCurveB));
  const auto root = (x.square() * x + b).sqrt();
  if (!root) throw Error(Errc::not_on_curve, "x has no corresponding y on secp256k1");
  const bool want_odd = prefix == 0x03;
  const FieldElement y = root->is_odd() == want_odd ? *root : -*root;
  return CurvePoint::from_affine(x, y);
}

BigInt point_to_int(const CurvePoint& p) {
  if (p.is_identity()) throw Error(Errc::identity_point, "Int() of the identity is undefined");
  BigInt out;
  mpz_mul_2exp(out.get_mpz_t(), p.x().value().get_mpz_t(), 256);
  out += p.y().value();
  return out;
}

std::string point_to_hex(const CurvePoint& p) { return bytes_to_hex(encode_point(p)); }

CurvePoint point_from_hex(std::string_view hex) {
  const auto bytes = hex_to_bytes(hex);
  if (bytes.empty()) throw Error(Errc::malformed_length, "empty point encoding");
  return decode_point(bytes);
}

std::string scalar_to_hex(const Scalar& k) { return to_hex(k.value(), 64); }

Scalar scalar_from_hex(std::string_view hex) {
  if (hex.size() > 64) throw Error(Errc::invalid_encoding, "scalar hex longer than 64 digits");
  return Scalar(parse_hex(hex));
}

}  // namespace anamorphic
