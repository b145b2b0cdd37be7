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

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "anamorphic/curve.hpp"
#include "anamorphic/error.hpp"
#include "anamorphic/random.hpp"
#include "reference_secp256k1.hpp"

using namespace anamorphic;
using anamorphic::testing::ref_add_multiples;
using anamorphic::testing::ref_compressed_mul_base;
using anamorphic::testing::ref_mul_base;

namespace {

const CurvePoint& G() { return secp256k1::generator(); }

Scalar random_scalar(RandomSource& rng) { return Scalar(random_below_nonzero(rng, secp256k1::group_order())); }

void expect_matches_reference(const CurvePoint& p, const anamorphic::testing::RefPoint& ref) {
  ASSERT_EQ(p.is_identity(), ref.infinity);
  if (ref.infinity) return;
  EXPECT_EQ(p.x().value(), ref.x);
  EXPECT_EQ(p.y().value(), ref.y);
}

template <class Fn>
Errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an anamorphic::Error";
  return Errc::invalid_parameters;
}

}  // namespace

TEST(CurveConstants, GeneratorIsOnCurveAndHasOrderN) {
  EXPECT_TRUE(is_on_curve(G().x(), G().y()));
  expect_matches_reference(G(), ref_mul_base(1));

  const Scalar n_minus_1(secp256k1::group_order() - 1);
  const CurvePoint almost = scalar_mul(n_minus_1, G());
  EXPECT_EQ(almost, point_negate(G()));
  // (n - 1)G + G = nG = identity.
  EXPECT_TRUE(point_add(almost, G()).is_identity());
}

TEST(CurveConstants, ScalarReducesModuloOrder) {
  EXPECT_TRUE(Scalar::reduce(secp256k1::group_order()).is_zero());
  EXPECT_EQ(Scalar::reduce(secp256k1::group_order() + 5), Scalar::from_u64(5));
  EXPECT_THROW(Scalar(secp256k1::group_order()), Error);
  EXPECT_THROW(FieldElement(secp256k1::field_prime()), Error);
}

TEST(PointAdd, IdentityIsNeutral) {
  EXPECT_EQ(point_add(G(), CurvePoint::identity()), G());
  EXPECT_EQ(point_add(CurvePoint::identity(), G()), G());
  EXPECT_TRUE(point_add(CurvePoint::identity(), CurvePoint::identity()).is_identity());
}

TEST(PointAdd, InversePairSumsToIdentity) {
  EXPECT_TRUE(point_add(G(), point_negate(G())).is_identity());
  EXPECT_TRUE(point_negate(CurvePoint::identity()).is_identity());
}

TEST(PointAdd, DoublingMatchesReferenceAndScalarMul) {
  const CurvePoint two_g = point_add(G(), G());
  expect_matches_reference(two_g, ref_mul_base(2));
  EXPECT_EQ(two_g, scalar_mul(Scalar::from_u64(2), G()));
  EXPECT_EQ(two_g, point_double(G()));
}

TEST(PointAdd, MatchesReferenceOnRandomPairs) {
  SeededRandom rng(11);
  for (int i = 0; i < 50; ++i) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    expect_matches_reference(point_add(scalar_mul_base(a), scalar_mul_base(b)), ref_add_multiples(a.value(), b.value()));
  }
}

TEST(ScalarMul, EdgeScalars) {
  EXPECT_TRUE(scalar_mul(Scalar::from_u64(0), G()).is_identity());
  EXPECT_EQ(scalar_mul(Scalar::from_u64(1), G()), G());
  EXPECT_TRUE(scalar_mul(Scalar::from_u64(7), CurvePoint::identity()).is_identity());
}

TEST(ScalarMul, ComplementaryScalarsCancel) {
  SeededRandom rng(12);
  for (int i = 0; i < 100; ++i) {
    const Scalar k = random_scalar(rng);
    const Scalar complement(secp256k1::group_order() - k.value());
    const CurvePoint p = scalar_mul_base(k);
    ASSERT_FALSE(p.is_identity());
    EXPECT_TRUE(point_add(p, scalar_mul_base(complement)).is_identity());
  }
}

TEST(ScalarMul, MatchesReferenceImplementation) {
  SeededRandom rng(13);
  for (int i = 0; i < 100; ++i) {
    const Scalar k = random_scalar(rng);
    expect_matches_reference(scalar_mul_base(k), ref_mul_base(k.value()));
  }
}

TEST(ScalarMul, DistributesOverScalarAddition) {
  SeededRandom rng(14);
  for (int i = 0; i < 50; ++i) {
    const CurvePoint p = scalar_mul_base(random_scalar(rng));
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    EXPECT_EQ(scalar_mul(a + b, p), point_add(scalar_mul(a, p), scalar_mul(b, p)));
  }
}

TEST(GroupLaws, RandomTriples) {
  SeededRandom rng(15);
  // Points are chained additions of random multiples so the 1000 cases stay
  // cheap: each triple costs a handful of additions rather than scalar muls.
  std::vector<CurvePoint> pool;
  pool.push_back(CurvePoint::identity());
  for (int i = 0; i < 24; ++i) pool.push_back(scalar_mul_base(random_scalar(rng)));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::mt19937_64 idx(16);
  for (int i = 0; i < 1000; ++i) {
    const CurvePoint& a = pool[pick(idx)];
    const CurvePoint& b = pool[pick(idx)];
    const CurvePoint& c = pool[pick(idx)];
    ASSERT_EQ(point_add(point_add(a, b), c), point_add(a, point_add(b, c)));
    ASSERT_EQ(point_add(a, b), point_add(b, a));
    ASSERT_EQ(point_add(a, CurvePoint::identity()), a);
    ASSERT_TRUE(point_add(a, point_negate(a)).is_identity());
    // Grow the pool so later triples include sums, doublings and negations.
    if (i % 40 == 0) {
      pool.push_back(point_add(a, b));
      pool.push_back(point_negate(c));
      pool.push_back(point_double(a));
      pick = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1);
    }
  }
}

TEST(EncodePoint, IdentityIsSingleZeroByte) {
  EXPECT_EQ(encode_point(CurvePoint::identity()), std::vector<std::uint8_t>{0x00});
}

TEST(EncodePoint, GeneratorMatchesReferenceCompressedForm) {
  const auto bytes = encode_point(G());
  ASSERT_EQ(bytes.size(), kCompressedPointSize);
  EXPECT_TRUE(bytes[0] == 0x02 || bytes[0] == 0x03);
  EXPECT_EQ(bytes, ref_compressed_mul_base(1));
  EXPECT_EQ(point_to_hex(G()), "0279be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798");
}

TEST(EncodePoint, MatchesReferenceOnRandomPoints) {
  SeededRandom rng(17);
  for (int i = 0; i < 30; ++i) {
    const Scalar k = random_scalar(rng);
    EXPECT_EQ(encode_point(scalar_mul_base(k)), ref_compressed_mul_base(k.value()));
  }
}

TEST(DecodePoint, RoundTripsRandomPointsAndIdentity) {
  SeededRandom rng(18);
  std::vector<CurvePoint> points{CurvePoint::identity(), G(), point_negate(G())};
  for (int i = 0; i < 100; ++i) points.push_back(scalar_mul_base(random_scalar(rng)));
  for (const CurvePoint& p : points) {
    EXPECT_EQ(decode_point(encode_point(p)), p);
    EXPECT_EQ(point_from_hex(point_to_hex(p)), p);
  }
}

TEST(DecodePoint, ContractErrors) {
  std::vector<std::uint8_t> bad_prefix = encode_point(G());
  bad_prefix[0] = 0x05;
  EXPECT_EQ(error_code_of([&] { decode_point(bad_prefix); }), Errc::invalid_prefix);
  EXPECT_EQ(error_code_of([] { decode_point(std::vector<std::uint8_t>{0x07}); }), Errc::invalid_prefix);

  EXPECT_EQ(error_code_of([] { decode_point(std::vector<std::uint8_t>{}); }), Errc::malformed_length);
  EXPECT_EQ(error_code_of([] { decode_point(std::vector<std::uint8_t>{0x02}); }), Errc::malformed_length);
  std::vector<std::uint8_t> too_long = encode_point(G());
  too_long.push_back(0);
  EXPECT_EQ(error_code_of([&] { decode_point(too_long); }), Errc::malformed_length);

  // An x with x^3 + 7 a non-residue; Legendre symbol computed by GMP.
  BigInt x = 1;
  for (;; ++x) {
    const BigInt rhs = (x * x * x + 7) % secp256k1::field_prime();
    if (mpz_legendre(rhs.get_mpz_t(), secp256k1::field_prime().get_mpz_t()) == -1) break;
  }
  std::vector<std::uint8_t> off_curve = to_bytes_be(x, kCompressedPointSize);
  off_curve[0] = 0x02;
  EXPECT_EQ(error_code_of([&] { decode_point(off_curve); }), Errc::not_on_curve);

  // x >= p.
  std::vector<std::uint8_t> oversized(kCompressedPointSize, 0xff);
  oversized[0] = 0x03;
  EXPECT_EQ(error_code_of([&] { decode_point(oversized); }), Errc::not_on_curve);
}

TEST(FromAffine, RejectsPointsOffTheCurve) {
  EXPECT_EQ(error_code_of([] { CurvePoint::from_affine(FieldElement(1), FieldElement(2)); }), Errc::not_on_curve);
}

TEST(PointToInt, GeneratorMatchesIndependentConcatenation) {
  const auto ref = ref_mul_base(1);
  BigInt expected;
  mpz_mul_2exp(expected.get_mpz_t(), ref.x.get_mpz_t(), 256);
  mpz_ior(expected.get_mpz_t(), expected.get_mpz_t(), ref.y.get_mpz_t());
  EXPECT_EQ(point_to_int(G()), expected);

  // Byte-level statement of the rule: big-endian x || y.
  std::vector<std::uint8_t> concat = to_bytes_be(ref.x, 32);
  const auto y_bytes = to_bytes_be(ref.y, 32);
  concat.insert(concat.end(), y_bytes.begin(), y_bytes.end());
  EXPECT_EQ(point_to_int(G()), from_bytes_be(concat));
}

TEST(PointToInt, IdentityIsRejected) {
  EXPECT_EQ(error_code_of([] { point_to_int(CurvePoint::identity()); }), Errc::identity_point);
}

TEST(PointToInt, InjectiveOnDistinctPoints) {
  std::set<std::string> seen_points;
  std::set<std::string> seen_ints;
  CurvePoint p = G();
  for (int i = 0; i < 300; ++i) {
    seen_points.insert(point_to_hex(p));
    seen_ints.insert(point_to_int(p).get_str(16));
    p = point_add(p, G());
  }
  EXPECT_EQ(seen_points.size(), 300u);
  EXPECT_EQ(seen_ints.size(), seen_points.size());
}

TEST(Field, InverseAndSquareRoot) {
  SeededRandom rng(19);
  for (int i = 0; i < 50; ++i) {
    const FieldElement a(random_below_nonzero(rng, secp256k1::field_prime()));
    EXPECT_EQ((a * a.inverse()).value(), 1);
    const auto root = a.square().sqrt();
    ASSERT_TRUE(root.has_value());
    EXPECT_TRUE(*root == a || *root == -a);
  }
  EXPECT_THROW(FieldElement().inverse(), Error);
}

TEST(HexEncoding, ScalarsArePadded64Chars) {
  const Scalar one = Scalar::from_u64(1);
  EXPECT_EQ(scalar_to_hex(one), std::string(63, '0') + "1");
  EXPECT_EQ(scalar_from_hex(scalar_to_hex(one)), one);
  EXPECT_EQ(scalar_from_hex("ff"), Scalar::from_u64(255));
  EXPECT_THROW(scalar_from_hex(std::string(65, '0')), Error);
  EXPECT_THROW(scalar_from_hex("xyz"), Error);
  EXPECT_THROW(scalar_from_hex(to_hex(secp256k1::group_order())), Error);
}
