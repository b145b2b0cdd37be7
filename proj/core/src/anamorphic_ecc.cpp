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

#include "anamorphic/anamorphic_ecc.hpp"

#include <string>

#include <openssl/evp.h>

#include "anamorphic/error.hpp"

namespace anamorphic {

namespace {

const EcGroup kGroup{};

std::uint64_t require_found(std::optional<std::uint64_t> cm, std::uint64_t bound) {
  if (!cm) throw Error(Errc::not_found, "no covert message in [0, " + std::to_string(bound) + "]");
  return *cm;
}

SharedSecret sha256_of_point(const CurvePoint& p) {
  const auto encoded = encode_point(p);
  SharedSecret out{};
  unsigned int len = 0;
  if (EVP_Digest(encoded.data(), encoded.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  return out;
}

}  // namespace

DictatorKeyPair DictatorKeyPair::from_secret(const Scalar& sk0) {
  if (sk0.is_zero()) throw Error(Errc::zero_scalar, "dictator secret must be non-zero");
  return {sk0, scalar_mul_base(sk0)};
}

AliceKey AliceKey::from_secret(const Scalar& t) {
  if (t.is_zero()) throw Error(Errc::zero_scalar, "alice secret must be non-zero");
  return {t, scalar_mul_base(t)};
}

DictatorKeyPair keygen_dictator(RandomSource& rng) {
  return DictatorKeyPair::from_secret(Scalar(random_below_nonzero(rng, secp256k1::group_order())));
}

AliceKey keygen_alice(RandomSource& rng) {
  return AliceKey::from_secret(Scalar(random_below_nonzero(rng, secp256k1::group_order())));
}

AnamorphicCiphertext encrypt(const CurvePoint& pk, const BigInt& m0, std::uint64_t cm, const Scalar& t,
                             unsigned covert_bits) {
  if (covert_bits > kMaxCovertBits) {
    throw Error(Errc::covert_out_of_range, "covert bound above 2^" + std::to_string(kMaxCovertBits));
  }
  if (cm >> covert_bits != 0) {
    throw Error(Errc::covert_out_of_range, "covert message must be below 2^" + std::to_string(covert_bits));
  }
  if (sgn(m0) < 0 || mpz_sizeinbase(m0.get_mpz_t(), 2) > kCoverMessageBits) {
    throw Error(Errc::message_out_of_range, "cover message must lie in [0, 2^256)");
  }
  if (t.is_zero()) throw Error(Errc::zero_scalar, "alice secret must be non-zero");
  if (pk.is_identity()) throw Error(Errc::identity_point, "public key is the identity");

  const Scalar r = Scalar::from_u64(cm) + t;
  if (r.is_zero()) throw Error(Errc::zero_nonce, "cm + t is zero mod n; choose another t");

  const CurvePoint r_g = scalar_mul_base(r);
  const CurvePoint r_y = scalar_mul(r, pk);
  return {point_to_int(r_y) + m0, r_g};
}

BigInt decrypt_dictator(const Scalar& sk0, const AnamorphicCiphertext& ct) {
  const CurvePoint y_c = scalar_mul(sk0, ct.c1);
  if (y_c.is_identity()) throw Error(Errc::identity_point, "sk0 * c1 is the identity");
  BigInt m0 = ct.c0 - point_to_int(y_c);
  if (sgn(m0) < 0) throw Error(Errc::negative_result, "c0 < Int(sk0*c1): wrong key or corrupted ciphertext");
  return m0;
}

std::uint64_t decrypt_alice(const AliceKey& key, const CurvePoint& c1, std::uint64_t bound, SearchMethod method) {
  const CurvePoint res = point_sub(c1, key.tc);
  if (method == SearchMethod::brute) return require_found(solve_brute(res, bound, kGroup), bound);
  return require_found(solve_bsgs(res, bound, kGroup), bound);
}

std::uint64_t decrypt_alice(const AliceKey& key, const CurvePoint& c1, std::uint64_t bound,
                            const BabyTable<EcGroup>& table) {
  return require_found(solve_bsgs(point_sub(c1, key.tc), bound, kGroup, table), bound);
}

std::uint64_t leak_attack(const CurvePoint& tc, const CurvePoint& c1, std::uint64_t bound) {
  return require_found(solve_bsgs(point_sub(c1, tc), bound, kGroup), bound);
}

std::uint64_t leak_attack(const CurvePoint& tc, const CurvePoint& c1, std::uint64_t bound,
                          const BabyTable<EcGroup>& table) {
  return require_found(solve_bsgs(point_sub(c1, tc), bound, kGroup, table), bound);
}

SharedSecret derive_shared_secret(const AliceKey& key, const CurvePoint& c1) {
  const CurvePoint shared = point_sub(c1, key.tc);
  if (shared.is_identity()) throw Error(Errc::identity_point, "cm = 0 yields no shared point");
  return sha256_of_point(shared);
}

SharedSecret derive_shared_secret(std::uint64_t cm) {
  if (cm == 0) throw Error(Errc::identity_point, "cm = 0 yields no shared point");
  return sha256_of_point(scalar_mul_base(Scalar::from_u64(cm)));
}

}  // namespace anamorphic
