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

// Anamorphic ElGamal over secp256k1.
//
// One ciphertext, two decryptions:
//
//   r  = (cm + t) mod n        nonce carrying the covert message
//   c1 = r*G
//   c0 = Int(r*pk) + m0        Int(P) = big-endian integer of x || y
//
// The Dictator recovers m0 = c0 - Int(sk0*c1). Alice, holding t, computes
// c1 - t*G = cm*G and solves the bounded discrete log for cm.
//
// Alice's t *and* tc = t*G are secrets: anyone with tc recovers cm with the
// same bounded search (see leak_attack).

#include <array>
#include <cstdint>

#include "anamorphic/bigint.hpp"
#include "anamorphic/curve.hpp"
#include "anamorphic/dlog.hpp"
#include "anamorphic/ec_group.hpp"
#include "anamorphic/random.hpp"

namespace anamorphic {

inline constexpr unsigned kDefaultCovertBits = 30;
inline constexpr unsigned kMaxCovertBits = 34;
/// Cover messages must be below 2^256. Larger values would dominate c0 and
/// leak their own magnitude.
inline constexpr unsigned kCoverMessageBits = 256;

enum class SearchMethod { brute, bsgs };

struct DictatorKeyPair {
  Scalar sk0;
  CurvePoint pk;

  /// Throws Error(zero_scalar) for sk0 == 0.
  static DictatorKeyPair from_secret(const Scalar& sk0);
};

/// Both members are confidential.
struct AliceKey {
  Scalar t;
  CurvePoint tc;

  /// Throws Error(zero_scalar) for t == 0.
  static AliceKey from_secret(const Scalar& t);
};

struct AnamorphicCiphertext {
  BigInt c0;
  CurvePoint c1;

  friend bool operator==(const AnamorphicCiphertext&, const AnamorphicCiphertext&) = default;
};

/// Secret drawn uniformly from [1, n).
DictatorKeyPair keygen_dictator(RandomSource& rng);
AliceKey keygen_alice(RandomSource& rng);

/// Throws Error with message_out_of_range (m0 outside [0, 2^256)),
/// covert_out_of_range (cm >= 2^covert_bits, or covert_bits > 34),
/// zero_scalar (t == 0), identity_point (pk is the identity) or
/// zero_nonce (cm + t == 0 mod n; pick another t).
AnamorphicCiphertext encrypt(const CurvePoint& pk, const BigInt& m0, std::uint64_t cm, const Scalar& t,
                             unsigned covert_bits = kDefaultCovertBits);

/// c0 - Int(sk0*c1). Throws Error(negative_result) when that is negative,
/// which signals a wrong key or a corrupted ciphertext.
BigInt decrypt_dictator(const Scalar& sk0, const AnamorphicCiphertext& ct);

/// Recovers cm in [0, bound] from c1 - tc. Throws Error(not_found).
std::uint64_t decrypt_alice(const AliceKey& key, const CurvePoint& c1, std::uint64_t bound, SearchMethod method);
/// BSGS against a prebuilt table (width must cover `bound`).
std::uint64_t decrypt_alice(const AliceKey& key, const CurvePoint& c1, std::uint64_t bound,
                            const BabyTable<EcGroup>& table);

/// What an attacker holding only a leaked tc can do: the same bounded
/// search as decrypt_alice, via BSGS. Throws Error(not_found).
std::uint64_t leak_attack(const CurvePoint& tc, const CurvePoint& c1, std::uint64_t bound);
std::uint64_t leak_attack(const CurvePoint& tc, const CurvePoint& c1, std::uint64_t bound,
                          const BabyTable<EcGroup>& table);

using SharedSecret = std::array<std::uint8_t, 32>;

/// SHA-256 of the compressed encoding of c1 - tc (= cm*G).
/// Throws Error(identity_point) when cm == 0.
SharedSecret derive_shared_secret(const AliceKey& key, const CurvePoint& c1);
/// The sender's side of the same derivation, from cm directly.
SharedSecret derive_shared_secret(std::uint64_t cm);

}  // namespace anamorphic
