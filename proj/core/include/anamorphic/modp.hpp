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

// The same anamorphic construction in a multiplicative group mod p:
//
//   r  = (cm + t) mod q
//   c1 = g^r mod p
//   c0 = (pk^r mod p) + m0          plain integer addition
//
// Dictator: m0 = c0 - (c1^sk0 mod p). Alice: c1 * (g^t)^-1 = g^cm, then a
// bounded discrete log.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "anamorphic/anamorphic_ecc.hpp"
#include "anamorphic/bigint.hpp"
#include "anamorphic/dlog.hpp"
#include "anamorphic/random.hpp"

namespace anamorphic {

struct ModpGroupParams {
  std::string name;
  BigInt p;
  BigInt g;
  /// Order of g.
  BigInt q;

  /// p = 23, g = 5, q = 22.
  static const ModpGroupParams& toy23();
  /// 2048-bit MODP group of RFC 3526 (group 14): g = 2, q = (p - 1) / 2.
  static const ModpGroupParams& modp2048();
  /// "modp-toy-23" or "modp-2048". Throws Error(invalid_parameters).
  static const ModpGroupParams& by_name(std::string_view name);

  /// Checks g != 1, 1 < g < p and g^q == 1 (mod p).
  /// Throws Error(invalid_parameters) otherwise.
  void validate() const;

  std::size_t element_bytes() const { return byte_length(p); }
};

/// (Z/pZ)^* restricted to <g>. Keys are fixed-width big-endian residues.
class ModpGroup {
 public:
  using Element = BigInt;

  explicit ModpGroup(const ModpGroupParams& params) : params_(&params), width_(params.element_bytes()) {}

  Element identity() const { return 1; }
  const Element& generator() const { return params_->g; }
  Element combine(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  std::string key(const Element& a) const;

  const ModpGroupParams& params() const { return *params_; }

 private:
  const ModpGroupParams* params_;
  std::size_t width_;
};

struct ModpKeyPair {
  BigInt sk0;
  BigInt pk;
};

struct ModpCiphertext {
  BigInt c0;
  BigInt c1;

  friend bool operator==(const ModpCiphertext&, const ModpCiphertext&) = default;
};

BigInt modp_pow(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

/// sk0 uniform in [1, q); a zero draw is resampled.
ModpKeyPair modp_keygen(const ModpGroupParams& params, RandomSource& rng);
/// Throws Error(zero_scalar) unless 1 <= sk0 < q.
ModpKeyPair modp_keypair_from_secret(const ModpGroupParams& params, const BigInt& sk0);

/// Throws Error with covert_out_of_range, message_out_of_range,
/// zero_scalar (t outside [1, q)), invalid_parameters (pk outside [1, p))
/// or zero_nonce.
ModpCiphertext modp_encrypt(const ModpGroupParams& params, const BigInt& pk, const BigInt& m0, std::uint64_t cm,
                            const BigInt& t, unsigned covert_bits = kDefaultCovertBits);

/// Throws Error(negative_result).
BigInt modp_decrypt_dictator(const ModpGroupParams& params, const BigInt& sk0, const ModpCiphertext& ct);

/// Throws Error(not_found).
std::uint64_t modp_decrypt_alice(const ModpGroupParams& params, const BigInt& t, const BigInt& c1,
                                 std::uint64_t bound, SearchMethod method);
std::uint64_t modp_decrypt_alice(const ModpGroupParams& params, const BigInt& t, const BigInt& c1,
                                 std::uint64_t bound, const BabyTable<ModpGroup>& table);

}  // namespace anamorphic
