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

// JSON file and message formats shared by the CLI and the HTTP service.
//
// Key file:
//   {"role": "dictator"|"alice", "scheme": "ecc"|"modp-2048"|"modp-toy-23",
//    "secret": <hex>, "public": <point hex | decimal residue>}
// "secret" may be omitted for a public-only copy of a Dictator key.
//
// Ciphertext:
//   {"scheme": ..., "c0": <decimal>, "c1": <point hex | decimal residue>}
//
// Covert schema:
//   {"action": n, "time_minutes": n, "location": n, "flags": [b, b, b, b],
//    "schema": "v1"}

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "anamorphic/anamorphic_ecc.hpp"
#include "anamorphic/bench.hpp"
#include "anamorphic/bigint.hpp"
#include "anamorphic/covert_codec.hpp"
#include "anamorphic/modp.hpp"
#include "anamorphic/random.hpp"

namespace anamorphic::app {

using nlohmann::json;

enum class KeyRole { dictator, alice };

std::string_view to_string(KeyRole role) noexcept;
/// Throws Error(invalid_parameters).
KeyRole parse_role(std::string_view text);

inline constexpr std::string_view kEccScheme = "ecc";

/// "ecc", "modp-2048" or "modp-toy-23"; throws Error(invalid_parameters).
std::string validate_scheme(std::string_view scheme);
bool is_ecc(std::string_view scheme) noexcept;

struct KeyFile {
  KeyRole role = KeyRole::dictator;
  std::string scheme{kEccScheme};
  std::optional<BigInt> secret;
  /// ECC: point hex. mod-p: decimal residue.
  std::string public_element;

  /// Fails with Error(invalid_parameters) if this is a public-only file.
  const BigInt& require_secret() const;

  DictatorKeyPair ecc_dictator() const;
  AliceKey ecc_alice() const;
  CurvePoint ecc_public() const;
  BigInt modp_public() const;
};

/// Public element for a secret: sk0*G / t*G, or g^secret mod p, in wire form.
/// Throws Error(zero_scalar | out_of_range) for secrets outside the range.
std::string public_element_for(KeyRole role, std::string_view scheme, const BigInt& secret);

/// Fresh key for `role` under `scheme`.
KeyFile generate_key(KeyRole role, std::string_view scheme, RandomSource& rng);

json to_json(const KeyFile& key);
/// Validates every field and checks that the public element is recomputable
/// from the secret. Throws Error(invalid_encoding | invalid_parameters).
KeyFile key_from_json(const json& j);

/// Copy without the secret.
KeyFile public_only(const KeyFile& key);

struct WireCiphertext {
  std::string scheme{kEccScheme};
  BigInt c0;
  /// ECC: point hex. mod-p: decimal residue.
  std::string c1;

  AnamorphicCiphertext ecc() const;
  ModpCiphertext modp() const;
};

WireCiphertext to_wire(const AnamorphicCiphertext& ct);
WireCiphertext to_wire(const ModpCiphertext& ct, std::string_view scheme);

json to_json(const WireCiphertext& ct);
WireCiphertext ciphertext_from_json(const json& j);

json to_json(const CovertSchema& schema);
/// Accepts a missing "schema" tag or "v1". Range errors surface from
/// encode_schema when the schema is used.
CovertSchema schema_from_json(const json& j);

/// Benchmark plan:
///   {"schemes": [...], "cm_values": [...], "repetitions": n, "timeout_s": n,
///    "modp_group": "...", "allow_vanilla_beyond_cap": b, "seed": n}
/// Every field is optional; missing ones keep BenchPlan defaults.
struct PlanFile {
  BenchPlan plan;
  std::optional<std::uint64_t> seed;
};

json to_json(const PlanFile& plan);
PlanFile plan_from_json(const json& j);

/// Cover text as an integer: its UTF-8 bytes read big-endian. At most 31
/// bytes; longer text throws Error(message_out_of_range).
inline constexpr std::size_t kMaxCoverTextBytes = 31;
BigInt cover_text_to_int(std::string_view text);

/// The inverse when m0 spells printable UTF-8 text (no control characters
/// other than tab and newlines); nullopt otherwise, including for m0 = 0.
std::optional<std::string> int_to_cover_text(const BigInt& m0);

/// Strict decimal/hex field readers used on request bodies. Accept JSON
/// strings or, for integers, unsigned JSON numbers.
BigInt json_decimal(const json& j, std::string_view field);
std::uint64_t json_u64(const json& j, std::string_view field);

}  // namespace anamorphic::app
