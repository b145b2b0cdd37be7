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

#include "anamorphic/app/wire.hpp"

#include <limits>
#include <vector>

#include "anamorphic/error.hpp"

namespace anamorphic::app {
namespace {

[[noreturn]] void bad(std::string message) { throw Error(Errc::invalid_encoding, std::move(message)); }

const json& field(const json& j, std::string_view name) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) bad("missing field '" + std::string(name) + "'");
  return *it;
}

std::string string_field(const json& j, std::string_view name) {
  const auto& v = field(j, name);
  if (!v.is_string()) bad("field '" + std::string(name) + "' must be a string");
  return v.get<std::string>();
}

std::uint32_t u32_field(const json& j, std::string_view name) {
  const auto v = json_u64(j, name);
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::field_out_of_range, "field '" + std::string(name) + "' too large");
  }
  return static_cast<std::uint32_t>(v);
}

std::size_t secret_hex_width(std::string_view scheme) {
  if (is_ecc(scheme)) return 64;
  return byte_length(ModpGroupParams::by_name(scheme).q) * 2;
}

}  // namespace

std::string public_element_for(KeyRole role, std::string_view scheme, const BigInt& secret) {
  if (is_ecc(scheme)) {
    if (role == KeyRole::dictator) return point_to_hex(DictatorKeyPair::from_secret(Scalar(secret)).pk);
    return point_to_hex(AliceKey::from_secret(Scalar(secret)).tc);
  }
  const auto& params = ModpGroupParams::by_name(scheme);
  return to_decimal(modp_keypair_from_secret(params, secret).pk);
}

namespace {

// UTF-8 decoder that rejects overlong forms, surrogates and anything
// past U+10FFFF. Returns false on the first bad sequence or on a control
// character other than \t \n \r.
bool printable_utf8(const std::vector<std::uint8_t>& bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    const std::uint8_t b = bytes[i];
    std::uint32_t cp;
    std::size_t extra;
    if (b < 0x80) {
      cp = b;
      extra = 0;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      extra = 1;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      extra = 2;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= bytes.size()) return false;  // truncated
    for (std::size_t k = 1; k <= extra; ++k) {
      const std::uint8_t c = bytes[i + k];
      if ((c & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    if (cp < 0x20 && cp != '\t' && cp != '\n' && cp != '\r') return false;
    if (cp >= 0x7F && cp < 0xA0) return false;  // DEL and C1 controls
    i += extra + 1;
  }
  return true;
}

}  // namespace

std::string_view to_string(KeyRole role) noexcept { return role == KeyRole::dictator ? "dictator" : "alice"; }

KeyRole parse_role(std::string_view text) {
  if (text == "dictator") return KeyRole::dictator;
  if (text == "alice") return KeyRole::alice;
  throw Error(Errc::invalid_parameters, "unknown role '" + std::string(text) + "' (dictator|alice)");
}

bool is_ecc(std::string_view scheme) noexcept { return scheme == kEccScheme; }

std::string validate_scheme(std::string_view scheme) {
  if (is_ecc(scheme)) return std::string(scheme);
  return ModpGroupParams::by_name(scheme).name;
}

const BigInt& KeyFile::require_secret() const {
  if (!secret) throw Error(Errc::invalid_parameters, "key file has no secret");
  return *secret;
}

DictatorKeyPair KeyFile::ecc_dictator() const {
  if (!is_ecc(scheme) || role != KeyRole::dictator) throw Error(Errc::invalid_parameters, "not an ECC dictator key");
  return DictatorKeyPair::from_secret(Scalar(require_secret()));
}

AliceKey KeyFile::ecc_alice() const {
  if (!is_ecc(scheme) || role != KeyRole::alice) throw Error(Errc::invalid_parameters, "not an ECC alice key");
  return AliceKey::from_secret(Scalar(require_secret()));
}

CurvePoint KeyFile::ecc_public() const {
  if (!is_ecc(scheme)) throw Error(Errc::invalid_parameters, "not an ECC key");
  return point_from_hex(public_element);
}

BigInt KeyFile::modp_public() const {
  if (is_ecc(scheme)) throw Error(Errc::invalid_parameters, "not a mod-p key");
  return parse_decimal(public_element);
}

KeyFile generate_key(KeyRole role, std::string_view scheme, RandomSource& rng) {
  KeyFile key;
  key.role = role;
  key.scheme = validate_scheme(scheme);
  if (is_ecc(scheme)) {
    key.secret = role == KeyRole::dictator ? keygen_dictator(rng).sk0.value() : keygen_alice(rng).t.value();
  } else {
    key.secret = modp_keygen(ModpGroupParams::by_name(scheme), rng).sk0;
  }
  key.public_element = public_element_for(role, key.scheme, *key.secret);
  return key;
}

json to_json(const KeyFile& key) {
  json j = {{"role", to_string(key.role)}, {"scheme", key.scheme}, {"public", key.public_element}};
  if (key.secret) j["secret"] = to_hex(*key.secret, secret_hex_width(key.scheme));
  return j;
}

KeyFile key_from_json(const json& j) {
  KeyFile key;
  key.role = parse_role(string_field(j, "role"));
  key.scheme = validate_scheme(string_field(j, "scheme"));
  key.public_element = string_field(j, "public");
  if (j.contains("secret")) {
    key.secret = parse_hex(string_field(j, "secret"));
    if (public_element_for(key.role, key.scheme, *key.secret) != key.public_element) {
      throw Error(Errc::invalid_parameters, "public element does not match secret");
    }
  } else if (is_ecc(key.scheme)) {
    (void)point_from_hex(key.public_element);
  } else {
    const auto& params = ModpGroupParams::by_name(key.scheme);
    const BigInt pk = parse_decimal(key.public_element);
    if (pk < 1 || pk >= params.p) throw Error(Errc::invalid_parameters, "public residue outside [1, p)");
  }
  return key;
}

KeyFile public_only(const KeyFile& key) {
  KeyFile copy = key;
  copy.secret.reset();
  return copy;
}

AnamorphicCiphertext WireCiphertext::ecc() const {
  if (!is_ecc(scheme)) throw Error(Errc::invalid_parameters, "not an ECC ciphertext");
  return {c0, point_from_hex(c1)};
}

ModpCiphertext WireCiphertext::modp() const {
  if (is_ecc(scheme)) throw Error(Errc::invalid_parameters, "not a mod-p ciphertext");
  return {c0, parse_decimal(c1)};
}

WireCiphertext to_wire(const AnamorphicCiphertext& ct) {
  return {std::string(kEccScheme), ct.c0, point_to_hex(ct.c1)};
}

WireCiphertext to_wire(const ModpCiphertext& ct, std::string_view scheme) {
  return {validate_scheme(scheme), ct.c0, to_decimal(ct.c1)};
}

json to_json(const WireCiphertext& ct) {
  return {{"scheme", ct.scheme}, {"c0", to_decimal(ct.c0)}, {"c1", ct.c1}};
}

WireCiphertext ciphertext_from_json(const json& j) {
  WireCiphertext ct;
  ct.scheme = j.is_object() && j.contains("scheme") ? validate_scheme(string_field(j, "scheme")) : std::string(kEccScheme);
  ct.c0 = json_decimal(j, "c0");
  ct.c1 = string_field(j, "c1");
  // Parse once so malformed c1 fails here rather than deep in decryption.
  if (is_ecc(ct.scheme)) {
    (void)point_from_hex(ct.c1);
  } else {
    (void)parse_decimal(ct.c1);
  }
  return ct;
}

json to_json(const CovertSchema& schema) {
  return {{"action", schema.action},
          {"time_minutes", schema.time_minutes},
          {"location", schema.location},
          {"flags", json::array({schema.flags[0], schema.flags[1], schema.flags[2], schema.flags[3]})},
          {"schema", kSchemaVersion}};
}

CovertSchema schema_from_json(const json& j) {
  CovertSchema s;
  if (j.is_object() && j.contains("schema") && string_field(j, "schema") != kSchemaVersion) {
    bad("unsupported schema version");
  }
  s.action = u32_field(j, "action");
  s.time_minutes = u32_field(j, "time_minutes");
  s.location = u32_field(j, "location");
  const auto& flags = field(j, "flags");
  if (!flags.is_array() || flags.size() != s.flags.size()) bad("'flags' must be an array of 4 booleans");
  for (std::size_t i = 0; i < s.flags.size(); ++i) {
    if (!flags[i].is_boolean()) bad("'flags' must be an array of 4 booleans");
    s.flags[i] = flags[i].get<bool>();
  }
  return s;
}

BigInt cover_text_to_int(std::string_view text) {
  if (text.size() > kMaxCoverTextBytes) {
    throw Error(Errc::message_out_of_range,
                "cover text is " + std::to_string(text.size()) + " bytes; at most 31 fit");
  }
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  return from_bytes_be(bytes);
}

std::optional<std::string> int_to_cover_text(const BigInt& m0) {
  if (sgn(m0) <= 0 || byte_length(m0) > kMaxCoverTextBytes) return std::nullopt;
  const auto bytes = to_bytes_be(m0);
  if (!printable_utf8(bytes)) return std::nullopt;
  return std::string(bytes.begin(), bytes.end());
}

json to_json(const PlanFile& file) {
  json schemes = json::array();
  for (const auto s : file.plan.schemes) schemes.push_back(to_string(s));
  json j = {{"schemes", schemes},
            {"cm_values", file.plan.cm_values},
            {"repetitions", file.plan.repetitions},
            {"timeout_s", file.plan.timeout.count() / 1000.0},
            {"modp_group", file.plan.modp_group},
            {"allow_vanilla_beyond_cap", file.plan.allow_vanilla_beyond_cap}};
  if (file.seed) j["seed"] = *file.seed;
  return j;
}

PlanFile plan_from_json(const json& j) {
  if (!j.is_object()) bad("plan must be a JSON object");
  PlanFile file;
  auto& plan = file.plan;
  if (j.contains("schemes")) {
    const auto& arr = j.at("schemes");
    if (!arr.is_array()) bad("'schemes' must be an array");
    plan.schemes.clear();
    for (const auto& s : arr) {
      if (!s.is_string()) bad("'schemes' entries must be strings");
      plan.schemes.push_back(parse_scheme(s.get<std::string>()));
    }
  }
  if (j.contains("cm_values")) {
    const auto& arr = j.at("cm_values");
    if (!arr.is_array()) bad("'cm_values' must be an array");
    plan.cm_values.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      plan.cm_values.push_back(json_u64(json{{"cm", arr[i]}}, "cm"));
    }
  }
  if (j.contains("repetitions")) {
    const auto reps = json_u64(j, "repetitions");
    if (reps > 1'000'000) throw Error(Errc::invalid_parameters, "repetitions too large");
    plan.repetitions = static_cast<unsigned>(reps);
  }
  if (j.contains("timeout_s")) {
    const auto& t = j.at("timeout_s");
    if (!t.is_number()) bad("'timeout_s' must be a number");
    const double seconds = t.get<double>();
    if (!(seconds > 0) || seconds > 1e7) throw Error(Errc::invalid_parameters, "timeout_s must be in (0, 1e7]");
    plan.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
  }
  if (j.contains("modp_group")) plan.modp_group = ModpGroupParams::by_name(string_field(j, "modp_group")).name;
  if (j.contains("allow_vanilla_beyond_cap")) {
    if (!j.at("allow_vanilla_beyond_cap").is_boolean()) bad("'allow_vanilla_beyond_cap' must be a boolean");
    plan.allow_vanilla_beyond_cap = j.at("allow_vanilla_beyond_cap").get<bool>();
  }
  if (j.contains("seed")) file.seed = json_u64(j, "seed");
  return file;
}

BigInt json_decimal(const json& j, std::string_view name) {
  const auto& v = field(j, name);
  if (v.is_number_integer()) return BigInt(std::to_string(json_u64(j, name)));
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  bad("field '" + std::string(name) + "' must be a decimal string or unsigned integer");
}

std::uint64_t json_u64(const json& j, std::string_view name) {
  const auto& v = field(j, name);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    // Non-negative literals built in C++ are stored signed.
    if (v.get<std::int64_t>() < 0) {
      throw Error(Errc::field_out_of_range, "field '" + std::string(name) + "' must not be negative");
    }
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const BigInt big = parse_decimal(v.get<std::string>());
    if (big > BigInt(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
      throw Error(Errc::field_out_of_range, "field '" + std::string(name) + "' exceeds 64 bits");
    }
    return std::stoull(v.get<std::string>());
  }
  bad("field '" + std::string(name) + "' must be an unsigned integer");
}

}  // namespace anamorphic::app
