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

#include <gtest/gtest.h>

#include "anamorphic/app/wire.hpp"
#include "anamorphic/error.hpp"
#include "reference_secp256k1.hpp"

using namespace anamorphic;
using namespace anamorphic::app;

namespace {

Errc error_code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an anamorphic::Error";
  return Errc::invalid_parameters;
}

}  // namespace

TEST(KeyFile, EccDictatorRoundTripsAndMatchesReference) {
  SeededRandom rng(11);
  const auto key = generate_key(KeyRole::dictator, "ecc", rng);
  const auto j = to_json(key);
  EXPECT_EQ(j.at("secret").get<std::string>().size(), 64u);
  const auto back = key_from_json(j);
  EXPECT_EQ(back.public_element, key.public_element);
  EXPECT_EQ(*back.secret, *key.secret);
  // OpenSSL computes sk0*G independently.
  EXPECT_EQ(key.public_element, bytes_to_hex(anamorphic::testing::ref_compressed_mul_base(*key.secret)));
}

TEST(KeyFile, ModpAliceRoundTrips) {
  SeededRandom rng(12);
  const auto key = generate_key(KeyRole::alice, "modp-toy-23", rng);
  const auto back = key_from_json(to_json(key));
  EXPECT_EQ(back.role, KeyRole::alice);
  EXPECT_EQ(back.modp_public(), modp_pow(5, *key.secret, 23));
}

TEST(KeyFile, TamperedPublicIsRejected) {
  SeededRandom rng(13);
  auto j = to_json(generate_key(KeyRole::alice, "ecc", rng));
  j["public"] = point_to_hex(secp256k1::generator());
  EXPECT_EQ(error_code_of([&] { key_from_json(j); }), Errc::invalid_parameters);
}

TEST(KeyFile, PublicOnlyCopyLoads) {
  SeededRandom rng(14);
  const auto key = generate_key(KeyRole::dictator, "ecc", rng);
  const auto j = to_json(public_only(key));
  EXPECT_FALSE(j.contains("secret"));
  const auto back = key_from_json(j);
  EXPECT_FALSE(back.secret.has_value());
  EXPECT_EQ(back.ecc_public(), key.ecc_dictator().pk);
  EXPECT_EQ(error_code_of([&] { back.ecc_dictator(); }), Errc::invalid_parameters);
}

TEST(KeyFile, BadFieldsReport) {
  EXPECT_EQ(error_code_of([] { key_from_json(json{{"role", "emperor"}, {"scheme", "ecc"}, {"public", "00"}}); }),
            Errc::invalid_parameters);
  EXPECT_EQ(error_code_of([] { key_from_json(json{{"role", "alice"}, {"scheme", "rsa"}, {"public", "00"}}); }),
            Errc::invalid_parameters);
  EXPECT_EQ(error_code_of([] { key_from_json(json{{"role", "alice"}, {"scheme", "ecc"}}); }),
            Errc::invalid_encoding);
  EXPECT_EQ(error_code_of([] { key_from_json(json::array()); }), Errc::invalid_encoding);
  // Secret zero has no key pair.
  EXPECT_EQ(error_code_of([] {
              key_from_json(json{{"role", "alice"}, {"scheme", "ecc"}, {"public", "00"}, {"secret", "00"}});
            }),
            Errc::zero_scalar);
}

TEST(Ciphertext, EccAndModpRoundTrip) {
  const AnamorphicCiphertext ecc{BigInt("123456789012345678901234567890"), secp256k1::generator()};
  const auto e = ciphertext_from_json(to_json(to_wire(ecc)));
  EXPECT_EQ(e.ecc(), ecc);

  const ModpCiphertext mp{17, 17};
  const auto m = ciphertext_from_json(to_json(to_wire(mp, "modp-toy-23")));
  EXPECT_EQ(m.scheme, "modp-toy-23");
  EXPECT_EQ(m.modp(), mp);
  EXPECT_EQ(error_code_of([&] { m.ecc(); }), Errc::invalid_parameters);
}

TEST(Ciphertext, MalformedFieldsFailEarly) {
  EXPECT_EQ(error_code_of([] { ciphertext_from_json(json{{"c0", "12"}}); }), Errc::invalid_encoding);
  EXPECT_EQ(error_code_of([] { ciphertext_from_json(json{{"c0", "-12"}, {"c1", "00"}}); }),
            Errc::invalid_encoding);
  EXPECT_EQ(error_code_of([] { ciphertext_from_json(json{{"c0", "12"}, {"c1", "05ab"}}); }),
            Errc::malformed_length);
  EXPECT_EQ(error_code_of([] { ciphertext_from_json(json{{"c0", "12"}, {"c1", "05" + std::string(64, '1')}}); }),
            Errc::invalid_prefix);
  EXPECT_EQ(error_code_of([] { ciphertext_from_json(json{{"c0", -3}, {"c1", "00"}}); }), Errc::field_out_of_range);
}

TEST(Schema, JsonRoundTrip) {
  const CovertSchema s{17, 1439, 200, {true, false, true, true}};
  const auto j = to_json(s);
  EXPECT_EQ(j.at("schema"), "v1");
  EXPECT_EQ(schema_from_json(j), s);
  auto untagged = j;
  untagged.erase("schema");
  EXPECT_EQ(schema_from_json(untagged), s);
  auto v2 = j;
  v2["schema"] = "v2";
  EXPECT_EQ(error_code_of([&] { schema_from_json(v2); }), Errc::invalid_encoding);
  auto short_flags = j;
  short_flags["flags"] = json::array({true});
  EXPECT_EQ(error_code_of([&] { schema_from_json(short_flags); }), Errc::invalid_encoding);
}

TEST(CoverText, RoundTripsPrintableText) {
  for (const std::string text : {"I love the Dictator", "x", "héllo wörld ✓", "tab\tand\nnewline"}) {
    const auto m0 = cover_text_to_int(text);
    EXPECT_EQ(int_to_cover_text(m0), text);
  }
  // Big-endian: "AB" = 0x4142.
  EXPECT_EQ(cover_text_to_int("AB"), 0x4142);
}

TEST(CoverText, SmallIntegersStayNumeric) {
  EXPECT_EQ(int_to_cover_text(6), std::nullopt);
  EXPECT_EQ(int_to_cover_text(0), std::nullopt);
  EXPECT_EQ(int_to_cover_text(0x7F), std::nullopt);
  EXPECT_EQ(int_to_cover_text(0xFF), std::nullopt);       // lone continuation byte
  EXPECT_EQ(int_to_cover_text(0xC0AF), std::nullopt);     // overlong '/'
  EXPECT_EQ(int_to_cover_text(0xEDA080), std::nullopt);   // surrogate
  EXPECT_EQ(int_to_cover_text(pow2(255)), std::nullopt);  // 32 bytes
}

TEST(CoverText, LengthLimit) {
  EXPECT_NO_THROW(cover_text_to_int(std::string(31, 'a')));
  EXPECT_EQ(error_code_of([] { cover_text_to_int(std::string(32, 'a')); }), Errc::message_out_of_range);
}

TEST(Plan, DefaultsAndRoundTrip) {
  const auto empty = plan_from_json(json::object());
  EXPECT_EQ(empty.plan.cm_values, default_cm_series());
  EXPECT_FALSE(empty.seed.has_value());

  PlanFile file;
  file.plan.schemes = {Scheme::vanilla_dlp, Scheme::eccdlp_bsgs};
  file.plan.cm_values = {9, 99};
  file.plan.repetitions = 3;
  file.plan.timeout = std::chrono::milliseconds(2500);
  file.plan.modp_group = "modp-toy-23";
  file.plan.allow_vanilla_beyond_cap = true;
  file.seed = 42;
  const auto back = plan_from_json(to_json(file));
  EXPECT_EQ(back.plan.schemes, file.plan.schemes);
  EXPECT_EQ(back.plan.cm_values, file.plan.cm_values);
  EXPECT_EQ(back.plan.repetitions, 3u);
  EXPECT_EQ(back.plan.timeout, std::chrono::milliseconds(2500));
  EXPECT_EQ(back.plan.modp_group, "modp-toy-23");
  EXPECT_TRUE(back.plan.allow_vanilla_beyond_cap);
  EXPECT_EQ(back.seed, 42u);
}

TEST(Plan, RejectsBadValues) {
  EXPECT_EQ(error_code_of([] { plan_from_json(json{{"schemes", {"rsa"}}}); }), Errc::invalid_parameters);
  EXPECT_EQ(error_code_of([] { plan_from_json(json{{"timeout_s", -1}}); }), Errc::invalid_parameters);
  EXPECT_EQ(error_code_of([] { plan_from_json(json{{"cm_values", {-5}}}); }), Errc::field_out_of_range);
  EXPECT_EQ(error_code_of([] { plan_from_json(json{{"repetitions", "many"}}); }), Errc::invalid_encoding);
}

TEST(JsonFields, IntegerReaders) {
  EXPECT_EQ(json_u64(json{{"n", 7}}, "n"), 7u);
  EXPECT_EQ(json_u64(json::parse(R"({"n": 7})"), "n"), 7u);
  EXPECT_EQ(error_code_of([] { json_u64(json{{"n", -1}}, "n"); }), Errc::field_out_of_range);
  EXPECT_EQ(json_u64(json{{"n", "18446744073709551615"}}, "n"), UINT64_MAX);
  EXPECT_EQ(error_code_of([] { json_u64(json{{"n", "18446744073709551616"}}, "n"); }), Errc::field_out_of_range);
  EXPECT_EQ(error_code_of([] { json_u64(json{{"n", 1.5}}, "n"); }), Errc::invalid_encoding);
  const json big = {{"n", "115792089237316195423570985008687907853269984665640564039457584007913129639936"}};
  EXPECT_EQ(json_decimal(big, "n"), pow2(256));
}
