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

#include "anamorphic/app/api.hpp"

#include <charconv>
#include <optional>

#include <httplib.h>

#include "anamorphic/app/cli.hpp"
#include "anamorphic/app/wire.hpp"
#include "anamorphic/dlog.hpp"
#include "anamorphic/ec_group.hpp"

namespace anamorphic::app {
namespace {

[[noreturn]] void bad(std::string message) { throw Error(Errc::invalid_parameters, std::move(message)); }

std::string string_field(const json& req, std::string_view name) {
  const auto it = req.find(name);
  if (it == req.end()) bad("missing field '" + std::string(name) + "'");
  if (!it->is_string()) bad("field '" + std::string(name) + "' must be a string");
  return it->get<std::string>();
}

std::string scheme_of(const json& req) {
  return req.contains("scheme") ? validate_scheme(string_field(req, "scheme")) : std::string(kEccScheme);
}

bool bool_field(const json& req, std::string_view name, bool fallback) {
  const auto it = req.find(name);
  if (it == req.end()) return fallback;
  if (!it->is_boolean()) bad("field '" + std::string(name) + "' must be a boolean");
  return it->get<bool>();
}

ApiResponse json_response(int status, const json& body) { return {status, "application/json", body.dump()}; }

ApiResponse error_response(int status, std::string_view code, std::string_view message) {
  return json_response(status, json{{"code", code}, {"message", message}});
}

ApiResponse map_error(const Error& e) {
  if (e.code() == Errc::not_found) return error_response(422, "not_found_cm", e.what());
  if (is_crypto_failure(e.code())) return error_response(422, "crypto_failure", e.what());
  return error_response(400, "bad_request", std::string(to_string(e.code())) + ": " + e.what());
}

}  // namespace

struct ApiService::Tables {
  EcGroup ec;
  ModpGroup modp{ModpGroupParams::modp2048()};
  std::optional<BabyTable<EcGroup>> ec_table;
  std::optional<BabyTable<ModpGroup>> modp_table;
};

ApiService::ApiService(ApiOptions options) : options_(options) {
  auto tables = std::make_unique<Tables>();
  tables->ec_table.emplace(build_baby_table(options_.precompute_bound, tables->ec));
  if (options_.precompute_modp) tables->modp_table.emplace(build_baby_table(options_.precompute_bound, tables->modp));
  tables_ = std::move(tables);
}

ApiService::~ApiService() = default;

json ApiService::keygen(const json& req) const {
  const auto role = parse_role(string_field(req, "role"));
  const auto scheme = scheme_of(req);
  if (req.contains("secret")) {
    // Echo mode: the public element for a pasted secret.
    KeyFile key{role, scheme, parse_hex(string_field(req, "secret")), {}};
    key.public_element = public_element_for(role, scheme, *key.secret);
    return to_json(key);
  }
  std::unique_ptr<RandomSource> rng;
  if (req.contains("seed")) {
    rng = std::make_unique<SeededRandom>(json_u64(req, "seed"));
  } else {
    rng = std::make_unique<SystemRandom>();
  }
  return to_json(generate_key(role, scheme, *rng));
}

json ApiService::encrypt(const json& req) const {
  const auto scheme = scheme_of(req);
  const bool has_text = req.contains("m0_text");
  const bool has_int = req.contains("m0_int");
  if (has_text == has_int) bad("exactly one of m0_text or m0_int is required");
  const bool has_cm = req.contains("cm");
  const bool has_schema = req.contains("schema");
  if (has_cm == has_schema) bad("exactly one of cm or schema is required");

  const BigInt m0 = has_text ? cover_text_to_int(string_field(req, "m0_text")) : json_decimal(req, "m0_int");
  const std::uint64_t cm = has_cm ? json_u64(req, "cm") : encode_schema(schema_from_json(req.at("schema")));
  unsigned covert_bits = kDefaultCovertBits;
  if (req.contains("covert_bits")) {
    const auto bits = json_u64(req, "covert_bits");
    if (bits > kMaxCovertBits) throw Error(Errc::covert_out_of_range, "covert_bits is at most 34");
    covert_bits = static_cast<unsigned>(bits);
  }
  const auto t = parse_hex(string_field(req, "t"));

  if (is_ecc(scheme)) {
    const auto pk = point_from_hex(string_field(req, "pk"));
    if (pk.is_identity()) bad("pk is the identity");
    const auto ct = anamorphic::encrypt(pk, m0, cm, Scalar(t), covert_bits);
    const auto wire = to_wire(ct);
    return {{"scheme", scheme}, {"c0", to_decimal(wire.c0)}, {"c1", wire.c1}};
  }
  const auto& params = ModpGroupParams::by_name(scheme);
  const auto ct = modp_encrypt(params, parse_decimal(string_field(req, "pk")), m0, cm, t, covert_bits);
  return {{"scheme", scheme}, {"c0", to_decimal(ct.c0)}, {"c1", to_decimal(ct.c1)}};
}

json ApiService::decrypt_dictator(const json& req) const {
  const auto scheme = scheme_of(req);
  const auto sk0 = parse_hex(string_field(req, "sk0"));
  json ct_fields = {{"scheme", scheme}};
  for (const char* name : {"c0", "c1"}) {
    if (req.contains(name)) ct_fields[name] = req.at(name);
  }
  const auto ct = ciphertext_from_json(ct_fields);
  BigInt m0;
  if (is_ecc(scheme)) {
    m0 = anamorphic::decrypt_dictator(DictatorKeyPair::from_secret(Scalar(sk0)).sk0, ct.ecc());
  } else {
    m0 = modp_decrypt_dictator(ModpGroupParams::by_name(scheme), sk0, ct.modp());
  }
  json out = {{"m0", to_decimal(m0)}, {"m0_text", nullptr}};
  if (const auto text = int_to_cover_text(m0)) out["m0_text"] = *text;
  return out;
}

json ApiService::decrypt_alice(const json& req) const {
  const auto scheme = scheme_of(req);
  const auto t = parse_hex(string_field(req, "t"));
  const std::uint64_t bound = req.contains("bound") ? json_u64(req, "bound") : std::uint64_t{1} << kDefaultCovertBits;
  if (bound > options_.max_bound) bad("bound exceeds " + std::to_string(options_.max_bound));
  SearchMethod method = SearchMethod::bsgs;
  if (req.contains("method")) {
    const auto m = string_field(req, "method");
    if (m == "brute") {
      method = SearchMethod::brute;
    } else if (m != "bsgs") {
      bad("method is bsgs or brute");
    }
  }
  if (method == SearchMethod::brute && bound > options_.max_brute_bound) {
    bad("brute search is limited to bound <= " + std::to_string(options_.max_brute_bound));
  }
  const bool decode = bool_field(req, "decode_schema", false);
  const auto c1_text = string_field(req, "c1");

  // A prebuilt table serves any bound up to its own.
  const bool use_table = method == SearchMethod::bsgs && bound <= options_.precompute_bound;
  std::uint64_t cm;
  if (is_ecc(scheme)) {
    const auto key = AliceKey::from_secret(Scalar(t));
    const auto c1 = point_from_hex(c1_text);
    cm = use_table ? anamorphic::decrypt_alice(key, c1, bound, *tables_->ec_table)
                   : anamorphic::decrypt_alice(key, c1, bound, method);
  } else {
    const auto& params = ModpGroupParams::by_name(scheme);
    const auto c1 = parse_decimal(c1_text);
    if (use_table && tables_->modp_table && params.name == tables_->modp.params().name) {
      cm = modp_decrypt_alice(params, t, c1, bound, *tables_->modp_table);
    } else {
      cm = modp_decrypt_alice(params, t, c1, bound, method);
    }
  }
  json out = {{"cm", cm}};
  if (decode) {
    try {
      out["schema"] = to_json(decode_schema(cm));
    } catch (const Error& e) {
      out["schema"] = nullptr;
      out["schema_error"] = e.what();
    }
  }
  return out;
}

ApiResponse ApiService::handle(std::string_view method, std::string_view path, std::string_view body) const {
  if (path == "/api/docs") {
    if (method != "GET") return error_response(405, "bad_request", "use GET");
    return {200, "text/markdown; charset=utf-8", docs()};
  }
  using Handler = json (ApiService::*)(const json&) const;
  Handler handler = nullptr;
  if (path == "/api/keygen") handler = &ApiService::keygen;
  if (path == "/api/encrypt") handler = &ApiService::encrypt;
  if (path == "/api/decrypt-dictator") handler = &ApiService::decrypt_dictator;
  if (path == "/api/decrypt-alice") handler = &ApiService::decrypt_alice;
  if (!handler) return error_response(404, "bad_request", "no such endpoint: " + std::string(path));
  if (method != "POST") return error_response(405, "bad_request", "use POST");

  try {
    const auto req = json::parse(body);
    if (!req.is_object()) return error_response(400, "bad_request", "request body must be a JSON object");
    return json_response(200, (this->*handler)(req));
  } catch (const json::parse_error& e) {
    return error_response(400, "bad_request", std::string("malformed JSON: ") + e.what());
  } catch (const Error& e) {
    return map_error(e);
  } catch (const std::exception& e) {
    return error_response(400, "bad_request", e.what());
  }
}

std::string ApiService::docs() {
  return R"(# Anamorphic API

All bodies are JSON. Scalars (`sk0`, `t`, `secret`) are big-endian hex.
ECC points (`pk`, `c1`, `public`) are compressed SEC1 hex; `00` is the
identity. For `scheme` = `modp-2048` or `modp-toy-23`, `pk`, `c1` and
`public` are decimal residues instead. `scheme` defaults to `ecc`.
`c0` is always a decimal string.

## POST /api/keygen
Request: `{"role": "dictator"|"alice", "scheme"?, "seed"?, "secret"?}`
Response: `{"role", "scheme", "secret", "public"}`
`seed` makes the result reproducible (testing only). Passing `secret`
returns its public element instead of generating a key.
Nothing is stored server-side.

## POST /api/encrypt
Request: `{"pk", "t", "m0_text" | "m0_int", "cm" | "schema", "scheme"?, "covert_bits"?}`
Response: `{"scheme", "c0", "c1"}`
`m0_text` is at most 31 UTF-8 bytes. `m0_int` is a decimal string or
integer below 2^256. `cm` must be below 2^covert_bits (default 30, max 34).
`schema` is `{"action", "time_minutes", "location", "flags": [b,b,b,b]}`.

## POST /api/decrypt-dictator
Request: `{"sk0", "c0", "c1", "scheme"?}`
Response: `{"m0": "<decimal>", "m0_text": "<text>" | null}`
`m0_text` is set when m0 spells printable UTF-8.

## POST /api/decrypt-alice
Request: `{"t", "c1", "bound"?, "method"?, "decode_schema"?, "scheme"?}`
Response: `{"cm": n, "schema"?: {...} | null, "schema_error"?}`
`bound` defaults to 2^30 and is capped at 2^34. `method` is `bsgs`
(default) or `brute`; brute search is capped at bound 2^20.

## Errors
`{"code": "bad_request" | "crypto_failure" | "not_found_cm", "message"}`

- 400 `bad_request`: malformed JSON, missing fields, values out of range.
- 422 `crypto_failure`: wrong key (negative result), identity point,
  degenerate nonce.
- 422 `not_found_cm`: no covert integer within `bound`.
)";
}

void mount(httplib::Server& server, const ApiService& service) {
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const auto out = service.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  for (const char* path : {"/api/keygen", "/api/encrypt", "/api/decrypt-dictator", "/api/decrypt-alice"}) {
    server.Post(path, forward);
  }
  server.Get("/api/docs", forward);
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    const char* code = res.status == 404 ? "no such endpoint" : "request failed";
    res.set_content(json{{"code", "bad_request"}, {"message", std::string(code) + ": " + req.path}}.dump(),
                    "application/json");
  });
}

std::pair<std::string, int> parse_listen_address(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0) bad("listen address must be host:port");
  const auto port_text = text.substr(colon + 1);
  int port = 0;
  const auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (ec != std::errc() || ptr != port_text.data() + port_text.size() || port < 0 || port > 65535) {
    bad("invalid port in listen address");
  }
  return {std::string(text.substr(0, colon)), port};
}

}  // namespace anamorphic::app
