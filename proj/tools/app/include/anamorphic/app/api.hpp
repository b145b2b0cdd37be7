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

// JSON-over-HTTP facade. ApiService is transport-free (request in, response
// out) so it can be tested directly; mount() wires it into cpp-httplib.
//
// Endpoints:
//   POST /api/keygen            {role, scheme?, seed?, secret?}
//   POST /api/encrypt           {pk, t, m0_text|m0_int, cm|schema, scheme?, covert_bits?}
//   POST /api/decrypt-dictator  {sk0, c0, c1, scheme?}
//   POST /api/decrypt-alice     {t, c1, bound?, method?, decode_schema?, scheme?}
//   GET  /api/docs
// Errors: {"code": "bad_request"|"crypto_failure"|"not_found_cm", "message": ...}

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

namespace httplib {
class Server;
}

namespace anamorphic::app {

struct ApiOptions {
  /// Baby tables for this bound are built once, at construction.
  std::uint64_t precompute_bound = std::uint64_t{1} << 30;
  /// Also precompute for modp-2048 (the toy group needs no table).
  bool precompute_modp = true;
  /// Requests above these bounds are rejected with 400.
  std::uint64_t max_bound = std::uint64_t{1} << 34;
  std::uint64_t max_brute_bound = std::uint64_t{1} << 20;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

class ApiService {
 public:
  explicit ApiService(ApiOptions options = {});
  ~ApiService();
  ApiService(const ApiService&) = delete;
  ApiService& operator=(const ApiService&) = delete;

  /// Dispatch by method and path. Thread-safe: handlers only read the
  /// precomputed tables.
  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body) const;

  const ApiOptions& options() const noexcept { return options_; }

  /// Markdown reference served at /api/docs.
  static std::string docs();

 private:
  struct Tables;

  nlohmann::json keygen(const nlohmann::json& req) const;
  nlohmann::json encrypt(const nlohmann::json& req) const;
  nlohmann::json decrypt_dictator(const nlohmann::json& req) const;
  nlohmann::json decrypt_alice(const nlohmann::json& req) const;

  ApiOptions options_;
  std::unique_ptr<const Tables> tables_;
};

/// Registers every endpoint (and a JSON 404) on `server`. `service` must
/// outlive the server.
void mount(httplib::Server& server, const ApiService& service);

/// "host:port" -> (host, port). Throws Error(invalid_parameters).
std::pair<std::string, int> parse_listen_address(std::string_view text);

}  // namespace anamorphic::app
