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

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "anamorphic/app/api.hpp"
#include "anamorphic/error.hpp"

namespace {

constexpr const char* kDefaultListen = "127.0.0.1:8080";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anamorphic encryption HTTP service", "anamorphic-server"};
  // Flag beats env beats default. Loopback unless told otherwise.
  std::string listen = kDefaultListen;
  if (const char* env = std::getenv("ANAMORPHIC_LISTEN"); env && *env) listen = env;
  app.add_option("--listen", listen, "host:port (env: ANAMORPHIC_LISTEN)")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::pair<std::string, int> addr;
  try {
    addr = anamorphic::app::parse_listen_address(listen);
  } catch (const anamorphic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const anamorphic::app::ApiService service;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::cerr << "baby tables ready in " << ms.count() << " ms\n";

  httplib::Server server;
  anamorphic::app::mount(server, service);
  std::cerr << "listening on " << addr.first << ":" << addr.second << "\n";
  if (!server.listen(addr.first, addr.second)) {
    std::cerr << "error: cannot listen on " << listen << "\n";
    return 1;
  }
  return 0;
}
