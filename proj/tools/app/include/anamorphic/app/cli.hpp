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

// The `anamorphic` command line, as a function so tests can drive it
// without spawning processes.

#include <ostream>
#include <string>
#include <vector>

#include "anamorphic/error.hpp"

namespace anamorphic::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCrypto = 3;

/// Error codes that mean "the inputs were well-formed but the cryptography
/// says no" (wrong key, cm outside the bound, unlucky nonce).
bool is_crypto_failure(Errc code) noexcept;

/// `args` excludes the program name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anamorphic::app
