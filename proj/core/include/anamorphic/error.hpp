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

#include <stdexcept>
#include <string>
#include <string_view>

namespace anamorphic {

/// Failure categories raised by the library. Each maps to one contract
/// violation or cryptographic failure named in the module docs.
enum class Errc {
  // curve-core
  malformed_length,
  invalid_prefix,
  not_on_curve,
  identity_point,
  invalid_encoding,
  // scheme
  zero_scalar,
  zero_nonce,
  covert_out_of_range,
  message_out_of_range,
  negative_result,
  not_found,
  invalid_parameters,
  // dlog-solver
  capacity,
  // covert-codec
  field_out_of_range,
  out_of_range,
  time_field_invalid,
  // bench-harness
  empty_input,
  infeasible_plan,
  timeout,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace anamorphic
