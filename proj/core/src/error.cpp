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

#include "anamorphic/error.hpp"

namespace anamorphic {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_length: return "malformed-length";
    case Errc::invalid_prefix: return "invalid-prefix";
    case Errc::not_on_curve: return "not-on-curve";
    case Errc::identity_point: return "identity-point";
    case Errc::invalid_encoding: return "invalid-encoding";
    case Errc::zero_scalar: return "zero-scalar";
    case Errc::zero_nonce: return "zero-nonce";
    case Errc::covert_out_of_range: return "covert-out-of-range";
    case Errc::message_out_of_range: return "message-out-of-range";
    case Errc::negative_result: return "negative-result";
    case Errc::not_found: return "not-found";
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::capacity: return "capacity";
    case Errc::field_out_of_range: return "field-out-of-range";
    case Errc::out_of_range: return "out-of-range";
    case Errc::time_field_invalid: return "time-field-invalid";
    case Errc::empty_input: return "empty-input";
    case Errc::infeasible_plan: return "infeasible-plan";
    case Errc::timeout: return "timeout";
  }
  return "unknown";
}

}  // namespace anamorphic
