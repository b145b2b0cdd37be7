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

#include <string>

#include "anamorphic/curve.hpp"

namespace anamorphic {

/// secp256k1 under point addition, generated by G. Keys are compressed
/// point encodings.
class EcGroup {
 public:
  using Element = CurvePoint;

  Element identity() const { return CurvePoint::identity(); }
  const Element& generator() const { return secp256k1::generator(); }
  Element combine(const Element& a, const Element& b) const { return point_add(a, b); }
  Element inverse(const Element& a) const { return point_negate(a); }

  std::string key(const Element& a) const {
    std::string out;
    out.reserve(kCompressedPointSize);
    encode_point_into(a, out);
    return out;
  }
};

}  // namespace anamorphic
