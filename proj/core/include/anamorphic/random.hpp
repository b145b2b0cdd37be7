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

#include <cstdint>
#include <random>
#include <span>

#include "anamorphic/bigint.hpp"

namespace anamorphic {

/// Source of uniform bytes. Supplied per call; the only stateful input to
/// key generation.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating-system CSPRNG (OpenSSL RAND_bytes).
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// Reproducible stream from a 64-bit seed (mt19937_64). For tests, fixtures
/// and `--seed`; not a cryptographic generator.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
  void fill(std::span<std::uint8_t> out) override;

 private:
  std::mt19937_64 engine_;
};

/// Uniform integer in [1, bound) by rejection sampling over
/// byte_length(bound) bytes with the top bits masked.
BigInt random_below_nonzero(RandomSource& rng, const BigInt& bound);

}  // namespace anamorphic
