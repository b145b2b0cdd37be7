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

#include "anamorphic/random.hpp"

#include <stdexcept>
#include <vector>

#include <openssl/rand.h>

#include "anamorphic/error.hpp"

namespace anamorphic {

void SystemRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw std::runtime_error("RAND_bytes failed");
  }
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = engine_();
    for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(word & 0xff);
      word >>= 8;
    }
  }
}

BigInt random_below_nonzero(RandomSource& rng, const BigInt& bound) {
  if (bound <= 1) throw Error(Errc::invalid_parameters, "sampling bound must exceed 1");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t nbytes = (bits + 7) / 8;
  const unsigned excess = static_cast<unsigned>(nbytes * 8 - bits);
  const std::uint8_t mask = static_cast<std::uint8_t>(0xff >> excess);
  std::vector<std::uint8_t> buf(nbytes);
  for (;;) {
    rng.fill(buf);
    buf[0] &= mask;
    BigInt candidate = from_bytes_be(buf);
    if (sgn(candidate) != 0 && candidate < bound) return candidate;
  }
}

}  // namespace anamorphic
