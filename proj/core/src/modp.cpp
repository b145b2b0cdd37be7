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

#include "anamorphic/modp.hpp"

#include "anamorphic/error.hpp"

namespace anamorphic {

namespace {

ModpGroupParams make_validated(std::string name, BigInt p, BigInt g, BigInt q) {
  ModpGroupParams params{std::move(name), std::move(p), std::move(g), std::move(q)};
  params.validate();
  return params;
}

std::uint64_t require_found(std::optional<std::uint64_t> cm, std::uint64_t bound) {
  if (!cm) throw Error(Errc::not_found, "no covert message in [0, " + std::to_string(bound) + "]");
  return *cm;
}

}  // namespace

const ModpGroupParams& ModpGroupParams::toy23() {
  static const ModpGroupParams params = make_validated("modp-toy-23", 23, 5, 22);
  return params;
}

const ModpGroupParams& ModpGroupParams::modp2048() {
  static const ModpGroupParams params = [] {
    BigInt p(
        "ffffffffffffffffc90fdaa22168c234c4c6628b80dc1cd129024e088a67cc74020bbea63b139b22514a08798e3404dd"
        "ef9519b3cd3a431b302b0a6df25f14374fe1356d6d51c245e485b576625e7ec6f44c42e9a637ed6b0bff5cb6f406b7ed"
        "ee386bfb5a899fa5ae9f24117c4b1fe649286651ece45b3dc2007cb8a163bf0598da48361c55d39a69163fa8fd24cf5f"
        "83655d23dca3ad961c62f356208552bb9ed529077096966d670c354e4abc9804f1746c08ca18217c32905e462e36ce3b"
        "e39e772c180e86039b2783a2ec07a28fb5c55df06f4c52c9de2bcbf6955817183995497cea956ae515d2261898fa0510"
        "15728e5a8aacaa68ffffffffffffffff",
        16);
    BigInt q = (p - 1) / 2;
    return make_validated("modp-2048", std::move(p), 2, std::move(q));
  }();
  return params;
}

const ModpGroupParams& ModpGroupParams::by_name(std::string_view name) {
  if (name == "modp-2048") return modp2048();
  if (name == "modp-toy-23") return toy23();
  throw Error(Errc::invalid_parameters, "unknown mod-p group '" + std::string(name) + "'");
}

void ModpGroupParams::validate() const {
  if (p <= 2 || q <= 1 || g <= 1 || g >= p) throw Error(Errc::invalid_parameters, "mod-p parameters out of range");
  if (modp_pow(g, q, p) != 1) throw Error(Errc::invalid_parameters, "g^q != 1 (mod p)");
}

BigInt ModpGroup::combine(const Element& a, const Element& b) const {
  BigInt r;
  mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), params_->p.get_mpz_t());
  return r;
}

BigInt ModpGroup::inverse(const Element& a) const {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), params_->p.get_mpz_t()) == 0) {
    throw Error(Errc::invalid_parameters, "element has no inverse mod p");
  }
  return r;
}

std::string ModpGroup::key(const Element& a) const {
  std::string out(width_, '\0');
  const std::size_t len = byte_length(a);
  if (len > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (width_ - len), &written, 1, 1, 1, 0, a.get_mpz_t());
  }
  return out;
}

BigInt modp_pow(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

ModpKeyPair modp_keypair_from_secret(const ModpGroupParams& params, const BigInt& sk0) {
  if (sk0 <= 0 || sk0 >= params.q) throw Error(Errc::zero_scalar, "mod-p secret must lie in [1, q)");
  return {sk0, modp_pow(params.g, sk0, params.p)};
}

ModpKeyPair modp_keygen(const ModpGroupParams& params, RandomSource& rng) {
  return modp_keypair_from_secret(params, random_below_nonzero(rng, params.q));
}

ModpCiphertext modp_encrypt(const ModpGroupParams& params, const BigInt& pk, const BigInt& m0, std::uint64_t cm,
                            const BigInt& t, unsigned covert_bits) {
  if (covert_bits > kMaxCovertBits) {
    throw Error(Errc::covert_out_of_range, "covert bound above 2^" + std::to_string(kMaxCovertBits));
  }
  if (cm >> covert_bits != 0) {
    throw Error(Errc::covert_out_of_range, "covert message must be below 2^" + std::to_string(covert_bits));
  }
  if (sgn(m0) < 0 || mpz_sizeinbase(m0.get_mpz_t(), 2) > kCoverMessageBits) {
    throw Error(Errc::message_out_of_range, "cover message must lie in [0, 2^256)");
  }
  if (t <= 0 || t >= params.q) throw Error(Errc::zero_scalar, "alice secret must lie in [1, q)");
  if (pk <= 0 || pk >= params.p) throw Error(Errc::invalid_parameters, "public key must lie in [1, p)");

  BigInt r = BigInt(std::to_string(cm)) + t;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), params.q.get_mpz_t());
  if (sgn(r) == 0) throw Error(Errc::zero_nonce, "cm + t is zero mod q; choose another t");

  return {modp_pow(pk, r, params.p) + m0, modp_pow(params.g, r, params.p)};
}

BigInt modp_decrypt_dictator(const ModpGroupParams& params, const BigInt& sk0, const ModpCiphertext& ct) {
  if (ct.c1 <= 0 || ct.c1 >= params.p) throw Error(Errc::invalid_parameters, "c1 must lie in [1, p)");
  BigInt m0 = ct.c0 - modp_pow(ct.c1, sk0, params.p);
  if (sgn(m0) < 0) throw Error(Errc::negative_result, "c0 < c1^sk0: wrong key or corrupted ciphertext");
  return m0;
}

namespace {

BigInt alice_residue(const ModpGroupParams& params, const BigInt& t, const BigInt& c1) {
  if (c1 <= 0 || c1 >= params.p) throw Error(Errc::invalid_parameters, "c1 must lie in [1, p)");
  const ModpGroup group(params);
  return group.combine(c1, group.inverse(modp_pow(params.g, t, params.p)));
}

}  // namespace

std::uint64_t modp_decrypt_alice(const ModpGroupParams& params, const BigInt& t, const BigInt& c1,
                                 std::uint64_t bound, SearchMethod method) {
  const BigInt res = alice_residue(params, t, c1);
  const ModpGroup group(params);
  if (method == SearchMethod::brute) return require_found(solve_brute(res, bound, group), bound);
  return require_found(solve_bsgs(res, bound, group), bound);
}

std::uint64_t modp_decrypt_alice(const ModpGroupParams& params, const BigInt& t, const BigInt& c1,
                                 std::uint64_t bound, const BabyTable<ModpGroup>& table) {
  const ModpGroup group(params);
  return require_found(solve_bsgs(alice_residue(params, t, c1), bound, group, table), bound);
}

}  // namespace anamorphic
