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

#include "anamorphic/app/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "anamorphic/app/wire.hpp"
#include "anamorphic/bench.hpp"

namespace anamorphic::app {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

json read_json_file(const std::string& path) {
  const auto text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::invalid_encoding, "'" + path + "' is not valid JSON: " + e.what());
  }
}

// Pretty, newline-terminated; key order is fixed so output is byte-stable.
std::string pretty(const json& j) { return j.dump(2) + "\n"; }

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_file(*path, text);
  } else {
    out << text;
  }
}

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

SearchMethod parse_method(const std::string& text) {
  if (text == "bsgs") return SearchMethod::bsgs;
  if (text == "brute") return SearchMethod::brute;
  throw Error(Errc::invalid_parameters, "unknown method '" + text + "' (bsgs|brute)");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

CovertSchema schema_from_flags(std::uint32_t action, std::uint32_t time, std::uint32_t location,
                               const std::string& flags) {
  if (flags.size() != 4 || flags.find_first_not_of("01") != std::string::npos) {
    throw Error(Errc::invalid_parameters, "--flags takes four 0/1 characters, flag 0 first");
  }
  CovertSchema s;
  s.action = action;
  s.time_minutes = time;
  s.location = location;
  for (std::size_t i = 0; i < 4; ++i) s.flags[i] = flags[i] == '1';
  return s;
}

// --- keygen -----------------------------------------------------------------

struct KeygenArgs {
  std::string role;
  std::string scheme{kEccScheme};
  std::string out;
  std::optional<std::string> public_out;
  std::optional<std::uint64_t> seed;
};

void cmd_keygen(const KeygenArgs& a, std::ostream& out) {
  const auto rng = make_rng(a.seed);
  const auto key = generate_key(parse_role(a.role), a.scheme, *rng);
  write_file(a.out, pretty(to_json(key)));
  if (a.public_out) write_file(*a.public_out, pretty(to_json(public_only(key))));
  out << key.public_element << "\n";
}

// --- encrypt ----------------------------------------------------------------

struct EncryptArgs {
  std::string pk_file;
  std::string alice_file;
  std::optional<std::string> m0_text;
  std::optional<std::string> m0_int;
  std::optional<std::uint64_t> cm;
  std::optional<std::string> schema_file;
  unsigned covert_bits = kDefaultCovertBits;
  std::optional<std::string> out;
};

void cmd_encrypt(const EncryptArgs& a, std::ostream& out) {
  const auto pk = key_from_json(read_json_file(a.pk_file));
  const auto alice = key_from_json(read_json_file(a.alice_file));
  if (pk.role != KeyRole::dictator) throw Error(Errc::invalid_parameters, "--pk-file must hold a dictator key");
  if (alice.role != KeyRole::alice) throw Error(Errc::invalid_parameters, "--alice-key-file must hold an alice key");
  if (pk.scheme != alice.scheme) throw Error(Errc::invalid_parameters, "key files use different schemes");

  const BigInt m0 = a.m0_text ? cover_text_to_int(*a.m0_text) : parse_decimal(*a.m0_int);
  const std::uint64_t cm = a.cm ? *a.cm : encode_schema(schema_from_json(read_json_file(*a.schema_file)));

  WireCiphertext ct;
  if (is_ecc(pk.scheme)) {
    ct = to_wire(encrypt(pk.ecc_public(), m0, cm, alice.ecc_alice().t, a.covert_bits));
  } else {
    const auto& params = ModpGroupParams::by_name(pk.scheme);
    ct = to_wire(modp_encrypt(params, pk.modp_public(), m0, cm, alice.require_secret(), a.covert_bits), pk.scheme);
  }
  emit(out, a.out, pretty(to_json(ct)));
}

// --- decrypt ----------------------------------------------------------------

struct DecryptDictatorArgs {
  std::string key_file;
  std::string ct_file;
  bool as_int = false;
};

void cmd_decrypt_dictator(const DecryptDictatorArgs& a, std::ostream& out) {
  const auto key = key_from_json(read_json_file(a.key_file));
  const auto ct = ciphertext_from_json(read_json_file(a.ct_file));
  if (key.role != KeyRole::dictator) throw Error(Errc::invalid_parameters, "--key-file must hold a dictator key");
  if (key.scheme != ct.scheme) throw Error(Errc::invalid_parameters, "key and ciphertext use different schemes");

  BigInt m0;
  if (is_ecc(key.scheme)) {
    m0 = decrypt_dictator(key.ecc_dictator().sk0, ct.ecc());
  } else {
    m0 = modp_decrypt_dictator(ModpGroupParams::by_name(key.scheme), key.require_secret(), ct.modp());
  }
  const auto text = a.as_int ? std::nullopt : int_to_cover_text(m0);
  out << (text ? *text : to_decimal(m0)) << "\n";
}

struct DecryptAliceArgs {
  std::string key_file;
  std::string ct_file;
  std::uint64_t bound = std::uint64_t{1} << kDefaultCovertBits;
  std::string method = "bsgs";
  bool decode = false;
};

void cmd_decrypt_alice(const DecryptAliceArgs& a, std::ostream& out) {
  const auto key = key_from_json(read_json_file(a.key_file));
  const auto ct = ciphertext_from_json(read_json_file(a.ct_file));
  if (key.role != KeyRole::alice) throw Error(Errc::invalid_parameters, "--key-file must hold an alice key");
  if (key.scheme != ct.scheme) throw Error(Errc::invalid_parameters, "key and ciphertext use different schemes");
  const auto method = parse_method(a.method);

  std::uint64_t cm;
  if (is_ecc(key.scheme)) {
    cm = decrypt_alice(key.ecc_alice(), ct.ecc().c1, a.bound, method);
  } else {
    cm = modp_decrypt_alice(ModpGroupParams::by_name(key.scheme), key.require_secret(), ct.modp().c1, a.bound,
                            method);
  }
  out << cm << "\n";
  if (a.decode) out << pretty(to_json(decode_schema(cm)));
}

// --- schema -----------------------------------------------------------------

struct SchemaEncodeArgs {
  std::optional<std::string> json_file;
  std::uint32_t action = 0;
  std::uint32_t time = 0;
  std::uint32_t location = 0;
  std::string flags = "0000";
};

void cmd_schema_encode(const SchemaEncodeArgs& a, std::ostream& out) {
  const auto schema = a.json_file ? schema_from_json(read_json_file(*a.json_file))
                                  : schema_from_flags(a.action, a.time, a.location, a.flags);
  out << encode_schema(schema) << "\n";
}

struct SchemaDecodeArgs {
  std::uint64_t cm = 0;
  bool strict = false;
};

void cmd_schema_decode(const SchemaDecodeArgs& a, std::ostream& out) {
  out << pretty(to_json(a.strict ? decode_schema_strict(a.cm) : decode_schema(a.cm)));
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
  std::optional<std::string> plan_file;
  std::optional<std::string> schemes;
  std::optional<std::string> cm_values;
  std::optional<unsigned> reps;
  std::optional<double> timeout_s;
  std::optional<std::string> modp_group;
  bool allow_vanilla = false;
  std::optional<std::uint64_t> seed;
  std::string format = "markdown";
  std::optional<std::string> out;
  bool progress = false;
};

void cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  PlanFile file = a.plan_file ? plan_from_json(read_json_file(*a.plan_file)) : PlanFile{};
  auto& plan = file.plan;
  // Inline flags override the plan file.
  if (a.schemes) {
    plan.schemes.clear();
    for (const auto& s : split_list(*a.schemes)) plan.schemes.push_back(parse_scheme(s));
  }
  if (a.cm_values) {
    plan.cm_values.clear();
    for (const auto& s : split_list(*a.cm_values)) {
      plan.cm_values.push_back(json_u64(json{{"cm", s}}, "cm"));
    }
  }
  if (a.reps) plan.repetitions = *a.reps;
  if (a.timeout_s) {
    if (!(*a.timeout_s > 0)) throw Error(Errc::invalid_parameters, "--timeout-s must be positive");
    plan.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(*a.timeout_s * 1000.0));
  }
  if (a.modp_group) plan.modp_group = *a.modp_group;
  if (a.allow_vanilla) plan.allow_vanilla_beyond_cap = true;
  if (a.seed) file.seed = a.seed;

  ReportFormat format;
  if (a.format == "csv") {
    format = ReportFormat::csv;
  } else if (a.format == "markdown") {
    format = ReportFormat::markdown;
  } else {
    throw Error(Errc::invalid_parameters, "--format is csv or markdown");
  }
  plan.validate();

  const auto rng = make_rng(file.seed);
  BenchProgress progress;
  if (a.progress) {
    progress = [&err](const BenchRecord& r) {
      err << to_string(r.scheme) << " cm=" << r.cm << " rep=" << r.rep << " "
          << (r.timed_out ? std::string("timeout") : std::to_string(r.elapsed_ms) + " ms") << "\n";
    };
  }
  const auto records = run_bench(plan, *rng, progress);
  emit(out, a.out, emit_report(records, format));
}

}  // namespace

bool is_crypto_failure(Errc code) noexcept {
  switch (code) {
    case Errc::negative_result:
    case Errc::not_found:
    case Errc::zero_nonce:
    case Errc::identity_point:
      return true;
    default:
      return false;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anamorphic ElGamal over secp256k1 (and mod-p groups)", "anamorphic"};
  app.require_subcommand(1);

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate a dictator or alice key file");
  keygen->add_option("--role", kg.role, "dictator | alice")->required();
  keygen->add_option("--scheme", kg.scheme, "ecc | modp-2048 | modp-toy-23")->capture_default_str();
  keygen->add_option("--out", kg.out, "Key file to write")->required();
  keygen->add_option("--public-out", kg.public_out, "Also write a copy without the secret");
  keygen->add_option("--seed", kg.seed, "Deterministic seed (testing only)");

  EncryptArgs en;
  auto* enc = app.add_subcommand("encrypt", "Encrypt a cover message with a covert payload");
  enc->add_option("--pk-file", en.pk_file, "Dictator key file (secret optional)")->required();
  enc->add_option("--alice-key-file", en.alice_file, "Alice key file")->required();
  auto* m0_text = enc->add_option("--m0", en.m0_text, "Cover text, at most 31 UTF-8 bytes");
  auto* m0_int = enc->add_option("--m0-int", en.m0_int, "Cover message as a decimal integer");
  m0_text->excludes(m0_int);
  auto* cm = enc->add_option("--cm", en.cm, "Covert integer");
  auto* schema = enc->add_option("--schema", en.schema_file, "Covert schema JSON file");
  cm->excludes(schema);
  enc->add_option("--covert-bits", en.covert_bits, "Width of the covert integer (max 34)")->capture_default_str();
  enc->add_option("--out", en.out, "Ciphertext file (default: stdout)");

  DecryptDictatorArgs dd;
  auto* ddec = app.add_subcommand("decrypt-dictator", "Recover the cover message");
  ddec->add_option("--key-file,--sk-file", dd.key_file, "Dictator key file")->required();
  ddec->add_option("--ct-file", dd.ct_file, "Ciphertext file")->required();
  ddec->add_flag("--int", dd.as_int, "Always print the decimal integer");

  DecryptAliceArgs da;
  auto* adec = app.add_subcommand("decrypt-alice", "Recover the covert integer");
  adec->add_option("--key-file,--alice-key-file", da.key_file, "Alice key file")->required();
  adec->add_option("--ct-file", da.ct_file, "Ciphertext file")->required();
  adec->add_option("--bound", da.bound, "Search [0, bound]")->capture_default_str();
  adec->add_option("--method", da.method, "bsgs | brute")->capture_default_str();
  adec->add_flag("--decode-schema", da.decode, "Print the covert integer as a v1 schema");

  SchemaEncodeArgs se;
  auto* senc = app.add_subcommand("schema-encode", "Pack a v1 covert schema into an integer");
  auto* sjson = senc->add_option("--json", se.json_file, "Schema JSON file");
  auto* sact = senc->add_option("--action", se.action, "0..63");
  auto* stime = senc->add_option("--time", se.time, "Minutes since midnight, 0..1439");
  auto* sloc = senc->add_option("--location", se.location, "0..255");
  auto* sflags = senc->add_option("--flags", se.flags, "Four 0/1 characters, flag 0 first");
  for (auto* o : {sact, stime, sloc, sflags}) sjson->excludes(o);

  SchemaDecodeArgs sd;
  auto* sdec = app.add_subcommand("schema-decode", "Unpack an integer as a v1 covert schema");
  sdec->add_option("--cm", sd.cm, "Covert integer")->required();
  sdec->add_flag("--strict", sd.strict, "Reject time fields of 1440 or more");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Time the four decryption schemes");
  bench->add_option("--plan", bn.plan_file, "Plan JSON file");
  bench->add_option("--schemes", bn.schemes, "Comma-separated scheme ids");
  bench->add_option("--cm", bn.cm_values, "Comma-separated covert integers, ascending");
  bench->add_option("--reps", bn.reps, "Repetitions per cell");
  bench->add_option("--timeout-s", bn.timeout_s, "Per-cell timeout in seconds");
  bench->add_option("--modp-group", bn.modp_group, "modp-2048 | modp-toy-23");
  bench->add_flag("--allow-vanilla-beyond-cap", bn.allow_vanilla, "Let exhaustive search run past 10^6");
  bench->add_option("--seed", bn.seed, "Deterministic key material");
  bench->add_option("--format", bn.format, "csv | markdown")->capture_default_str();
  bench->add_option("--out", bn.out, "Report file (default: stdout)");
  bench->add_flag("--progress", bn.progress, "Log each cell to stderr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keygen) {
      cmd_keygen(kg, out);
    } else if (*enc) {
      if (!en.m0_text && !en.m0_int) throw Error(Errc::invalid_parameters, "one of --m0 or --m0-int is required");
      if (!en.cm && !en.schema_file) throw Error(Errc::invalid_parameters, "one of --cm or --schema is required");
      cmd_encrypt(en, out);
    } else if (*ddec) {
      cmd_decrypt_dictator(dd, out);
    } else if (*adec) {
      cmd_decrypt_alice(da, out);
    } else if (*senc) {
      cmd_schema_encode(se, out);
    } else if (*sdec) {
      cmd_schema_decode(sd, out);
    } else if (*bench) {
      cmd_bench(bn, out, err);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return is_crypto_failure(e.code()) ? kExitCrypto : kExitUsage;
  } catch (const std::logic_error& e) {
    // run_bench's self-check: a solver returned the wrong cm.
    err << "error: " << e.what() << "\n";
    return kExitCrypto;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace anamorphic::app
