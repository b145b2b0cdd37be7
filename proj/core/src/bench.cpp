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

#include "anamorphic/bench.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "anamorphic/anamorphic_ecc.hpp"
#include "anamorphic/dlog.hpp"
#include "anamorphic/ec_group.hpp"
#include "anamorphic/error.hpp"
#include "anamorphic/modp.hpp"

namespace anamorphic {

std::string_view to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::vanilla_dlp: return "vanilla-dlp";
    case Scheme::ecc_dlp_vanilla: return "ecc-dlp-vanilla";
    case Scheme::bsgs_dlp: return "bsgs-dlp";
    case Scheme::eccdlp_bsgs: return "eccdlp-bsgs";
  }
  return "unknown";
}

std::string_view display_name(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::vanilla_dlp: return "Vanilla-DLP";
    case Scheme::ecc_dlp_vanilla: return "ECC-DLP-Vanilla";
    case Scheme::bsgs_dlp: return "BSGS-DLP";
    case Scheme::eccdlp_bsgs: return "ECCDLP-BSGS";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view id) {
  for (Scheme s : kAllSchemes) {
    if (to_string(s) == id) return s;
  }
  throw Error(Errc::invalid_parameters, "unknown scheme '" + std::string(id) + "'");
}

bool uses_bsgs(Scheme scheme) noexcept { return scheme == Scheme::bsgs_dlp || scheme == Scheme::eccdlp_bsgs; }
bool uses_curve(Scheme scheme) noexcept {
  return scheme == Scheme::ecc_dlp_vanilla || scheme == Scheme::eccdlp_bsgs;
}

std::vector<std::uint64_t> default_cm_series() {
  std::vector<std::uint64_t> out;
  std::uint64_t v = 9;
  for (int i = 0; i < 10; ++i) {
    out.push_back(v);
    v = v * 10 + 9;
  }
  return out;
}

std::uint64_t search_bound_for(std::uint64_t cm) {
  std::uint64_t bound = 9;
  while (bound < cm) bound = bound * 10 + 9;
  return bound;
}

void BenchPlan::validate() const {
  if (repetitions < 1) throw Error(Errc::invalid_parameters, "repetitions must be at least 1");
  if (cm_values.empty()) throw Error(Errc::invalid_parameters, "plan has no cm values");
  if (schemes.empty()) throw Error(Errc::invalid_parameters, "plan has no schemes");
  if (!std::is_sorted(cm_values.begin(), cm_values.end())) {
    throw Error(Errc::invalid_parameters, "cm values must be sorted ascending");
  }
  if (timeout.count() <= 0) throw Error(Errc::invalid_parameters, "timeout must be positive");
  const std::uint64_t max_cm = cm_values.back();
  if (max_cm >> kMaxCovertBits != 0) {
    throw Error(Errc::infeasible_plan, "cm " + std::to_string(max_cm) + " exceeds the 34-bit covert space");
  }
  bool any_modp = false;
  for (Scheme s : schemes) {
    if (!uses_bsgs(s) && max_cm > vanilla_cap && !allow_vanilla_beyond_cap) {
      throw Error(Errc::infeasible_plan, std::string(to_string(s)) + " is capped at cm <= " +
                                             std::to_string(vanilla_cap) + " without an override");
    }
    any_modp = any_modp || !uses_curve(s);
  }
  if (any_modp) {
    const ModpGroupParams& params = ModpGroupParams::by_name(modp_group);
    if (params.q <= BigInt(std::to_string(search_bound_for(max_cm)))) {
      throw Error(Errc::infeasible_plan, "group " + modp_group + " is too small for the requested cm range");
    }
  }
}

namespace {

using Clock = std::chrono::steady_clock;

struct TimeoutAbort {};

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

[[noreturn]] void fail_correctness(Scheme scheme, std::uint64_t planted, std::optional<std::uint64_t> got) {
  throw std::logic_error(std::string(to_string(scheme)) + ": planted cm " + std::to_string(planted) +
                         " but recovered " + (got ? std::to_string(*got) : std::string("nothing")));
}

// Times Alice's decryption: residue computation plus search. For BSGS the
// cold figure includes the baby table; a warm rerun reuses it.
template <CyclicGroup G, class ResidueFn>
void time_decryption(const G& group, ResidueFn&& residue, BenchRecord& rec, std::uint64_t bound,
                     Clock::duration timeout) {
  const bool bsgs = uses_bsgs(rec.scheme);
  const auto start = Clock::now();
  const auto deadline = start + timeout;
  CountingGroup<G> counting(group, [deadline](std::uint64_t n) {
    if ((n & 0xff) == 0 && Clock::now() > deadline) throw TimeoutAbort{};
  });

  std::optional<BabyTable<CountingGroup<G>>> table;
  std::optional<std::uint64_t> found;
  try {
    const auto res = residue();
    if (bsgs) {
      table.emplace(build_baby_table(bound, counting));
      found = solve_bsgs(res, bound, counting, *table);
    } else {
      found = solve_brute(res, bound, counting);
    }
  } catch (const TimeoutAbort&) {
    rec.timed_out = true;
  }
  rec.elapsed_ms = elapsed_ms(start);
  rec.combine_ops = counting.combines();
  if (rec.timed_out) return;
  if (found != rec.cm) fail_correctness(rec.scheme, rec.cm, found);

  if (bsgs) {
    const CountingGroup<G> plain(group);
    const auto warm_start = Clock::now();
    const auto warm = solve_bsgs(residue(), bound, plain, *table);
    rec.warm_ms = elapsed_ms(warm_start);
    if (warm != rec.cm) fail_correctness(rec.scheme, rec.cm, warm);
  }
}

void run_curve_cell(BenchRecord& rec, std::uint64_t bound, Clock::duration timeout, RandomSource& rng) {
  const DictatorKeyPair dictator = keygen_dictator(rng);
  const AliceKey alice = keygen_alice(rng);
  const BigInt m0 = random_below_nonzero(rng, pow2(kCoverMessageBits));
  const AnamorphicCiphertext ct = encrypt(dictator.pk, m0, rec.cm, alice.t, kMaxCovertBits);

  const EcGroup group;
  time_decryption(
      group, [&] { return point_sub(ct.c1, scalar_mul_base(alice.t)); }, rec, bound, timeout);
}

void run_modp_cell(BenchRecord& rec, std::uint64_t bound, Clock::duration timeout, const ModpGroupParams& params,
                   RandomSource& rng) {
  const ModpKeyPair dictator = modp_keygen(params, rng);
  const BigInt t = random_below_nonzero(rng, params.q);
  const BigInt m0 = random_below_nonzero(rng, pow2(kCoverMessageBits));
  const ModpCiphertext ct = modp_encrypt(params, dictator.pk, m0, rec.cm, t, kMaxCovertBits);

  const ModpGroup group(params);
  time_decryption(
      group, [&] { return group.combine(ct.c1, group.inverse(modp_pow(params.g, t, params.p))); }, rec, bound,
      timeout);
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchPlan& plan, RandomSource& rng, const BenchProgress& progress) {
  plan.validate();
  std::vector<BenchRecord> records;
  for (Scheme scheme : plan.schemes) {
    for (std::uint64_t cm : plan.cm_values) {
      const std::uint64_t bound = search_bound_for(cm);
      for (unsigned rep = 0; rep < plan.repetitions; ++rep) {
        BenchRecord rec;
        rec.scheme = scheme;
        rec.cm = cm;
        rec.rep = rep;
        if (uses_curve(scheme)) {
          run_curve_cell(rec, bound, plan.timeout, rng);
        } else {
          run_modp_cell(rec, bound, plan.timeout, ModpGroupParams::by_name(plan.modp_group), rng);
        }
        if (progress) progress(rec);
        records.push_back(rec);
      }
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

std::string fixed4(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

int scheme_rank(Scheme s) { return static_cast<int>(s); }

}  // namespace

std::vector<ReportRow> summarize(const std::vector<BenchRecord>& records) {
  if (records.empty()) throw Error(Errc::empty_input, "no benchmark records");
  std::map<std::pair<int, std::uint64_t>, std::vector<const BenchRecord*>> cells;
  for (const BenchRecord& r : records) cells[{scheme_rank(r.scheme), r.cm}].push_back(&r);

  std::vector<ReportRow> rows;
  for (const auto& [key, recs] : cells) {
    ReportRow row;
    row.scheme = recs.front()->scheme;
    row.cm = recs.front()->cm;
    std::vector<std::uint64_t> ops;
    std::vector<double> times;
    std::vector<double> warm;
    bool timed_out = false;
    for (const BenchRecord* r : recs) {
      timed_out = timed_out || r->timed_out;
      ops.push_back(r->combine_ops);
      times.push_back(r->elapsed_ms);
      if (r->warm_ms) warm.push_back(*r->warm_ms);
    }
    std::sort(ops.begin(), ops.end());
    row.combine_ops = ops[(ops.size() - 1) / 2];
    if (!timed_out) {
      row.median_ms = median_of(times);
      row.min_ms = *std::min_element(times.begin(), times.end());
      row.max_ms = *std::max_element(times.begin(), times.end());
      if (!warm.empty()) row.warm_median_ms = median_of(warm);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string emit_report(const std::vector<BenchRecord>& records, ReportFormat format) {
  const std::vector<ReportRow> rows = summarize(records);
  std::ostringstream os;
  if (format == ReportFormat::csv) {
    const auto cell = [](const std::optional<double>& v) { return v ? shortest(*v) : std::string("timeout"); };
    os << "scheme,cm,median_ms,min_ms,max_ms,combine_ops\n";
    for (const ReportRow& r : rows) {
      os << to_string(r.scheme) << ',' << r.cm << ',' << cell(r.median_ms) << ',' << cell(r.min_ms) << ','
         << cell(r.max_ms) << ',' << r.combine_ops << '\n';
    }
    return os.str();
  }

  const auto cell = [](const std::optional<double>& v) { return v ? fixed4(*v) : std::string("timeout"); };
  os << "| Scheme | cm | Median (ms) | Min (ms) | Max (ms) | Warm median (ms) | Combine ops |\n";
  os << "|---|---:|---:|---:|---:|---:|---:|\n";
  for (const ReportRow& r : rows) {
    const std::string warm = uses_bsgs(r.scheme) ? cell(r.warm_median_ms) : std::string("-");
    os << "| " << display_name(r.scheme) << " | " << r.cm << " | " << cell(r.median_ms) << " | " << cell(r.min_ms)
       << " | " << cell(r.max_ms) << " | " << warm << " | " << r.combine_ops << " |\n";
  }
  return os.str();
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::invalid_encoding, "bad integer field '" + std::string(s) + "'");
  }
  return v;
}

std::optional<double> parse_ms(std::string_view s) {
  if (s == "timeout") return std::nullopt;
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::invalid_encoding, "bad time field '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<ReportRow> parse_csv_report(std::string_view csv) {
  std::vector<ReportRow> rows;
  bool header = true;
  for (std::string_view line : split(csv, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != "scheme,cm,median_ms,min_ms,max_ms,combine_ops") {
        throw Error(Errc::invalid_encoding, "unexpected CSV header");
      }
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6) throw Error(Errc::invalid_encoding, "CSV row must have 6 fields");
    ReportRow row;
    try {
      row.scheme = parse_scheme(f[0]);
    } catch (const Error&) {
      throw Error(Errc::invalid_encoding, "unknown scheme in CSV row");
    }
    row.cm = parse_u64(f[1]);
    row.median_ms = parse_ms(f[2]);
    row.min_ms = parse_ms(f[3]);
    row.max_ms = parse_ms(f[4]);
    row.combine_ops = parse_u64(f[5]);
    rows.push_back(row);
  }
  if (header) throw Error(Errc::invalid_encoding, "missing CSV header");
  return rows;
}

}  // namespace anamorphic
