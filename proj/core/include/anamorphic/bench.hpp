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

// Alice-side decryption timing across the four schemes:
//
//   vanilla-dlp       mod-p group, exhaustive search
//   ecc-dlp-vanilla   secp256k1, exhaustive search
//   bsgs-dlp          mod-p group, Baby-Step Giant-Step
//   eccdlp-bsgs       secp256k1, Baby-Step Giant-Step
//
// Each cell draws fresh keys, encrypts the planted cm, then times only
// Alice's decryption. Every timing is checked for correctness: a recovered
// cm different from the planted one aborts the run.
//
// Cells run sequentially on the calling thread.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anamorphic/random.hpp"

namespace anamorphic {

enum class Scheme { vanilla_dlp, ecc_dlp_vanilla, bsgs_dlp, eccdlp_bsgs };

inline constexpr Scheme kAllSchemes[] = {Scheme::vanilla_dlp, Scheme::ecc_dlp_vanilla, Scheme::bsgs_dlp,
                                         Scheme::eccdlp_bsgs};

/// Identifier used in CSV and plan files, e.g. "eccdlp-bsgs".
std::string_view to_string(Scheme scheme) noexcept;
/// Column label in markdown reports, e.g. "ECCDLP-BSGS".
std::string_view display_name(Scheme scheme) noexcept;
/// Throws Error(invalid_parameters) for unknown identifiers.
Scheme parse_scheme(std::string_view id);

bool uses_bsgs(Scheme scheme) noexcept;
bool uses_curve(Scheme scheme) noexcept;

/// 9, 99, ..., 9 999 999 999.
std::vector<std::uint64_t> default_cm_series();

/// Search bound used for a planted cm: the largest number with the same
/// count of decimal digits (10^d - 1). For the 9, 99, ... series the bound
/// equals cm.
std::uint64_t search_bound_for(std::uint64_t cm);

inline constexpr std::uint64_t kVanillaCap = 1'000'000;

struct BenchPlan {
  std::vector<std::uint64_t> cm_values = default_cm_series();
  unsigned repetitions = 5;
  std::chrono::milliseconds timeout{std::chrono::seconds(120)};
  std::vector<Scheme> schemes{Scheme::bsgs_dlp, Scheme::eccdlp_bsgs};
  /// Exhaustive-search schemes refuse cm above vanilla_cap unless set.
  bool allow_vanilla_beyond_cap = false;
  std::uint64_t vanilla_cap = kVanillaCap;
  std::string modp_group = "modp-2048";

  /// Throws Error(infeasible_plan) or Error(invalid_parameters).
  void validate() const;
};

struct BenchRecord {
  Scheme scheme = Scheme::eccdlp_bsgs;
  std::uint64_t cm = 0;
  unsigned rep = 0;
  /// Cold figure: for BSGS schemes this includes building the baby table.
  double elapsed_ms = 0.0;
  /// BSGS only: the same search repeated against the already-built table.
  std::optional<double> warm_ms;
  /// Group combine operations during the cold decryption.
  std::uint64_t combine_ops = 0;
  bool timed_out = false;
};

using BenchProgress = std::function<void(const BenchRecord&)>;

/// Throws Error(infeasible_plan) before running anything if the plan is
/// invalid. Timed-out cells are recorded with timed_out = true.
std::vector<BenchRecord> run_bench(const BenchPlan& plan, RandomSource& rng, const BenchProgress& progress = {});

/// One (scheme, cm) cell of a report.
struct ReportRow {
  Scheme scheme = Scheme::eccdlp_bsgs;
  std::uint64_t cm = 0;
  /// Absent when the cell timed out.
  std::optional<double> median_ms;
  std::optional<double> min_ms;
  std::optional<double> max_ms;
  std::optional<double> warm_median_ms;
  std::uint64_t combine_ops = 0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Groups records by (scheme, cm), sorted by scheme (enum order) then by cm.
/// Medians of an even count average the two middle values; combine_ops
/// takes the lower median. Throws Error(empty_input).
std::vector<ReportRow> summarize(const std::vector<BenchRecord>& records);

enum class ReportFormat { csv, markdown };

/// CSV columns: scheme,cm,median_ms,min_ms,max_ms,combine_ops. Times use
/// the shortest round-tripping decimal form; timed-out cells print
/// "timeout". Throws Error(empty_input).
std::string emit_report(const std::vector<BenchRecord>& records, ReportFormat format);

/// Parses emit_report's CSV back into rows (warm_median_ms is not part of
/// the CSV and stays empty). Throws Error(invalid_encoding).
std::vector<ReportRow> parse_csv_report(std::string_view csv);

}  // namespace anamorphic
