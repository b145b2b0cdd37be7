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

// Small-range discrete logarithms: exhaustive search and Baby-Step
// Giant-Step over any cyclic group satisfying CyclicGroup.
//
// Both solvers look for the smallest k in [0, bound] with k*g == target,
// written additively; for a multiplicative group read combine as product.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "anamorphic/error.hpp"

namespace anamorphic {

template <class G>
concept CyclicGroup = requires(const G& g, const typename G::Element& a, const typename G::Element& b) {
  typename G::Element;
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.generator() } -> std::convertible_to<typename G::Element>;
  { g.combine(a, b) } -> std::convertible_to<typename G::Element>;
  { g.inverse(a) } -> std::convertible_to<typename G::Element>;
  { g.key(a) } -> std::convertible_to<std::string>;
  { a == b } -> std::convertible_to<bool>;
};

/// Largest baby table built unless the caller raises it.
inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 28;

/// ceil(sqrt(bound + 1)), computed exactly: isqrt(bound) + 1.
inline std::uint64_t baby_table_width(std::uint64_t bound) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(bound)));
  while (s > 0 && s > bound / s) --s;
  while (s + 1 <= bound / (s + 1)) ++s;
  return s + 1;
}

/// Baby steps j*g for j in [0, width), keyed by the group's canonical
/// element key. Immutable once built; share freely across threads.
template <CyclicGroup G>
class BabyTable {
 public:
  using Element = typename G::Element;

  std::uint64_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<std::uint64_t> lookup(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// -(width * g): added once per giant step.
  const Element& giant_stride() const noexcept { return giant_stride_; }

  /// Largest bound this table can serve (width^2 - 1).
  std::uint64_t max_bound() const noexcept {
    if (width_ >= (std::uint64_t{1} << 32)) return UINT64_MAX;
    return width_ * width_ - 1;
  }

 private:
  template <CyclicGroup H>
  friend BabyTable<H> build_baby_table(std::uint64_t bound, const H& group, std::uint64_t budget);

  BabyTable(std::uint64_t width, std::unordered_map<std::string, std::uint64_t> entries, Element stride)
      : width_(width), entries_(std::move(entries)), giant_stride_(std::move(stride)) {}

  std::uint64_t width_;
  std::unordered_map<std::string, std::uint64_t> entries_;
  Element giant_stride_;
};

/// Builds the baby-step table for searches up to `bound`.
/// Throws Error(capacity) when ceil(sqrt(bound+1)) exceeds `budget` entries.
template <CyclicGroup G>
BabyTable<G> build_baby_table(std::uint64_t bound, const G& group, std::uint64_t budget = kDefaultTableBudget) {
  const std::uint64_t m = baby_table_width(bound);
  if (m > budget) {
    throw Error(Errc::capacity, "baby table of " + std::to_string(m) + " entries exceeds budget of " +
                                    std::to_string(budget));
  }
  std::unordered_map<std::string, std::uint64_t> entries;
  entries.reserve(static_cast<std::size_t>(m));
  const auto g = group.generator();
  auto acc = group.identity();
  for (std::uint64_t j = 0; j < m; ++j) {
    entries.emplace(group.key(acc), j);
    acc = group.combine(acc, g);
  }
  // acc == m*g here.
  return BabyTable<G>(m, std::move(entries), group.inverse(acc));
}

/// Exhaustive search, one combine per candidate.
template <CyclicGroup G>
std::optional<std::uint64_t> solve_brute(const typename G::Element& target, std::uint64_t bound, const G& group) {
  const auto g = group.generator();
  auto acc = group.identity();
  for (std::uint64_t k = 0;; ++k) {
    if (acc == target) return k;
    if (k == bound) return std::nullopt;
    acc = group.combine(acc, g);
  }
}

/// BSGS against a prebuilt table. The table must be wide enough:
/// width >= ceil(sqrt(bound+1)), else Error(invalid_parameters).
template <CyclicGroup G>
std::optional<std::uint64_t> solve_bsgs(const typename G::Element& target, std::uint64_t bound, const G& group,
                                        const BabyTable<G>& table) {
  const std::uint64_t m = table.width();
  if (m < baby_table_width(bound)) {
    throw Error(Errc::invalid_parameters, "baby table too narrow for requested bound");
  }
  const std::uint64_t giant_steps = bound / m + 1;  // ceil((bound + 1) / m)
  auto gamma = target;
  for (std::uint64_t i = 0; i < giant_steps; ++i) {
    if (const auto j = table.lookup(group.key(gamma))) {
      const std::uint64_t k = i * m + *j;
      if (k <= bound) return k;
      return std::nullopt;
    }
    if (i + 1 < giant_steps) gamma = group.combine(gamma, table.giant_stride());
  }
  return std::nullopt;
}

/// BSGS with a table built on demand for this bound.
template <CyclicGroup G>
std::optional<std::uint64_t> solve_bsgs(const typename G::Element& target, std::uint64_t bound, const G& group,
                                        std::uint64_t budget = kDefaultTableBudget) {
  const auto table = build_baby_table(bound, group, budget);
  return solve_bsgs(target, bound, group, table);
}

/// Wraps a group and counts combine() calls. An optional observer sees
/// each new count; it may throw to abort a long search.
template <CyclicGroup G>
class CountingGroup {
 public:
  using Element = typename G::Element;

  explicit CountingGroup(const G& inner, std::function<void(std::uint64_t)> observer = {})
      : inner_(&inner), observer_(std::move(observer)) {}

  Element identity() const { return inner_->identity(); }
  Element generator() const { return inner_->generator(); }
  Element inverse(const Element& a) const { return inner_->inverse(a); }
  std::string key(const Element& a) const { return inner_->key(a); }

  Element combine(const Element& a, const Element& b) const {
    ++combines_;
    if (observer_) observer_(combines_);
    return inner_->combine(a, b);
  }

  std::uint64_t combines() const noexcept { return combines_; }
  void reset() noexcept { combines_ = 0; }

 private:
  const G* inner_;
  std::function<void(std::uint64_t)> observer_;
  mutable std::uint64_t combines_ = 0;
};

}  // namespace anamorphic
