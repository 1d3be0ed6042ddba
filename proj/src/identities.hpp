/*
 * Copyright 2026 The partlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "bigint.hpp"
#include "divisor.hpp"
#include "partition.hpp"
#include "qseries.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace partlab {

// Which right-hand side is judged when a record carries both the formula as
// printed and the one re-derived from the surrounding results.
enum class Variant { Derived, Paper };

inline constexpr const char* kClosedForm = "closed_form";
inline constexpr const char* kPaper = "paper";
inline constexpr const char* kDerived = "derived";

struct RhsValue {
  std::string label;
  BigInt value;
};

struct SubCheck {
  std::string label;
  BigInt lhs;
  BigInt rhs;
  bool pass() const { return lhs == rhs; }
};

/// One theorem evaluated at one n. `lhs` always comes from enumeration or a
/// brute-force count; every entry of `rhs` from a closed form.
struct CheckRecord {
  std::string theorem;
  std::uint64_t n = 0;
  BigInt lhs;
  std::vector<RhsValue> rhs;
  std::size_t canonical = 0;
  std::vector<SubCheck> extras;
  std::string note;
  bool pass = false;

  const RhsValue& canonical_rhs() const { return rhs.at(canonical); }
  const BigInt* variant(const std::string& label) const;
  bool variant_matches(const std::string& label) const;
  /// Selects the canonical variant (if present) and recomputes `pass`.
  void judge(Variant preferred = Variant::Derived);
};

// Theorems on P_d and P_c.
CheckRecord check_pentagonal(std::uint64_t n);
CheckRecord check_pentagonal_gf(std::uint64_t n, const QSeries& euler_product);
CheckRecord check_euler_recurrence(std::uint64_t n, const SequenceTables& tables);
CheckRecord check_uchimura(std::uint64_t n);
/// lhs = d(n); variants are the coefficient of q^n in the positive form
/// ("derived") and in the printed, negated form ("paper").
CheckRecord check_uchimura_gf(std::uint64_t n, const QSeries& positive_form,
                              Variant preferred = Variant::Derived);
CheckRecord check_consecutive_counts(std::uint64_t n);
CheckRecord check_smallest_consecutive(std::uint64_t n);

// The weighted-sum identity over almost consecutive partitions.
struct MainIdentityInputs {
  std::uint64_t n = 0;
  StatHistogram distinct_n, distinct_next, distinct_prev2, consecutive_next;
  explicit MainIdentityInputs(std::uint64_t n);
};
CheckRecord check_main_identity(std::uint64_t n, const StatWeight& f);
CheckRecord check_main_identity(const MainIdentityInputs& in, const StatWeight& f);

CheckRecord check_pa_closed_form(std::uint64_t n, const SequenceTables& tables);
CheckRecord check_sign_sum(std::uint64_t n);
CheckRecord check_signed_smallest(std::uint64_t n,
                                  Variant preferred = Variant::Derived);

// Preimage lemmas for g and the bijection h, brute force against closed form.
CheckRecord check_preimage_lemmas(std::uint64_t n);

struct TripletCounts {
  std::uint64_t triplets = 0;    // a, b >= 1, r >= 2
  std::uint64_t restricted = 0;  // 1..r-2 once, r-1 and r at least once
  std::uint64_t shifted = 0;     // a, b >= 0 after removing 1 + ... + r
};
TripletCounts count_triplets(std::uint64_t n);

/// lhs = triplet count; "paper" = p_a(n), "derived" = p_a(n) - 1. When an
/// almost_consecutive series is supplied its coefficient joins the extras.
CheckRecord check_triplets(std::uint64_t n, const QSeries* almost_gf = nullptr,
                           Variant preferred = Variant::Derived);

/// π / (8·3^{3/4}) · n^{-5/4} · exp(π √(n/3)).
double asymptotic_main_term(std::uint64_t n);
/// Exact p_a(n) over the main term.
double asymptotic_ratio(std::uint64_t n);
/// 2p_d(n) - p_d(n+1) - p_d(n-2) + #odd divisors of n+1 + ⌊(n-3)/2⌋.
BigInt pa_closed_form(std::uint64_t n, const SequenceTables& tables);
/// pa_closed_form over the main term.
double closed_form_asymptotic_ratio(std::uint64_t n, const SequenceTables& tables);

}  // namespace partlab
