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

#include <cstdint>
#include <string>
#include <vector>

namespace partlab {

inline constexpr std::uint64_t kMaxSeriesOrder = 5'000;

/// Power series in q truncated after q^order, with exact coefficients.
class QSeries {
public:
  explicit QSeries(std::uint64_t order);
  explicit QSeries(std::vector<BigInt> coeffs);  // order = size - 1

  static QSeries one(std::uint64_t order);

  std::uint64_t order() const noexcept { return coeffs_.size() - 1; }
  const BigInt& operator[](std::uint64_t i) const { return coeffs_.at(i); }
  BigInt& operator[](std::uint64_t i) { return coeffs_.at(i); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// In-place multiply by (1 + sign·q^j); no-op for j > order.
  void mul_binomial(std::uint64_t j, int sign);
  /// In-place divide by (1 - q^j), i.e. multiply by 1 + q^j + q^2j + ...
  void div_one_minus(std::uint64_t j);

  friend bool operator==(const QSeries&, const QSeries&) = default;

private:
  std::vector<BigInt> coeffs_;
};

/// Cauchy product truncated at the smaller order.
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_negate(QSeries a);

/// Reciprocal by forward substitution; c0 must be ±1 (DomainError otherwise).
QSeries qs_inverse(const QSeries& a);

enum class UchimuraSign { Positive, Printed };

/// Named generating functions:
///   euler_product         Π (1 - q^n)
///   distinct_product      Π (1 + q^n)
///   partition             Σ p(n) q^n  (coin DP, used as the reciprocal's input)
///   partition_reciprocal  inverse of the partition series
///   divisor               Σ q^n / (1 - q^n)
///   uchimura              ± Σ n q^n Π_{j>n} (1 - q^j)
///   almost_consecutive    Σ_{ℓ>=1} q^{(ℓ+1)(ℓ+2)/2} / ((1 - q^ℓ)(1 - q^{ℓ+1}))
QSeries gf_build(const std::string& name, std::uint64_t order,
                 UchimuraSign sign = UchimuraSign::Positive);

const std::vector<std::string>& gf_names();

}  // namespace partlab
