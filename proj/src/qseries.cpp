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

#include "qseries.hpp"

#include "errors.hpp"

#include <algorithm>

namespace partlab {

namespace {

void require_order(std::uint64_t order) {
  if (order > kMaxSeriesOrder)
    throw ResourceError("series order " + std::to_string(order) +
                        " exceeds limit " + std::to_string(kMaxSeriesOrder));
}

QSeries partition_series(std::uint64_t order) {
  QSeries s = QSeries::one(order);
  for (std::uint64_t j = 1; j <= order; ++j)
    s.div_one_minus(j);
  return s;
}

QSeries uchimura_series(std::uint64_t order, UchimuraSign sign) {
  // tail = Π_{j=n+1..order} (1 - q^j), built from the top down.
  QSeries tail = QSeries::one(order);
  QSeries sum(order);
  for (std::uint64_t n = order; n >= 1; --n) {
    for (std::uint64_t i = n; i <= order; ++i)
      sum[i] += n * tail[i - n];
    tail.mul_binomial(n, -1);
  }
  return sign == UchimuraSign::Positive ? sum : qs_negate(std::move(sum));
}

QSeries almost_consecutive_series(std::uint64_t order) {
  QSeries sum(order);
  for (std::uint64_t l = 1; (l + 1) * (l + 2) / 2 <= order; ++l) {
    QSeries term(order);
    term[(l + 1) * (l + 2) / 2] = 1;
    term.div_one_minus(l);
    term.div_one_minus(l + 1);
    sum = qs_add(sum, term);
  }
  return sum;
}

}  // namespace

QSeries::QSeries(std::uint64_t order) : coeffs_(order + 1, 0) {}

QSeries::QSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw InvalidInput("a series needs at least the constant coefficient");
}

QSeries QSeries::one(std::uint64_t order) {
  QSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

void QSeries::mul_binomial(std::uint64_t j, int sign) {
  const auto n = order();
  if (j == 0 || j > n)
    return;
  for (std::uint64_t i = n; i >= j; --i) {
    if (sign > 0)
      coeffs_[i] += coeffs_[i - j];
    else
      coeffs_[i] -= coeffs_[i - j];
  }
}

void QSeries::div_one_minus(std::uint64_t j) {
  if (j == 0)
    throw DomainError("1 - q^0 is not invertible");
  for (std::uint64_t i = j; i <= order(); ++i)
    coeffs_[i] += coeffs_[i - j];
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  const auto n = std::min(a.order(), b.order());
  QSeries out(n);
  for (std::uint64_t i = 0; i <= n; ++i) {
    if (a[i].is_zero())
      continue;
    for (std::uint64_t j = 0; i + j <= n; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
  const auto n = std::min(a.order(), b.order());
  QSeries out(n);
  for (std::uint64_t i = 0; i <= n; ++i)
    out[i] = a[i] + b[i];
  return out;
}

QSeries qs_negate(QSeries a) {
  for (std::uint64_t i = 0; i <= a.order(); ++i)
    a[i] = -a[i];
  return a;
}

QSeries qs_inverse(const QSeries& a) {
  const BigInt& c0 = a[0];
  if (c0 != 1 && c0 != -1)
    throw DomainError("series inverse needs constant term +1 or -1, got " +
                      to_decimal(c0));
  const auto n = a.order();
  QSeries b(n);
  b[0] = c0;  // 1/c0 = c0 for a unit
  for (std::uint64_t k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (std::uint64_t i = 1; i <= k; ++i)
      if (!a[i].is_zero())
        acc += a[i] * b[k - i];
    b[k] = -acc * c0;
  }
  return b;
}

const std::vector<std::string>& gf_names() {
  static const std::vector<std::string> names = {
      "euler_product", "distinct_product", "partition", "partition_reciprocal",
      "divisor",       "uchimura",         "almost_consecutive"};
  return names;
}

QSeries gf_build(const std::string& name, std::uint64_t order,
                 UchimuraSign sign) {
  if (std::find(gf_names().begin(), gf_names().end(), name) == gf_names().end())
    throw InvalidInput("unknown generating function '" + name + "'");
  require_order(order);

  if (name == "euler_product" || name == "distinct_product") {
    QSeries s = QSeries::one(order);
    const int factor = name == "euler_product" ? -1 : 1;
    for (std::uint64_t j = 1; j <= order; ++j)
      s.mul_binomial(j, factor);
    return s;
  }
  if (name == "partition")
    return partition_series(order);
  if (name == "partition_reciprocal")
    return qs_inverse(partition_series(order));
  if (name == "divisor") {
    QSeries s(order);
    for (std::uint64_t n = 1; n <= order; ++n)
      for (std::uint64_t m = n; m <= order; m += n)
        s[m] += 1;
    return s;
  }
  if (name == "uchimura")
    return uchimura_series(order, sign);
  return almost_consecutive_series(order);
}

}  // namespace partlab
