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

#include "divisor.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "qseries.hpp"

#include <gtest/gtest.h>

#include <random>

namespace partlab {
namespace {

QSeries from_ints(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (int x : c)
    v.emplace_back(x);
  return QSeries(std::move(v));
}

TEST(QSeries, MultiplyExamples) {
  EXPECT_EQ(qs_mul(from_ints({1, -1, 0, 0, 0, 0}), from_ints({1, 1, 1, 1, 1, 1})),
            from_ints({1, 0, 0, 0, 0, 0}));

  QSeries prod = QSeries::one(6);
  for (std::uint64_t j = 1; j <= 3; ++j)
    prod.mul_binomial(j, +1);
  EXPECT_EQ(prod, from_ints({1, 1, 1, 2, 1, 1, 1}));

  EXPECT_EQ(qs_mul(from_ints({1, 2, 3}), from_ints({1, 1})).order(), 1u);
}

TEST(QSeries, AddNegateAndDivide) {
  EXPECT_EQ(qs_add(from_ints({1, 2}), qs_negate(from_ints({1, 2}))), from_ints({0, 0}));
  QSeries s = QSeries::one(6);
  s.div_one_minus(2);
  EXPECT_EQ(s, from_ints({1, 0, 1, 0, 1, 0, 1}));
  EXPECT_THROW(s.div_one_minus(0), DomainError);
  EXPECT_THROW(gf_build("divisor", kMaxSeriesOrder + 1), ResourceError);
  EXPECT_THROW(QSeries(std::vector<BigInt>{}), InvalidInput);
}

TEST(QSeries, InverseExamples) {
  EXPECT_EQ(qs_inverse(gf_build("euler_product", 5)), from_ints({1, 1, 2, 3, 5, 7}));
  EXPECT_EQ(qs_inverse(QSeries::one(4)), QSeries::one(4));
  EXPECT_EQ(qs_inverse(from_ints({-1, 1})), from_ints({-1, -1}));
  EXPECT_THROW(qs_inverse(from_ints({0, 1, 0})), DomainError);
  EXPECT_THROW(qs_inverse(from_ints({2, 1})), DomainError);
}

TEST(Gf, NamedExamples) {
  EXPECT_EQ(gf_build("euler_product", 7), from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
  EXPECT_EQ(gf_build("divisor", 6), from_ints({0, 1, 2, 2, 3, 2, 4}));
  EXPECT_EQ(gf_build("almost_consecutive", 7), from_ints({0, 0, 0, 1, 1, 2, 3, 3}));
  EXPECT_EQ(gf_build("partition", 5), from_ints({1, 1, 2, 3, 5, 7}));
  EXPECT_THROW(gf_build("nope", 5), InvalidInput);
  EXPECT_EQ(gf_names().size(), 7u);
}

TEST(Gf, EulerProductMatchesPentagonalSigns) {
  const auto e = gf_build("euler_product", 2000);
  for (std::uint64_t n = 0; n <= 2000; ++n)
    ASSERT_EQ(e[n], pentagonal_h(static_cast<std::int64_t>(n))) << n;
}

TEST(Gf, UchimuraPositiveFormIsDivisorSeries) {
  const auto u = gf_build("uchimura", 1500);
  const auto d = gf_build("divisor", 1500);
  for (std::uint64_t n = 1; n <= 1500; ++n)
    ASSERT_EQ(u[n], divisor_stats(n).d) << n;
  EXPECT_EQ(u, d);
}

TEST(Gf, UchimuraPrintedSignDisagreesEverywhere) {
  const auto printed = gf_build("uchimura", 200, UchimuraSign::Printed);
  EXPECT_EQ(printed[1], -1);
  for (std::uint64_t n = 1; n <= 200; ++n)
    ASSERT_NE(printed[n], divisor_stats(n).d) << n;
}

TEST(Gf, ReciprocalIdentity) {
  EXPECT_EQ(qs_mul(gf_build("euler_product", 500), gf_build("partition", 500)),
            QSeries::one(500));
  EXPECT_EQ(gf_build("partition_reciprocal", 300), gf_build("euler_product", 300));
}

TEST(Gf, AlmostConsecutiveCountsTriplets) {
  const auto a = gf_build("almost_consecutive", 2000);
  for (std::uint64_t n = 1; n <= 2000; ++n)
    ASSERT_EQ(a[n], count_triplets(n).triplets) << n;
}

TEST(QSeries, MultiplicationIsCommutativeAndAssociative) {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  const auto random_series = [&] {
    std::vector<BigInt> v(65);
    for (auto& c : v)
      c = coeff(rng);
    return QSeries(std::move(v));
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(), b = random_series(), c = random_series();
    EXPECT_EQ(qs_mul(a, b), qs_mul(b, a));
    EXPECT_EQ(qs_mul(qs_mul(a, b), c), qs_mul(a, qs_mul(b, c)));
    EXPECT_EQ(qs_mul(a, qs_add(b, c)), qs_add(qs_mul(a, b), qs_mul(a, c)));
  }
}

}  // namespace
}  // namespace partlab
