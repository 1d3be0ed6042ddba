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
#include "qseries.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

namespace partlab {
namespace {

// Oracle: p(0..N) by direct recursion on the largest allowed part.
std::vector<std::uint64_t> partitions_by_recursion(std::uint64_t order) {
  std::vector<std::vector<std::uint64_t>> t(order + 1,
                                            std::vector<std::uint64_t>(order + 1));
  for (std::uint64_t k = 0; k <= order; ++k)
    t[0][k] = 1;
  for (std::uint64_t n = 1; n <= order; ++n)
    for (std::uint64_t k = 1; k <= order; ++k)
      t[n][k] = t[n][k - 1] + (k <= n ? t[n - k][k] : 0);
  std::vector<std::uint64_t> out(order + 1);
  for (std::uint64_t n = 0; n <= order; ++n)
    out[n] = t[n][order];
  return out;
}

TEST(DivisorStats, Examples) {
  auto s = divisor_stats(9);
  EXPECT_EQ(s.d, 3u);
  EXPECT_EQ(s.sigma, 13u);
  EXPECT_EQ(s.odd_part, 9u);
  EXPECT_EQ(s.count_below, 2u);
  EXPECT_EQ(s.count_above, 1u);

  s = divisor_stats(8);
  EXPECT_EQ(s.d, 4u);
  EXPECT_EQ(s.sigma, 15u);
  EXPECT_EQ(s.odd_part, 1u);
  EXPECT_EQ(s.count_below, 1u);
  EXPECT_EQ(s.count_above, 0u);

  s = divisor_stats(1);
  EXPECT_EQ(s.d, 1u);
  EXPECT_EQ(s.sigma, 1u);
  EXPECT_EQ(s.odd_part, 1u);
  EXPECT_EQ(s.count_below, 1u);
  EXPECT_EQ(s.count_above, 0u);

  EXPECT_THROW(divisor_stats(0), InvalidInput);
}

TEST(DivisorStats, AgreesWithTrialDivisionOracle) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t d = 0, sigma = 0, below = 0, above = 0, m = n;
    while (m % 2 == 0)
      m /= 2;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (n % k)
        continue;
      ++d;
      sigma += k;
      if (k % 2 == 1)
        (k * k < 2 * n ? below : above) += 1;
    }
    const auto s = divisor_stats(n);
    ASSERT_EQ(s.d, d) << n;
    ASSERT_EQ(s.sigma, sigma) << n;
    ASSERT_EQ(s.odd_part, m) << n;
    ASSERT_EQ(s.count_below, below) << n;
    ASSERT_EQ(s.count_above, above) << n;
    ASSERT_EQ(s.odd_divisors(), divisor_stats(m).d) << n;
  }
}

TEST(DivisorStats, SigmaOfTwoPowerTimesOdd) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t b = 0, m = n;
    while (m % 2 == 0) {
      m /= 2;
      ++b;
    }
    ASSERT_EQ(divisor_stats(n).sigma, ((std::uint64_t{2} << b) - 1) * divisor_stats(m).sigma)
        << n;
  }
}

TEST(Divisors, ListIsSortedAndComplete) {
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(49), (std::vector<std::uint64_t>{1, 7, 49}));
}

TEST(Pentagonal, Examples) {
  EXPECT_EQ(pentagonal_h(0), 1);
  EXPECT_EQ(pentagonal_h(1), -1);
  EXPECT_EQ(pentagonal_h(2), -1);
  EXPECT_EQ(pentagonal_h(3), 0);
  EXPECT_EQ(pentagonal_h(5), 1);
  EXPECT_EQ(pentagonal_h(7), 1);
  EXPECT_EQ(pentagonal_h(12), -1);
  EXPECT_EQ(pentagonal_h(-3), 0);
}

TEST(Pentagonal, NonzeroExactlyOnGeneralizedPentagonals) {
  const std::int64_t limit = 200000;
  std::set<std::int64_t> pent;
  for (std::int64_t k = -400; k <= 400; ++k) {
    const std::int64_t v = k * (3 * k - 1) / 2;
    if (v <= limit)
      pent.insert(v);
  }
  std::int64_t nonzero = 0;
  for (std::int64_t n = 0; n <= limit; ++n) {
    const int h = pentagonal_h(n);
    ASSERT_EQ(h != 0, pent.count(n) == 1) << n;
    nonzero += h != 0;
  }
  const double expected = 2.0 * std::sqrt(2.0 * limit / 3.0);
  EXPECT_NEAR(static_cast<double>(nonzero), expected, 3.0);
}

TEST(Triangular, Examples) {
  static_assert(triangular(0) == 0);
  static_assert(triangular(2) == 3);
  static_assert(triangular(4) == 10);
}

TEST(Tables, Examples) {
  const auto p5 = partition_count_table(5);
  EXPECT_EQ(p5.values, (std::vector<BigInt>{1, 1, 2, 3, 5, 7}));
  EXPECT_EQ(partition_count_table(0).values, (std::vector<BigInt>{1}));
  EXPECT_EQ(partition_count_table(10).at(10), 42);

  const auto pd = distinct_count_table(100);
  EXPECT_EQ(pd.at(0), 1);
  EXPECT_EQ(pd.at(7), 5);
  EXPECT_EQ(pd.at(100), 444793);
  EXPECT_THROW(pd.at(101), ResourceError);
  EXPECT_THROW(partition_count_table(kMaxTableOrder + 1), ResourceError);
}

TEST(Tables, PartitionTableMatchesRecursionOracle) {
  const auto oracle = partitions_by_recursion(300);
  const auto p = partition_count_table(300);
  for (std::uint64_t n = 0; n <= 300; ++n)
    ASSERT_EQ(p.at(n), oracle[n]) << n;
}

TEST(Tables, DistinctTableMatchesProductExpansion) {
  const auto pd = distinct_count_table(2000);
  const auto gf = gf_build("distinct_product", 2000);
  for (std::uint64_t n = 0; n <= 2000; ++n)
    ASSERT_EQ(pd.at(n), gf[n]) << n;
  EXPECT_EQ(to_decimal(distinct_count_table(4000).at(4000)).size(), 47u);
}

TEST(SequenceTables, GrowAndSeed) {
  SequenceTables t;
  t.ensure(50);
  EXPECT_EQ(t.p(10), 42);
  EXPECT_EQ(t.pd(7), 5);
  EXPECT_GE(t.distinct_order(), 50u);
  EXPECT_THROW(t.seed_distinct(partition_count_table(10)), IoError);

  SequenceTables seeded;
  seeded.seed_distinct(distinct_count_table(30));
  seeded.ensure(100);
  EXPECT_EQ(seeded.pd(100), 444793);
}

TEST(Cache, RoundTrip) {
  const auto table = distinct_count_table(500);
  std::stringstream buf;
  write_table_cache(buf, table);
  EXPECT_EQ(buf.str().rfind("# partlab pd v1\n0 1\n1 1\n", 0), 0u);
  const auto back = read_table_cache(buf);
  EXPECT_EQ(back.name, "pd");
  EXPECT_EQ(back.values, table.values);
}

TEST(Cache, RejectsMalformedInput) {
  const char* bad[] = {
      "",
      "# wrong header\n0 1\n",
      "# partlab pd v1\n0 1\n2 1\n",
      "# partlab pd v1\n0 1\n1 x\n",
      "# partlab pd v1\n1 1\n",
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(read_table_cache(in), IoError) << text;
  }
}

}  // namespace
}  // namespace partlab
