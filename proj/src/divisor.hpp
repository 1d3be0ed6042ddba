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
#include <iosfwd>
#include <mutex>
#include <string>
#include <vector>

namespace partlab {

inline constexpr std::uint64_t kMaxDivisorArgument = 2'000'002;
inline constexpr std::uint64_t kMaxTableOrder = 10'000;

struct DivisorStats {
  std::uint64_t n = 0;
  std::uint64_t d = 0;      // number of divisors of n
  std::uint64_t sigma = 0;  // sum of divisors of n
  std::uint64_t odd_part = 0;
  std::uint64_t count_below = 0;  // #{d | odd_part : d² < 2n}
  std::uint64_t count_above = 0;  // #{d | odd_part : d² > 2n}

  std::uint64_t odd_divisors() const noexcept { return count_below + count_above; }
};

/// Trial-division factorization; √(2n) comparisons are done on d² vs 2n.
DivisorStats divisor_stats(std::uint64_t n);

/// Sorted divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// (-1)^k when n = k(3k-1)/2 for some integer k (negative k included), else 0.
int pentagonal_h(std::int64_t n) noexcept;

constexpr std::uint64_t triangular(std::uint64_t k) noexcept {
  return k * (k + 1) / 2;
}

struct SequenceTable {
  std::string name;
  std::vector<BigInt> values;  // values[n], n = 0..N

  std::uint64_t order() const noexcept {
    return values.empty() ? 0 : values.size() - 1;
  }
  const BigInt& at(std::uint64_t n) const;
};

/// p(0..N) by the part-by-part coin DP.
SequenceTable partition_count_table(std::uint64_t order);

/// p_d(0..N) by the 0/1 knapsack DP over parts 1..N.
SequenceTable distinct_count_table(std::uint64_t order);

/// Cache file: header "# partlab pd v1", then "n value" lines for n = 0..N.
void write_table_cache(std::ostream& out, const SequenceTable& table);
SequenceTable read_table_cache(std::istream& in);

/// p and p_d tables shared across checks. Grown by the coordinator, read
/// concurrently afterwards.
class SequenceTables {
public:
  /// Makes p and p_d available up to `order`.
  void ensure(std::uint64_t order);

  /// Seeds p_d from a cache; later growth extends past it.
  void seed_distinct(SequenceTable cached);

  const BigInt& p(std::uint64_t n) const;
  const BigInt& pd(std::uint64_t n) const;
  std::uint64_t distinct_order() const noexcept { return distinct_.order(); }
  const SequenceTable& distinct_table() const noexcept { return distinct_; }

private:
  std::mutex mutex_;
  SequenceTable partitions_{"p", {}};
  SequenceTable distinct_{"pd", {}};
};

}  // namespace partlab
