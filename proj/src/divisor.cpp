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

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace partlab {

namespace {

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v)
    --r;
  while ((r + 1) * (r + 1) <= v)
    ++r;
  return r;
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0)
    throw InvalidInput("divisors of 0 are undefined");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d)
      continue;
    small.push_back(d);
    if (d * d != n)
      large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

DivisorStats divisor_stats(std::uint64_t n) {
  if (n < 1)
    throw InvalidInput("divisor_stats needs n >= 1");
  if (n > kMaxDivisorArgument)
    throw ResourceError("divisor_stats argument " + std::to_string(n) +
                        " exceeds limit");
  DivisorStats st;
  st.n = n;
  st.odd_part = n;
  while (st.odd_part % 2 == 0)
    st.odd_part /= 2;
  for (auto d : divisors(n)) {
    ++st.d;
    st.sigma += d;
    if (st.odd_part % d == 0) {
      // d odd, so d² = 2n is impossible.
      if (d * d < 2 * n)
        ++st.count_below;
      else
        ++st.count_above;
    }
  }
  return st;
}

int pentagonal_h(std::int64_t n) noexcept {
  if (n < 0)
    return 0;
  // k(3k-1)/2 = n  <=>  (6k-1)² = 24n + 1.
  const auto disc = 24 * static_cast<std::uint64_t>(n) + 1;
  const auto s = isqrt(disc);
  if (s * s != disc)
    return 0;
  // s ≡ ±1 (mod 6) always holds for a square 24n+1; pick the integer k.
  std::int64_t k;
  if ((s + 1) % 6 == 0)
    k = static_cast<std::int64_t>((s + 1) / 6);
  else if ((s - 1) % 6 == 0)
    k = -static_cast<std::int64_t>((s - 1) / 6);
  else
    return 0;
  return (k % 2 == 0) ? 1 : -1;
}

const BigInt& SequenceTable::at(std::uint64_t n) const {
  if (n >= values.size())
    throw ResourceError(name + "(" + std::to_string(n) +
                        ") is beyond the table order " +
                        std::to_string(order()));
  return values[n];
}

SequenceTable partition_count_table(std::uint64_t order) {
  if (order > kMaxTableOrder)
    throw ResourceError("table order " + std::to_string(order) +
                        " exceeds limit");
  SequenceTable t{"p", std::vector<BigInt>(order + 1, 0)};
  t.values[0] = 1;
  for (std::uint64_t part = 1; part <= order; ++part)
    for (std::uint64_t n = part; n <= order; ++n)
      t.values[n] += t.values[n - part];
  return t;
}

SequenceTable distinct_count_table(std::uint64_t order) {
  if (order > kMaxTableOrder)
    throw ResourceError("table order " + std::to_string(order) +
                        " exceeds limit");
  SequenceTable t{"pd", std::vector<BigInt>(order + 1, 0)};
  t.values[0] = 1;
  for (std::uint64_t part = 1; part <= order; ++part)
    for (std::uint64_t n = order; n >= part; --n)
      t.values[n] += t.values[n - part];
  return t;
}

void write_table_cache(std::ostream& out, const SequenceTable& table) {
  out << "# partlab " << table.name << " v1\n";
  for (std::size_t n = 0; n < table.values.size(); ++n)
    out << n << ' ' << table.values[n] << '\n';
  if (!out)
    throw IoError("failed writing table cache");
}

SequenceTable read_table_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# partlab ", 0) != 0)
    throw IoError("table cache is missing its '# partlab <name> v1' header");
  std::istringstream header(line.substr(10));
  SequenceTable table;
  std::string version;
  header >> table.name >> version;
  if (table.name.empty() || version != "v1")
    throw IoError("unsupported table cache header '" + line + "'");
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::istringstream row(line);
    std::uint64_t n;
    std::string value;
    if (!(row >> n >> value))
      throw IoError("malformed table cache line '" + line + "'");
    if (n != table.values.size())
      throw IoError("table cache rows must be contiguous from 0");
    try {
      table.values.emplace_back(value);
    } catch (const std::exception&) {
      throw IoError("malformed table cache value '" + value + "'");
    }
  }
  return table;
}

void SequenceTables::ensure(std::uint64_t order) {
  std::lock_guard lock(mutex_);
  if (partitions_.values.size() <= order)
    partitions_ = partition_count_table(order);
  if (distinct_.values.size() <= order)
    distinct_ = distinct_count_table(order);
}

void SequenceTables::seed_distinct(SequenceTable cached) {
  if (cached.name != "pd")
    throw IoError("cache holds table '" + cached.name + "', expected 'pd'");
  std::lock_guard lock(mutex_);
  if (cached.values.size() > distinct_.values.size())
    distinct_ = std::move(cached);
}

const BigInt& SequenceTables::p(std::uint64_t n) const {
  return partitions_.at(n);
}

const BigInt& SequenceTables::pd(std::uint64_t n) const {
  return distinct_.at(n);
}

}  // namespace partlab
