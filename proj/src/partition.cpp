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

#include "partition.hpp"

#include "errors.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

namespace partlab {

namespace {

void require_weight(std::uint64_t n) {
  if (n == 0)
    throw InvalidInput("partition weight must be positive");
  if (n > kMaxWeight)
    throw ResourceError("partition weight " + std::to_string(n) +
                        " exceeds limit " + std::to_string(kMaxWeight));
}

void require_distinct_budget(std::uint64_t n) {
  require_weight(n);
  if (n > kMaxDistinctWeight)
    throw ResourceError("enumerating P_d(" + std::to_string(n) +
                        ") exceeds the budget of weight " +
                        std::to_string(kMaxDistinctWeight));
}

// Ascending-lexicographic DFS. The next part a is either the whole remainder
// or small enough to leave room for a strictly larger part after it.
void distinct_rec(std::uint64_t remaining, std::uint64_t min_part,
                  std::vector<Part>& stack, const PartsVisitor& visit) {
  for (std::uint64_t a = min_part; 2 * a + 1 <= remaining; ++a) {
    stack.push_back(static_cast<Part>(a));
    distinct_rec(remaining - a, a + 1, stack, visit);
    stack.pop_back();
  }
  if (remaining >= min_part) {
    stack.push_back(static_cast<Part>(remaining));
    visit(stack);
    stack.pop_back();
  }
}

template <class Visit>
void scan_almost_consecutive(std::uint64_t n, Visit&& visit) {
  // run ℓ >= 1, smallest k >= 1, gap m >= 1:
  //   n = k(ℓ+1) + mℓ + ℓ(ℓ-1)/2
  for (std::uint64_t run = 1;; ++run) {
    const std::uint64_t base = run * (run - 1) / 2;
    if ((run + 1) + run + base > n)
      break;
    for (std::uint64_t k = 1;; ++k) {
      const std::uint64_t used = k * (run + 1) + base;
      if (used + run > n)
        break;
      const std::uint64_t rest = n - used;
      if (rest % run == 0)
        visit(AlmostConsecutiveForm{k, rest / run, run});
    }
  }
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw InvalidInput("a partition needs at least one part");
  if (parts_.front() == 0)
    throw InvalidInput("partition parts must be positive");
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] <= parts_[i - 1])
      throw InvalidInput("partition parts must be strictly increasing");
}

std::uint64_t Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

Partition AlmostConsecutiveForm::to_partition() const {
  if (smallest == 0 || gap == 0 || run == 0)
    throw InvalidInput("almost consecutive form needs k, m, l >= 1");
  std::vector<Part> parts;
  parts.reserve(run + 1);
  parts.push_back(static_cast<Part>(smallest));
  for (std::uint64_t j = 0; j < run; ++j)
    parts.push_back(static_cast<Part>(smallest + gap + j));
  return Partition(std::move(parts));
}

const char* to_string(PartitionClass c) noexcept {
  switch (c) {
  case PartitionClass::Distinct:
    return "distinct";
  case PartitionClass::Consecutive:
    return "consecutive";
  case PartitionClass::AlmostConsecutive:
    return "almost";
  }
  return "?";
}

PartitionClass partition_class_from_string(const std::string& s) {
  if (s == "distinct" || s == "pd")
    return PartitionClass::Distinct;
  if (s == "consecutive" || s == "pc")
    return PartitionClass::Consecutive;
  if (s == "almost" || s == "almost_consecutive" || s == "pa")
    return PartitionClass::AlmostConsecutive;
  throw InvalidInput("unknown partition class '" + s + "'");
}

ClassFlags classify(std::span<const Part> parts) noexcept {
  ClassFlags flags{true, true};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] != parts[i - 1] + 1) {
      flags.consecutive = false;
      if (i > 1)
        flags.almost_consecutive = false;
    }
  }
  return flags;
}

ClassFlags classify(const Partition& p) noexcept { return classify(p.parts()); }

void for_each_distinct(std::uint64_t n, const PartsVisitor& visit) {
  require_distinct_budget(n);
  std::vector<Part> stack;
  distinct_rec(n, 1, stack, visit);
}

std::vector<Partition> enumerate_distinct(std::uint64_t n) {
  std::vector<Partition> out;
  for_each_distinct(n, [&](std::span<const Part> parts) {
    out.emplace_back(std::vector<Part>(parts.begin(), parts.end()));
  });
  return out;
}

std::vector<Partition> enumerate_consecutive(std::uint64_t n) {
  require_weight(n);
  // k parts starting at a: n = k·a + k(k-1)/2.
  std::vector<Partition> out;
  for (std::uint64_t k = 1; k * (k + 1) / 2 <= n; ++k) {
    const std::uint64_t rest = n - k * (k - 1) / 2;
    if (rest % k != 0)
      continue;
    const std::uint64_t a = rest / k;
    std::vector<Part> parts(k);
    std::iota(parts.begin(), parts.end(), static_cast<Part>(a));
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_almost_consecutive(std::uint64_t n) {
  require_weight(n);
  std::vector<Partition> out;
  out.emplace_back(std::vector<Part>{static_cast<Part>(n)});
  scan_almost_consecutive(
      n, [&](const AlmostConsecutiveForm& f) { out.push_back(f.to_partition()); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_almost_consecutive(std::uint64_t n) {
  require_weight(n);
  std::uint64_t count = 1;
  scan_almost_consecutive(n, [&](const AlmostConsecutiveForm&) { ++count; });
  return count;
}

std::vector<Partition> enumerate(std::uint64_t n, PartitionClass c) {
  switch (c) {
  case PartitionClass::Distinct:
    return enumerate_distinct(n);
  case PartitionClass::Consecutive:
    return enumerate_consecutive(n);
  case PartitionClass::AlmostConsecutive:
    return enumerate_almost_consecutive(n);
  }
  return {};
}

StatWeight StatWeight::one() {
  return {"one", [](std::uint64_t, std::uint64_t) -> std::int64_t { return 1; }};
}

StatWeight StatWeight::sign() {
  return {"sign", [](std::uint64_t length, std::uint64_t) -> std::int64_t {
            return length % 2 ? -1 : 1;
          }};
}

StatWeight StatWeight::signed_smallest() {
  return {"signed_smallest", [](std::uint64_t length, std::uint64_t smallest) {
            const auto s = static_cast<std::int64_t>(smallest);
            return length % 2 ? -s : s;
          }};
}

StatWeight StatWeight::random_table(std::uint64_t seed, std::uint64_t max_index,
                                    int lo, int hi) {
  if (lo > hi)
    throw InvalidInput("random weight range is empty");
  std::mt19937_64 engine(seed);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  // Modular reduction keeps the draw reproducible across standard libraries.
  auto table = std::make_shared<std::vector<std::int8_t>>(max_index * max_index);
  for (auto& v : *table)
    v = static_cast<std::int8_t>(lo + static_cast<int>(engine() % span));
  return {"random:" + std::to_string(seed),
          [table, max_index](std::uint64_t length,
                             std::uint64_t smallest) -> std::int64_t {
            if (length < 1 || smallest < 1 || length > max_index ||
                smallest > max_index)
              throw InvalidInput("random weight queried outside its table");
            return (*table)[(length - 1) * max_index + (smallest - 1)];
          }};
}

BigInt weighted_sum(std::uint64_t n, PartitionClass c, const StatWeight& f) {
  BigInt total = 0;
  if (c == PartitionClass::Distinct) {
    for_each_distinct(n, [&](std::span<const Part> parts) {
      total += f(parts.size(), parts.front());
    });
    return total;
  }
  for (const auto& p : enumerate(n, c))
    total += f(p.length(), p.smallest());
  return total;
}

StatHistogram::StatHistogram(std::uint64_t n, PartitionClass c) : width_(n) {
  if (c == PartitionClass::Distinct) {
    for_each_distinct(n, [&](std::span<const Part> parts) {
      add(parts.size(), parts.front());
    });
    return;
  }
  for (const auto& p : enumerate(n, c))
    add(p.length(), p.smallest());
}

void StatHistogram::add(std::uint64_t length, std::uint64_t smallest) {
  if (rows_.size() < length)
    rows_.resize(length, std::vector<std::uint64_t>(width_, 0));
  ++rows_[length - 1][smallest - 1];
  ++total_;
}

std::uint64_t StatHistogram::count(std::uint64_t length,
                                   std::uint64_t smallest) const {
  if (length < 1 || length > rows_.size() || smallest < 1 || smallest > width_)
    return 0;
  return rows_[length - 1][smallest - 1];
}

BigInt StatHistogram::apply(const StatWeight& f) const {
  BigInt total = 0;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (std::size_t s = 0; s < width_; ++s)
      if (const auto c = rows_[k][s])
        total += BigInt(c) * f(k + 1, s + 1);
  return total;
}

}  // namespace partlab
