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
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace partlab {

using Part = std::uint32_t;

// Largest weight accepted by any enumerator.
inline constexpr std::uint64_t kMaxWeight = 1'000'000;

// P_d(n) grows exponentially; listing or visiting it is refused beyond this.
inline constexpr std::uint64_t kMaxDistinctWeight = 150;

/// A partition into distinct parts, stored with parts strictly increasing.
class Partition {
public:
  /// Throws InvalidInput unless `parts` is non-empty, positive and strictly
  /// increasing.
  explicit Partition(std::vector<Part> parts);

  std::span<const Part> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  Part smallest() const noexcept { return parts_.front(); }
  Part largest() const noexcept { return parts_.back(); }
  std::uint64_t weight() const noexcept;

  // 1-based access, matching the usual λ_1 < ... < λ_k indexing.
  Part at(std::size_t i) const { return parts_.at(i - 1); }

  std::string to_string() const;  // "(1,2,4)"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<Part> parts_;
};

/// k, (k+m), (k+m+1), ..., (k+m+ℓ-1): a multi-part almost consecutive
/// partition described by its smallest part, the gap above it and the length
/// of the consecutive run.
struct AlmostConsecutiveForm {
  std::uint64_t smallest = 1;  // k
  std::uint64_t gap = 1;       // m
  std::uint64_t run = 1;       // ℓ

  std::uint64_t weight() const noexcept {
    return smallest * (run + 1) + gap * run + run * (run - 1) / 2;
  }
  Partition to_partition() const;
};

enum class PartitionClass { Distinct, Consecutive, AlmostConsecutive };

const char* to_string(PartitionClass c) noexcept;
PartitionClass partition_class_from_string(const std::string& s);

struct ClassFlags {
  bool consecutive = false;
  bool almost_consecutive = false;
};

ClassFlags classify(const Partition& p) noexcept;
ClassFlags classify(std::span<const Part> parts) noexcept;

using PartsVisitor = std::function<void(std::span<const Part>)>;

/// Visits P_d(n) in ascending-lexicographic order without materializing it.
void for_each_distinct(std::uint64_t n, const PartsVisitor& visit);

std::vector<Partition> enumerate_distinct(std::uint64_t n);
std::vector<Partition> enumerate_consecutive(std::uint64_t n);
std::vector<Partition> enumerate_almost_consecutive(std::uint64_t n);
std::vector<Partition> enumerate(std::uint64_t n, PartitionClass c);

/// Number of almost consecutive partitions, by the same (k, m, ℓ) scan that
/// enumerate_almost_consecutive uses but without building the list.
std::uint64_t count_almost_consecutive(std::uint64_t n);

/// F(length, smallest) -> integer.
struct StatWeight {
  std::string name;
  std::function<std::int64_t(std::uint64_t length, std::uint64_t smallest)> fn;

  std::int64_t operator()(std::uint64_t length, std::uint64_t smallest) const {
    return fn(length, smallest);
  }

  static StatWeight one();
  static StatWeight sign();
  static StatWeight signed_smallest();

  /// Table-backed weight with entries drawn uniformly-ish from [lo, hi] by a
  /// 64-bit Mersenne twister; covers 1 <= length, smallest <= max_index and
  /// throws InvalidInput outside it.
  static StatWeight random_table(std::uint64_t seed, std::uint64_t max_index,
                                 int lo = -9, int hi = 9);
};

/// Σ F(#λ, s(λ)) over class(n), by enumeration.
BigInt weighted_sum(std::uint64_t n, PartitionClass c, const StatWeight& f);

/// Counts of (length, smallest) pairs over class(n), gathered by enumeration.
/// Every weighted sum over the class is a dot product with this table.
class StatHistogram {
public:
  StatHistogram() = default;
  StatHistogram(std::uint64_t n, PartitionClass c);

  std::uint64_t count(std::uint64_t length, std::uint64_t smallest) const;
  std::uint64_t total() const noexcept { return total_; }
  BigInt apply(const StatWeight& f) const;

private:
  void add(std::uint64_t length, std::uint64_t smallest);

  std::uint64_t width_ = 0;  // smallest ranges over 1..width_
  std::vector<std::vector<std::uint64_t>> rows_;  // rows_[length - 1]
  std::uint64_t total_ = 0;
};

}  // namespace partlab
