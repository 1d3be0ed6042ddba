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

#include "partition.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace partlab {

enum class Region { Singleton, S1, S2, S3 };

const char* to_string(Region r) noexcept;

/// Decrements λ_m, where m is the largest index with λ_m > λ_{m-1} + 1.
/// Throws DomainError for singletons and consecutive partitions.
Partition apply_g(const Partition& p);

/// Preimage count under g read off λ alone: 0 for a singleton, 1 when λ is
/// almost consecutive or its top gap exceeds 2, 2 otherwise.
int preimage_count(const Partition& p) noexcept;

/// Brute force: every π in P_d(n+1) \ P_c(n+1) with g(π) = λ.
std::vector<Partition> preimages_g(const Partition& p);

/// Brute-force preimage counts for every λ in P_d(n) at once, from a single
/// pass over P_d(n+1). Partitions with no preimage are present with count 0.
std::map<Partition, int> preimage_counts_by_scan(std::uint64_t n);

/// Lowers the largest part by 2. Throws DomainError unless λ is in S2.
Partition apply_h(const Partition& p);

Region classify_region(const Partition& p) noexcept;

}  // namespace partlab
