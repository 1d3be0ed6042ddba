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

#include "bijection.hpp"

#include "errors.hpp"

namespace partlab {

namespace {

Part top_gap(std::span<const Part> parts) {
  return parts[parts.size() - 1] - parts[parts.size() - 2];
}

// Shared by apply_g and the scan so both walk the same domain.
bool g_in_place(std::vector<Part>& parts) {
  for (std::size_t i = parts.size(); i-- > 1;) {
    if (parts[i] > parts[i - 1] + 1) {
      --parts[i];
      return true;
    }
  }
  return false;
}

}  // namespace

const char* to_string(Region r) noexcept {
  switch (r) {
  case Region::Singleton:
    return "singleton";
  case Region::S1:
    return "S1";
  case Region::S2:
    return "S2";
  case Region::S3:
    return "S3";
  }
  return "?";
}

Partition apply_g(const Partition& p) {
  std::vector<Part> parts(p.parts().begin(), p.parts().end());
  if (!g_in_place(parts))
    throw DomainError("g is undefined on the consecutive partition " +
                      p.to_string());
  return Partition(std::move(parts));
}

int preimage_count(const Partition& p) noexcept {
  if (p.length() == 1)
    return 0;
  if (classify(p).almost_consecutive || top_gap(p.parts()) > 2)
    return 1;
  return 2;
}

std::vector<Partition> preimages_g(const Partition& p) {
  std::vector<Partition> out;
  std::vector<Part> scratch;
  for_each_distinct(p.weight() + 1, [&](std::span<const Part> parts) {
    scratch.assign(parts.begin(), parts.end());
    if (!g_in_place(scratch))
      return;
    if (std::equal(scratch.begin(), scratch.end(), p.parts().begin(),
                   p.parts().end()))
      out.emplace_back(std::vector<Part>(parts.begin(), parts.end()));
  });
  return out;
}

std::map<Partition, int> preimage_counts_by_scan(std::uint64_t n) {
  std::map<Partition, int> counts;
  for (auto& p : enumerate_distinct(n))
    counts.emplace(std::move(p), 0);
  std::vector<Part> scratch;
  for_each_distinct(n + 1, [&](std::span<const Part> parts) {
    scratch.assign(parts.begin(), parts.end());
    if (!g_in_place(scratch))
      return;
    auto it = counts.find(Partition(scratch));
    if (it == counts.end())
      throw std::logic_error("g left P_d(n)");
    ++it->second;
  });
  return counts;
}

Partition apply_h(const Partition& p) {
  if (p.length() < 2 || top_gap(p.parts()) <= 2)
    throw DomainError("h is only defined on S2; got " + p.to_string());
  std::vector<Part> parts(p.parts().begin(), p.parts().end());
  parts.back() -= 2;
  return Partition(std::move(parts));
}

Region classify_region(const Partition& p) noexcept {
  if (p.length() == 1)
    return Region::Singleton;
  const auto gap = top_gap(p.parts());
  if (gap > 2)
    return Region::S2;
  if (classify(p).almost_consecutive)
    return Region::S1;
  return Region::S3;
}

}  // namespace partlab
