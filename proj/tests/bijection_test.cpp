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
#include "partition.hpp"

#include <gtest/gtest.h>

#include <set>

namespace partlab {
namespace {

TEST(G, Examples) {
  EXPECT_EQ(apply_g(Partition({1, 2, 5})), Partition({1, 2, 4}));
  EXPECT_EQ(apply_g(Partition({1, 3, 4})), Partition({1, 2, 4}));
  EXPECT_EQ(apply_g(Partition({1, 7})), Partition({1, 6}));
  EXPECT_THROW(apply_g(Partition({3, 4})), DomainError);
  EXPECT_THROW(apply_g(Partition({7})), DomainError);
}

TEST(G, PreimageCountExamples) {
  EXPECT_EQ(preimage_count(Partition({7})), 0);
  EXPECT_EQ(preimage_count(Partition({3, 4})), 1);
  EXPECT_EQ(preimage_count(Partition({1, 2, 4})), 2);

  EXPECT_EQ(preimages_g(Partition({1, 2, 4})),
            (std::vector<Partition>{Partition({1, 2, 5}), Partition({1, 3, 4})}));
  EXPECT_TRUE(preimages_g(Partition({7})).empty());
  EXPECT_EQ(preimages_g(Partition({1, 6})), (std::vector<Partition>{Partition({1, 7})}));
}

TEST(G, ClosedFormMatchesBruteForceBelowFourteen) {
  for (std::uint64_t n = 1; n <= 13; ++n)
    for (const auto& [lambda, count] : preimage_counts_by_scan(n))
      EXPECT_EQ(preimage_count(lambda), count) << lambda.to_string();
}

TEST(G, ClosedFormFirstFailsAtFourteen) {
  // Frozen counterexample. The closed form predicts a second preimage, but
  // raising λ_2 gives (1,3,5,6), which g sends to (1,3,4,6).
  const Partition lambda({1, 2, 5, 6});
  EXPECT_EQ(preimages_g(lambda), (std::vector<Partition>{Partition({1, 2, 5, 7})}));
  EXPECT_EQ(preimage_count(lambda), 2);

  std::vector<Partition> mismatches;
  for (const auto& [l, count] : preimage_counts_by_scan(14))
    if (preimage_count(l) != count)
      mismatches.push_back(l);
  ASSERT_FALSE(mismatches.empty());
  EXPECT_EQ(mismatches.front(), lambda);
}

TEST(G, PreservesLengthAndSmallestAndIsTotal) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    std::uint64_t domain = 0;
    for_each_distinct(n + 1, [&](std::span<const Part> parts) {
      const Partition pi(std::vector<Part>(parts.begin(), parts.end()));
      if (classify(pi).consecutive)
        return;
      ++domain;
      const Partition image = apply_g(pi);
      ASSERT_EQ(image.weight(), n);
      ASSERT_EQ(image.length(), pi.length());
      ASSERT_EQ(image.smallest(), pi.smallest());
    });
    std::uint64_t scanned = 0;
    for (const auto& [l, count] : preimage_counts_by_scan(n))
      scanned += count;
    EXPECT_EQ(scanned, domain) << n;
  }
}

TEST(H, Examples) {
  EXPECT_EQ(apply_h(Partition({2, 5})), Partition({2, 3}));
  EXPECT_EQ(apply_h(Partition({1, 6})), Partition({1, 4}));
  EXPECT_THROW(apply_h(Partition({3, 4})), DomainError);
  EXPECT_THROW(apply_h(Partition({7})), DomainError);
}

TEST(H, BijectsS2OntoSmallerDistinctPartitions) {
  for (std::uint64_t n = 3; n <= 60; ++n) {
    std::set<Partition> images;
    for (const auto& p : enumerate_distinct(n)) {
      if (classify_region(p) != Region::S2)
        continue;
      const Partition image = apply_h(p);
      EXPECT_EQ(image.length(), p.length());
      EXPECT_EQ(image.smallest(), p.smallest());
      EXPECT_TRUE(images.insert(image).second) << "not injective at " << p.to_string();
    }
    std::set<Partition> target;
    for (const auto& p : enumerate_distinct(n - 2))
      if (p.length() > 1)
        target.insert(p);
    EXPECT_EQ(images, target) << n;
  }
}

TEST(Region, Examples) {
  EXPECT_EQ(classify_region(Partition({3, 4})), Region::S1);
  EXPECT_EQ(classify_region(Partition({2, 5})), Region::S2);
  EXPECT_EQ(classify_region(Partition({1, 2, 4})), Region::S3);
  EXPECT_EQ(classify_region(Partition({7})), Region::Singleton);
  EXPECT_EQ(classify_region(Partition({1, 6})), Region::S2);
  EXPECT_STREQ(to_string(Region::S3), "S3");
}

TEST(Region, PartitionsDistinctPartitions) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    std::uint64_t counts[4] = {};
    const auto all = enumerate_distinct(n);
    for (const auto& p : all) {
      const Region r = classify_region(p);
      ++counts[static_cast<int>(r)];
      const auto flags = classify(p);
      switch (r) {
      case Region::Singleton:
        EXPECT_EQ(p.length(), 1u);
        break;
      case Region::S1:
        EXPECT_TRUE(flags.almost_consecutive);
        EXPECT_LE(p.largest() - p.at(p.length() - 1), 2u);
        break;
      case Region::S2:
        EXPECT_GT(p.largest() - p.at(p.length() - 1), 2u);
        break;
      case Region::S3:
        EXPECT_FALSE(flags.almost_consecutive);
        EXPECT_LE(p.largest() - p.at(p.length() - 1), 2u);
        break;
      }
    }
    EXPECT_EQ(counts[0], 1u);
    EXPECT_EQ(counts[0] + counts[1] + counts[2] + counts[3], all.size());
  }
}

}  // namespace
}  // namespace partlab
