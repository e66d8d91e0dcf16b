/* Copyright 2026 The modmac Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "modmac/partition.hpp"

using namespace modmac;

TEST(Partition, ValidatesInput) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
  EXPECT_NO_THROW(Partition({}));
  EXPECT_EQ(Partition::from_unsorted({1, 3, 1}), Partition({3, 1, 1}));
}

TEST(Partition, Accessors) {
  const Partition p{4, 2, 2, 1};
  EXPECT_EQ(p.weight(), 9);
  EXPECT_EQ(p.length(), 4);
  EXPECT_EQ(p.largest(), 4);
  EXPECT_EQ(p[0], 4);
  EXPECT_EQ(p[7], 0);
  EXPECT_EQ(p.mult(2), 2);
  EXPECT_EQ(p.mult(3), 0);
  EXPECT_EQ(p.to_string(), "(4,2,2,1)");
  EXPECT_EQ(Partition{}.to_string(), "()");
  const auto mults = p.multiplicities();
  EXPECT_EQ(Partition::from_multiplicities(mults), p);
}

TEST(Partition, Classes) {
  EXPECT_TRUE(Partition({3, 1, 1}).is_regular(2));
  EXPECT_FALSE(Partition({3, 1, 1}).is_reduced(2));
  EXPECT_TRUE(Partition({4, 3, 1}).is_reduced(2));
  EXPECT_FALSE(Partition({4, 3, 1}).is_regular(2));
  EXPECT_TRUE(Partition({2, 2, 1}).is_reduced(3));
  EXPECT_TRUE(Partition({}).is_regular(5));
  EXPECT_TRUE(Partition({3, 2}).is_strict());
  EXPECT_FALSE(Partition({2, 2}).is_strict());
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate(4, PartitionClass::m_regular, 2), (std::vector<Partition>{{3, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(enumerate(4, PartitionClass::m_reduced, 2), (std::vector<Partition>{{4}, {3, 1}}));
  EXPECT_EQ(enumerate(0, PartitionClass::all, 3), (std::vector<Partition>{Partition{}}));
  EXPECT_THROW(enumerate(3, PartitionClass::all, 1), std::invalid_argument);
}

TEST(Enumerate, CountsMatchPartitionNumbers) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
  for (int n = 0; n < static_cast<int>(p.size()); ++n) EXPECT_EQ(all_partitions(n).size(), p[n]) << n;
}

TEST(Enumerate, ReverseLexOrderWithoutDuplicates) {
  for (int n = 1; n <= 12; ++n) {
    const auto ps = all_partitions(n);
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
  }
}

TEST(CountCheck, Examples) {
  auto c = count_check(3, 3);
  EXPECT_EQ(c.regular_count, 2u);
  EXPECT_EQ(c.reduced_count, 2u);
  EXPECT_TRUE(c.equal);
  c = count_check(4, 2);
  EXPECT_EQ(c.regular_count, 2u);
  EXPECT_TRUE(c.equal);
  c = count_check(0, 5);
  EXPECT_EQ(c.regular_count, 1u);
  EXPECT_EQ(c.reduced_count, 1u);
}

TEST(Dominance, Examples) {
  EXPECT_EQ(dominance_compare({4}, {3, 1}), Dominance::greater);
  EXPECT_EQ(dominance_compare({3, 1}, {4}), Dominance::less);
  EXPECT_EQ(dominance_compare({3, 1, 1, 1}, {2, 2, 2}), Dominance::incomparable);
  EXPECT_EQ(dominance_compare({2, 2}, {2, 2}), Dominance::equal);
  EXPECT_THROW(dominance_compare({2}, {1}), std::invalid_argument);
}

TEST(Dominance, IsAPartialOrder) {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = all_partitions(n);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        if (dominates(a, b) && dominates(b, a)) {
          EXPECT_EQ(a, b);
        }
        for (const auto& c : ps)
          if (dominates(a, b) && dominates(b, c)) {
            EXPECT_TRUE(dominates(a, c));
          }
      }
  }
}

TEST(Dominance, LinearExtension) {
  EXPECT_EQ(dominance_linear_extension(all_partitions(4)),
            (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(dominance_linear_extension({{2, 2}, {4}}), (std::vector<Partition>{{4}, {2, 2}}));
  EXPECT_EQ(dominance_linear_extension({Partition{}}), (std::vector<Partition>{Partition{}}));
  EXPECT_THROW(dominance_linear_extension({{2}, {1}}), std::invalid_argument);
  // a dominating partition never comes later
  for (int n = 1; n <= 10; ++n) {
    const auto order = dominance_linear_extension(all_partitions(n));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j) EXPECT_FALSE(dominates(order[j], order[i]) && order[i] != order[j]);
  }
}

TEST(MultisetOps, Examples) {
  EXPECT_EQ(partition_union({2, 1}, {1}), Partition({2, 1, 1}));
  EXPECT_EQ(partition_subtract({2, 2, 1}, {2, 1}), Partition({2}));
  EXPECT_THROW(partition_subtract({2, 1}, {1, 1}), std::invalid_argument);
  EXPECT_TRUE(Partition({3, 2, 2}).contains_multiset({2, 2}));
  EXPECT_FALSE(Partition({3, 2}).contains_multiset({2, 2}));
}

TEST(MultisetOps, UnionSubtractInverse) {
  std::mt19937 gen(42);
  std::uniform_int_distribution<int> n(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pa = all_partitions(n(gen));
    const auto pb = all_partitions(n(gen));
    const Partition a = pa[gen() % pa.size()];
    const Partition b = pb[gen() % pb.size()];
    const Partition u = partition_union(a, b);
    EXPECT_EQ(u.weight(), a.weight() + b.weight());
    EXPECT_EQ(partition_subtract(u, b), a);
    EXPECT_EQ(partition_subtract(u, a), b);
  }
}

TEST(Combinatorics, ZAndFactorials) {
  EXPECT_EQ(z_of({3, 1}), 3);
  EXPECT_EQ(z_of({2, 2}), 8);
  EXPECT_EQ(z_of({1, 1, 1}), 6);
  EXPECT_EQ(z_of({}), 1);
  EXPECT_EQ(mult_factorial({2, 2, 2, 1, 1}), 12);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  // sum over partitions of n of n!/z_lambda = n!
  for (int n = 1; n <= 10; ++n) {
    std::int64_t total = 0;
    for (const auto& p : all_partitions(n)) total += factorial(n) / z_of(p);
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(Partition, HashDistinguishes) {
  std::set<std::size_t> hashes;
  const auto ps = all_partitions(10);
  for (const auto& p : ps) hashes.insert(std::hash<Partition>{}(p));
  EXPECT_GT(hashes.size(), ps.size() - 3);
}
