// Copyright 2026 The affreach Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <optional>

#include <gtest/gtest.h>

#include "affreach/oracle.hpp"
#include "affreach/selftest.hpp"
#include "affreach/solver.hpp"

namespace affreach {
namespace {

// Length of the shortest word of length <= max_len taking x to y with every
// orbit value inside [-bound, bound] (and nonnegative over N).
std::optional<std::size_t> shortest_by_enumeration(const AffineSystem& sys,
                                                   std::size_t max_len,
                                                   const Int& bound) {
  std::optional<std::size_t> best;
  for (const Word& w : selftest::all_words(sys.size(), max_len)) {
    if (best && w.size() >= *best) continue;
    const OrbitResult r = apply_word(sys, w, sys.x());
    if (r.value != sys.y()) continue;
    const bool in_box = std::all_of(r.orbit.begin(), r.orbit.end(),
                                    [&](const Int& v) { return abs(v) <= bound; });
    if (!in_box) continue;
    if (sys.domain() == Domain::kNaturals && !is_valid_orbit(sys, w, sys.x())) {
      continue;
    }
    best = w.size();
  }
  return best;
}

TEST(BfsOracleTest, ShortestPathUnderDoublingPlusOneAndShift) {
  const AffineSystem s({{2, 1}, {1, -3}}, 0, 6);
  const OracleAnswer o = bfs_oracle(s, 1000, 20);
  ASSERT_TRUE(o.found());
  EXPECT_EQ(o.path->size(), shortest_by_enumeration(s, 7, 1000));
  EXPECT_EQ(o.path->size(), 6u);
  EXPECT_EQ(apply_word(s, *o.path, 0).value, 6);
  EXPECT_TRUE(check_witness(s, RLEWord::from_word(*o.path)));
  // The longer orbit 0 -> 1 -> 3 -> 7 -> 15 -> 12 -> 9 -> 6 is also valid.
  EXPECT_EQ(apply_word(s, {1, 1, 1, 1, 2, 2, 2}, 0).value, 6);
}

TEST(BfsOracleTest, OrbitThatNeverHitsTheTarget) {
  EXPECT_FALSE(bfs_oracle(AffineSystem({{2, 1}}, 0, 6), 1000, 20).found());
}

TEST(BfsOracleTest, EqualEndpointsGiveEmptyPath) {
  const OracleAnswer o = bfs_oracle(AffineSystem({{2, 1}}, 4, 4), 10, 1);
  ASSERT_TRUE(o.found());
  EXPECT_TRUE(o.path->empty());
}

TEST(BfsOracleTest, NaturalsPruneNegativeValues) {
  // Over Z: 1 -> -1 -> 2; over N the middle value is forbidden.
  const std::vector<AffineMap> maps{{1, -2}, {-1, 1}};
  EXPECT_TRUE(bfs_oracle(AffineSystem(maps, 1, 2), 100, 5).found());
  EXPECT_FALSE(
      bfs_oracle(AffineSystem(maps, 1, 2, Domain::kNaturals), 100, 5).found());
}

TEST(BfsOracleTest, ExactPathBeyondMachineWords) {
  const Int big = Int(1) << 80;
  const AffineSystem s({{2, 0}}, 1, big);
  const OracleAnswer o = bfs_oracle(s, big, 100);
  ASSERT_TRUE(o.found());
  EXPECT_EQ(o.path->size(), 80u);
}

TEST(BfsOracleTest, PathLengthsAreMinimal) {
  RandomProfile p;
  p.max_maps = 3;
  p.max_xy = 6;
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    p.kind = kAllProfileKinds[seed % std::size(kAllProfileKinds)];
    p.domain = seed % 2 ? Domain::kNaturals : Domain::kIntegers;
    const AffineSystem s = random_system(seed, p);
    const std::optional<std::size_t> expected =
        shortest_by_enumeration(s, 6, 1000);
    const OracleAnswer o = bfs_oracle(s, 1000, 6);
    ASSERT_EQ(o.found(), expected.has_value()) << internal::describe(s);
    if (!o.found()) continue;
    ++found;
    EXPECT_EQ(o.path->size(), *expected);
    EXPECT_EQ(apply_word(s, *o.path, s.x()).value, s.y());
    EXPECT_TRUE(check_witness(s, RLEWord::from_word(*o.path)));
  }
  EXPECT_GT(found, 20u);
}

TEST(BfsOracleTest, DenseAndExactSearchesAgree) {
  RandomProfile p;
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    p.kind = kAllProfileKinds[seed % std::size(kAllProfileKinds)];
    const AffineSystem s = random_system(seed, p);
    // 10^7 + 1 is past the dense threshold, so this runs the exact search.
    const OracleAnswer dense = bfs_oracle(s, 10'000'000, 12);
    const OracleAnswer exact = bfs_oracle(s, 10'000'001, 12);
    ASSERT_EQ(dense.found(), exact.found()) << internal::describe(s);
    if (dense.found()) {
      EXPECT_EQ(dense.path->size(), exact.path->size());
    }
  }
}

TEST(BfsReachableValuesTest, RecordsFirstDepth) {
  const auto seen = bfs_reachable_values(AffineSystem({{2, 1}}, 0, 0), 100, 4);
  EXPECT_EQ(seen.at(0), 0u);
  EXPECT_EQ(seen.at(1), 1u);
  EXPECT_EQ(seen.at(15), 4u);
  EXPECT_FALSE(seen.count(31));
}

TEST(KnapsackTest, SystemShape) {
  const AffineSystem s = knapsack_to_system({{3, 5}, 11});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.map(1), (AffineMap{1, 3}));
  EXPECT_EQ(s.map(2), (AffineMap{1, 5}));
  EXPECT_EQ(s.x(), 0);
  EXPECT_EQ(s.y(), 11);

  const AffineSystem one = knapsack_to_system({{1}, 0});
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.y(), 0);

  const AffineSystem dup = knapsack_to_system({{2, 2}, 4});
  EXPECT_EQ(dup.size(), 1u);
  EXPECT_EQ(dup.input_size(), 2u);
  EXPECT_EQ(dup.map(1), (AffineMap{1, 2}));
  EXPECT_EQ(knapsack_to_system({{2}, 4}, Domain::kNaturals).domain(),
            Domain::kNaturals);
}

TEST(KnapsackTest, DynamicProgram) {
  // 3a + 5b for a, b >= 0 and at most 7: 0, 3, 5, 6.
  EXPECT_FALSE(knapsack_dp({{3, 5}, 7}));
  EXPECT_TRUE(knapsack_dp({{3, 5}, 11}));
  EXPECT_FALSE(knapsack_dp({{2, 3}, 1}));
  EXPECT_TRUE(knapsack_dp({{2, 3}, 0}));
  EXPECT_THROW(knapsack_dp({{}, 3}), PreconditionViolation);
  EXPECT_THROW(knapsack_dp({{0, 3}, 3}), PreconditionViolation);
  EXPECT_THROW(knapsack_dp({{2}, 1001}, 1000), ResourceExceeded);
}

TEST(KnapsackTest, ReductionMatchesDynamicProgram) {
  std::size_t checked = 0;
  for (int w1 = 1; w1 <= 9; ++w1) {
    for (int w2 = w1; w2 <= 9; ++w2) {
      KnapsackInstance inst;
      inst.weights = w1 == w2 ? std::vector<std::int64_t>{w1}
                              : std::vector<std::int64_t>{w1, w2};
      for (int c = 0; c <= 50; ++c) {
        inst.capacity = c;
        const bool dp = knapsack_dp(inst);
        ASSERT_EQ(decide_z(knapsack_to_system(inst)).reachable, dp)
            << w1 << "," << w2 << " C=" << c;
        ASSERT_EQ(decide_n(knapsack_to_system(inst, Domain::kNaturals)).reachable,
                  dp)
            << w1 << "," << w2 << " C=" << c;
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 45u * 51u);
}

TEST(RandomSystemTest, ProfileContracts) {
  RandomProfile p;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    p.kind = ProfileKind::kAllExpanding;
    for (const AffineMap& f : random_system(seed, p).maps()) {
      EXPECT_GT(abs(f.a), 1);
    }
    p.kind = ProfileKind::kWithShift;
    const AffineSystem shift = random_system(seed, p);
    EXPECT_TRUE(std::any_of(shift.maps().begin(), shift.maps().end(),
                            [](const AffineMap& f) { return f.a == 1 && f.b != 0; }));
    p.kind = ProfileKind::kTwoInvolutions;
    const AffineSystem inv = random_system(seed, p);
    EXPECT_GE(std::count_if(inv.maps().begin(), inv.maps().end(),
                            [](const AffineMap& f) { return f.a == -1; }),
              2);
    p.kind = ProfileKind::kWithConstant;
    const AffineSystem c = random_system(seed, p);
    EXPECT_TRUE(std::any_of(c.maps().begin(), c.maps().end(),
                            [](const AffineMap& f) { return f.a == 0; }));
    p.kind = ProfileKind::kNaturalsWithNegative;
    const AffineSystem n = random_system(seed, p);
    EXPECT_EQ(n.domain(), Domain::kNaturals);
    EXPECT_GE(n.x(), 0);
    EXPECT_GE(n.y(), 0);
    EXPECT_TRUE(std::any_of(n.maps().begin(), n.maps().end(),
                            [](const AffineMap& f) { return f.a < 0; }));
    p.kind = ProfileKind::kMixed;
    const AffineSystem m = random_system(seed, p);
    EXPECT_LE(m.size(), 3u);
    EXPECT_LE(abs(m.x()), 10);
    for (const AffineMap& f : m.maps()) {
      EXPECT_LE(abs(f.a), 3);
      EXPECT_LE(abs(f.b), 4);
    }
  }
}

TEST(RandomSystemTest, SameSeedSameInstance) {
  for (ProfileKind k : kAllProfileKinds) {
    RandomProfile p;
    p.kind = k;
    const AffineSystem a = random_system(99, p);
    const AffineSystem b = random_system(99, p);
    EXPECT_EQ(internal::describe(a), internal::describe(b));
  }
}

}  // namespace
}  // namespace affreach
