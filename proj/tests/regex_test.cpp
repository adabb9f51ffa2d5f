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

#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "affreach/regex.hpp"
#include "affreach/selftest.hpp"

namespace affreach {
namespace {

using selftest::all_words;
using selftest::matches;

// Random expression with unions and empty sets over {1..alphabet}.
RegexPtr random_regex(std::mt19937_64& rng, std::size_t alphabet, int depth,
                      RegexBuilder& b) {
  std::uniform_int_distribution<int> roll(0, 9);
  std::uniform_int_distribution<int> lit(1, static_cast<int>(alphabet));
  const int r = depth <= 0 ? roll(rng) % 4 : roll(rng);
  switch (r) {
    case 0:
      return b.empty_set();
    case 1:
      return b.epsilon();
    case 2:
    case 3:
      return b.literal(static_cast<MapIndex>(lit(rng)));
    case 4:
    case 5:
      return b.star(random_regex(rng, alphabet, depth - 1, b));
    case 6:
    case 7:
      return b.concat(random_regex(rng, alphabet, depth - 1, b),
                      random_regex(rng, alphabet, depth - 1, b));
    default:
      return b.union_of(random_regex(rng, alphabet, depth - 1, b),
                        random_regex(rng, alphabet, depth - 1, b));
  }
}

bool contains_kind(const RegexPtr& e, RegexKind k) {
  if (e->is(k)) return true;
  for (const RegexPtr& c : e->children()) {
    if (contains_kind(c, k)) return true;
  }
  return false;
}

TEST(RegexBuilderTest, Normalisations) {
  RegexBuilder b;
  const RegexPtr one = b.literal(1);
  const RegexPtr two = b.literal(2);
  const RegexPtr c = b.concat({b.concat(one, two), b.epsilon(), one});
  ASSERT_TRUE(c->is(RegexKind::kConcat));
  EXPECT_EQ(c->children().size(), 3u);
  const RegexPtr s = b.star(one);
  EXPECT_EQ(b.star(s), s);
  EXPECT_TRUE(b.star(b.epsilon())->is(RegexKind::kEpsilon));
  EXPECT_EQ(b.union_of(one, one), one);
  EXPECT_TRUE(b.concat(std::vector<RegexPtr>{})->is(RegexKind::kEpsilon));
  EXPECT_TRUE(b.union_of(std::vector<RegexPtr>{})->is(RegexKind::kEmptySet));
  // The empty set survives construction.
  EXPECT_TRUE(contains_kind(b.union_of(b.empty_set(), one), RegexKind::kEmptySet));
}

TEST(RegexBuilderTest, CapIsEnforcedBeforeAllocation) {
  RegexBuilder b(4);
  const RegexPtr c = b.concat({b.literal(1), b.literal(2), b.literal(3)});
  EXPECT_EQ(c->size(), 4u);
  try {
    b.concat(c, b.literal(4));  // 5 nodes after flattening
    FAIL() << "expected ResourceExceeded";
  } catch (const ResourceExceeded& e) {
    EXPECT_EQ(e.peak(), 4u);
    EXPECT_EQ(e.limit(), 4u);
  }
  EXPECT_EQ(b.peak_nodes(), 4u);
}

TEST(EliminateEmptyTest, Examples) {
  RegexBuilder b;
  const RegexPtr r =
      b.concat(b.union_of(b.empty_set(), b.literal(1)), b.literal(2));
  const RegexPtr e = eliminate_empty(r, b);
  EXPECT_EQ(to_string(e), to_string(b.concat(b.literal(1), b.literal(2))));
  EXPECT_TRUE(eliminate_empty(b.star(b.empty_set()), b)->is(RegexKind::kEpsilon));
  EXPECT_TRUE(eliminate_empty(b.concat(b.literal(1), b.empty_set()), b)
                  ->is(RegexKind::kEmptySet));
}

TEST(EliminateEmptyTest, PreservesLanguageAndIsIdempotent) {
  std::mt19937_64 rng(31);
  const std::vector<Word> words = all_words(2, 5);
  for (int t = 0; t < 300; ++t) {
    RegexBuilder b;
    const RegexPtr r = random_regex(rng, 2, 4, b);
    const RegexPtr e = eliminate_empty(r, b);
    EXPECT_TRUE(e->is(RegexKind::kEmptySet) ||
                !contains_kind(e, RegexKind::kEmptySet))
        << to_string(r);
    EXPECT_EQ(eliminate_empty(e, b), e);
    if (e != r) {
      EXPECT_LT(e->size(), r->size());
    } else {
      EXPECT_FALSE(contains_kind(r, RegexKind::kEmptySet) &&
                   !r->is(RegexKind::kEmptySet));
    }
    for (const Word& w : words) {
      ASSERT_EQ(matches(r, w), matches(e, w)) << to_string(r);
    }
  }
}

TEST(NegativeLiteralTest, Examples) {
  RegexBuilder b;
  EXPECT_TRUE(has_negative_literal(b.literal(1), AffineSystem({{-2, 0}}, 0, 0)));
  EXPECT_FALSE(
      has_negative_literal(b.star(b.literal(1)), AffineSystem({{2, 1}}, 0, 0)));
  EXPECT_FALSE(has_negative_literal(b.epsilon(), AffineSystem({{-2, 0}}, 0, 0)));
}

std::vector<std::string> clause_strings(const std::vector<Clause>& cs,
                                        RegexBuilder& b) {
  std::vector<std::string> out;
  for (const Clause& c : cs) out.push_back(to_string(clause_regex(c, b)));
  return out;
}

TEST(DnfTest, Examples) {
  RegexBuilder b;
  const RegexPtr one = b.literal(1);
  const RegexPtr two = b.literal(2);
  const RegexPtr three = b.literal(3);
  EXPECT_EQ(clause_strings(to_dnf(b.concat(one, b.union_of(two, three)), b), b),
            (std::vector<std::string>{to_string(b.concat(one, two)),
                                      to_string(b.concat(one, three))}));

  const std::vector<Clause> starred = to_dnf(b.star(b.union_of(one, two)), b);
  ASSERT_EQ(starred.size(), 1u);
  ASSERT_EQ(starred[0].size(), 1u);
  EXPECT_TRUE(structurally_equal(
      starred[0][0], b.star(b.concat(b.star(one), b.star(two)))));

  const std::vector<Clause> lit = to_dnf(one, b);
  ASSERT_EQ(lit.size(), 1u);
  EXPECT_EQ(lit[0], (Clause{one}));

  EXPECT_THROW(to_dnf(b.concat(one, b.empty_set()), b), PreconditionViolation);
}

TEST(DnfTest, UnionFreeAndLanguagePreserving) {
  std::mt19937_64 rng(32);
  const std::vector<Word> words = all_words(3, 5);
  for (int t = 0; t < 300; ++t) {
    RegexBuilder b;
    const RegexPtr r = eliminate_empty(random_regex(rng, 3, 4, b), b);
    if (r->is(RegexKind::kEmptySet)) continue;
    const std::vector<Clause> clauses = to_dnf(r, b);
    std::vector<RegexPtr> as_regex;
    for (const Clause& c : clauses) {
      for (const RegexPtr& f : c) {
        EXPECT_TRUE(f->is(RegexKind::kLiteral) || f->is(RegexKind::kStar));
        EXPECT_FALSE(contains_kind(f, RegexKind::kUnion)) << to_string(r);
      }
      as_regex.push_back(clause_regex(c, b));
    }
    for (const Word& w : words) {
      bool any = false;
      for (const RegexPtr& c : as_regex) any = any || matches(c, w);
      ASSERT_EQ(any, matches(r, w)) << to_string(r);
    }
  }
}

TEST(DnfTest, ClauseExplosionHitsTheCap) {
  RegexBuilder b(2000);
  std::vector<RegexPtr> parts;
  for (int i = 0; i < 12; ++i) parts.push_back(b.union_of(b.literal(1), b.literal(2)));
  const RegexPtr r = b.concat(parts);  // 2^12 clauses
  try {
    to_dnf(r, b);
    FAIL() << "expected ResourceExceeded";
  } catch (const ResourceExceeded& e) {
    EXPECT_LE(e.peak(), 2000u);
  }
}

TEST(EnumerateLanguageTest, Examples) {
  RegexBuilder b;
  EXPECT_EQ(enumerate_language(b.star(b.literal(1)), 2),
            (std::set<Word>{{}, {1}, {1, 1}}));
  EXPECT_TRUE(enumerate_language(b.empty_set(), 4).empty());
  EXPECT_TRUE(enumerate_language(b.concat(b.literal(1), b.literal(2)), 1).empty());
}

TEST(EnumerateLanguageTest, AgreesWithMatcher) {
  std::mt19937_64 rng(33);
  const std::vector<Word> words = all_words(2, 6);
  for (int t = 0; t < 200; ++t) {
    RegexBuilder b;
    const RegexPtr r = random_regex(rng, 2, 4, b);
    std::set<Word> expected;
    for (const Word& w : words) {
      if (matches(r, w)) expected.insert(w);
    }
    EXPECT_EQ(enumerate_language(r, 6), expected) << to_string(r);
  }
}

}  // namespace
}  // namespace affreach
