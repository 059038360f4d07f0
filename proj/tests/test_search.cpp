// Copyright 2026 The palwidth Authors
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

#include <set>

#include <gtest/gtest.h>

#include "palwidth/search.hpp"
#include "palwidth/word_io.hpp"
#include "test_support.hpp"

namespace palwidth {
namespace {

GroupContext const c22(2, 2);

Word W(std::string const& s, GroupContext const& ctx = c22) {
  return parse_word(s, ctx);
}

TEST(Enumerate, Examples) {
  auto one = enumerate_palindrome_words(GroupContext(1, 2), {1, 2, 1});
  EXPECT_EQ(one.size(), 4U);
  EXPECT_EQ(one.front().size(), 1U);
  EXPECT_EQ(abs(one.front()[0].exp), 1);
  EXPECT_EQ(enumerate_palindrome_words(c22, {1, 1, 1}).size(), 4U);
  // x_i^e alone, or x_i^e x_j^f x_i^e with j != i.
  EXPECT_EQ(enumerate_palindrome_words(c22, {3, 1, 1}).size(), 12U);
  EXPECT_EQ(enumerate_palindrome_words(c22, {3, 2, 1}).size(), 8U + 8U * 4U);
  EXPECT_THROW(enumerate_palindrome_words(c22, {0, 1, 1}), domain_error);
}

TEST(Enumerate, AllDistinctReducedPalindromesInOrder) {
  GroupContext c(3, 2);
  SearchBounds b{5, 2, 1};
  auto words = enumerate_palindrome_words(c, b);
  std::set<Word> seen(words.begin(), words.end());
  EXPECT_EQ(seen.size(), words.size());
  BigInt prev = 0;
  for (auto const& w : words) {
    EXPECT_TRUE(is_palindrome_word(w));
    EXPECT_LE(w.size(), 5U);
    EXPECT_EQ(w.size() % 2, 1U);
    BigInt m = 0;
    for (auto const& s : w.syllables()) {
      EXPECT_LE(abs(s.exp), 2);
      m = std::max(m, abs(s.exp));
    }
    EXPECT_GE(m, prev);
    prev = m;
  }
  // Count: centers 3*4, each half syllable multiplies by 2*4 choices.
  EXPECT_EQ(words.size(), 12U + 12U * 8U + 12U * 8U * 8U);
}

TEST(Search, CommutatorNeedsThree) {
  auto c = restricted_palindromic_length(W("[x2,x1]"), c22, {3, 2, 3});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->upper, 3U);
  EXPECT_TRUE(c->witness.verified);
  EXPECT_EQ(c->lower, 1U);
  EXPECT_EQ(c->lower_method, LowerMethod::parity);
  EXPECT_FALSE(restricted_palindromic_length(W("[x2,x1]"), c22, {3, 2, 2}));
}

TEST(Search, SmallCases) {
  PalindromeSearch s(c22, {3, 2, 3});
  EXPECT_EQ(s.query(W("1"))->upper, 0U);
  EXPECT_EQ(s.query(W("x1 x2 x1"))->upper, 1U);
  EXPECT_EQ(s.query(W("x1 x2"))->upper, 2U);
  EXPECT_EQ(s.query(W("x1 x2"))->lower, 2U);
  EXPECT_THROW(s.query(Word::generator(3)), domain_error);
}

TEST(Search, MonotoneInTheBounds) {
  test::Rng rng(31);
  GroupContext c23(2, 3);
  PalindromeSearch small(c23, {3, 2, 3});
  PalindromeSearch large(c23, {3, 3, 3});
  for (int t = 0; t < 30; ++t) {
    Word w = test::random_word(rng, 2, 4, 2);
    auto a = small.query(w);
    auto b = large.query(w);
    if (a) {
      ASSERT_TRUE(b);
      EXPECT_LE(b->upper, a->upper);
    }
    if (b) {
      EXPECT_TRUE(b->witness.verified);
      EXPECT_GE(b->upper, certified_lower_bound(w, c23));
    }
  }
}

TEST(Search, NeverBeatsExactN22Length) {
  PalindromeSearch s(c22, {3, 6, 3});
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      for (int g = -4; g <= 4; ++g) {
        auto e = Nil2Element::n22(a, b, g);
        auto exact = n22_exact_length(e).upper;
        auto found = s.query(to_word(e));
        ASSERT_TRUE(found);
        EXPECT_GE(found->upper, exact);
        EXPECT_LE(found->upper, 3U);
        if (exact <= 1) {
          EXPECT_EQ(found->upper, exact);
        }
      }
    }
  }
}

TEST(L1Check, Examples) {
  auto r = exhaustive_l1_check(5);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.pairs_checked, 4U * 11 * 11 * 11 * 11);
  EXPECT_TRUE(r.counterexamples.empty());
  auto z = exhaustive_l1_check(0);
  EXPECT_TRUE(z.holds);
  EXPECT_EQ(z.pairs_checked, 4U);
  EXPECT_THROW(exhaustive_l1_check(-1), domain_error);
}

}  // namespace
}  // namespace palwidth
