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

#include <gtest/gtest.h>

#include "palwidth/word.hpp"
#include "palwidth/word_io.hpp"
#include "test_support.hpp"

namespace palwidth {
namespace {

GroupContext const ctx3(3, 2);

Word W(std::string const& s, GroupContext const& ctx = ctx3) {
  return parse_word(s, ctx);
}

TEST(ParseWord, Syllables) {
  EXPECT_EQ(W("x1^2 x2^-1"), (Word{{1, 2}, {2, -1}}));
}

TEST(ParseWord, CommutatorConvention) {
  EXPECT_EQ(W("[x2,x1]"), (Word{{2, -1}, {1, -1}, {2, 1}, {1, 1}}));
}

TEST(ParseWord, FreeReduction) {
  EXPECT_TRUE(W("x1 x1^-1").empty());
  EXPECT_TRUE(W("1").empty());
  EXPECT_TRUE(W("  1 ").empty());
  EXPECT_TRUE(W("").empty());
}

TEST(ParseWord, GroupsPowersAndNesting) {
  EXPECT_EQ(W("(x1 x2)^2"), (Word{{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(W("(x1 x2 x1^-1)^1000"), (Word{{1, 1}, {2, 1000}, {1, -1}}));
  EXPECT_EQ(W("[x2,x1]^-1"), W("[x1,x2]"));
  EXPECT_EQ(W("[[x2,x1],x1]"), commutator_word(W("[x2,x1]"), W("x1")));
  EXPECT_EQ(W("x1x2"), W("x1 x2"));
  EXPECT_EQ(W("x3^123456789012345678901234567890"),
            Word::generator(3, BigInt("123456789012345678901234567890")));
}

TEST(ParseWord, Errors) {
  EXPECT_THROW(W("x4"), parse_error);
  EXPECT_THROW(W("x0"), parse_error);
  EXPECT_THROW(W("x1^"), parse_error);
  EXPECT_THROW(W("[x1 x2]"), parse_error);
  EXPECT_THROW(W("(x1"), parse_error);
  EXPECT_THROW(W("y1"), parse_error);
  EXPECT_THROW(W("1 x1"), parse_error);
  try {
    W("x1 x2 ?");
    FAIL();
  } catch (parse_error const& e) {
    EXPECT_EQ(e.position(), 6U);
  }
  try {
    W("x1 x7");
    FAIL();
  } catch (parse_error const& e) {
    EXPECT_EQ(e.position(), 3U);
  }
}

TEST(FormatWord, Examples) {
  EXPECT_EQ(format_word(Word{{1, 2}, {2, -1}}), "x1^2 x2^-1");
  EXPECT_EQ(format_word(Word()), "1");
  EXPECT_EQ(format_word(Word{{2, 1}}), "x2");
}

TEST(Concat, Examples) {
  EXPECT_EQ(concat(W("x1 x2"), W("x2^-1 x3")), W("x1 x3"));
  EXPECT_EQ(concat(W("x1"), W("x1")), W("x1^2"));
  Word w = W("x1 x2^3 x3^-2 x1");
  EXPECT_TRUE(concat(w, invert(w)).empty());
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(W("x1 x2^3")), W("x2^-3 x1^-1"));
  EXPECT_TRUE(invert(Word()).empty());
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(W("x1 x2^3")), W("x2^3 x1"));
  EXPECT_EQ(reverse(W("x1^2")), W("x1^2"));
  EXPECT_EQ(reverse(invert(W("x1 x2"))), W("x1^-1 x2^-1"));
  EXPECT_EQ(invert(reverse(W("x1 x2"))), W("x1^-1 x2^-1"));
}

TEST(IsPalindromeWord, Examples) {
  EXPECT_TRUE(is_palindrome_word(W("x1 x2 x1")));
  EXPECT_FALSE(is_palindrome_word(W("x1 x2")));
  EXPECT_TRUE(is_palindrome_word(W("x1^2 x2^-3 x1^2")));
  EXPECT_TRUE(is_palindrome_word(Word()));
  EXPECT_FALSE(is_palindrome_word(W("x1^2 x2 x1")));
}

TEST(MakePalindrome, Examples) {
  EXPECT_EQ(make_palindrome(W("x1 x2"), 3, 2), W("x1 x2 x3^2 x2 x1"));
  EXPECT_EQ(make_palindrome(Word(), 1, 5), W("x1^5"));
  EXPECT_EQ(make_palindrome(W("x1"), 1, 1), W("x1^3"));
}

TEST(CommutatorWord, Examples) {
  EXPECT_EQ(commutator_word(W("x1"), W("x2")), W("x1^-1 x2^-1 x1 x2"));
  Word w = W("x1 x3 x2^4");
  EXPECT_TRUE(commutator_word(w, w).empty());
  EXPECT_EQ(commutator_word(W("x2"), W("x1")), W("x2^-1 x1^-1 x2 x1"));
}

TEST(PowerWord, MatchesRepeatedConcatenation) {
  test::Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    Word w = test::random_word(rng, 3, 6, 3);
    auto m = test::uniform(rng, -5, 5);
    Word expected;
    Word base = m >= 0 ? w : invert(w);
    for (int i = 0; i < std::abs(m); ++i) {
      expected.append(base);
    }
    EXPECT_EQ(power_word(w, m), expected) << format_word(w) << " ^ " << m;
  }
}

TEST(WordProperties, RandomizedInvariants) {
  test::Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    Word a = test::random_word(rng, 3, 8, 3);
    Word b = test::random_word(rng, 3, 8, 3);
    Word c = test::random_word(rng, 3, 8, 3);
    EXPECT_EQ(reverse(reverse(a)), a);
    EXPECT_EQ(invert(invert(a)), a);
    EXPECT_EQ(reverse(invert(a)), invert(reverse(a)));
    EXPECT_EQ(concat(concat(a, b), c), concat(a, concat(b, c)));
    EXPECT_EQ(parse_word(format_word(a), ctx3), a);

    // Letterwise reduction in a different order reaches the same word.
    std::vector<Syllable> letters;
    for (auto const* w : {&a, &b, &c}) {
      for (auto const& s : w->syllables()) {
        auto k = static_cast<int>(abs(s.exp));
        for (int i = 0; i < k; ++i) {
          letters.push_back(Syllable{s.gen, s.exp > 0 ? 1 : -1});
        }
      }
    }
    Word from_right;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      from_right = concat(Word{*it}, from_right);
    }
    EXPECT_EQ(from_right, concat({a, b, c}));

    auto g = static_cast<Generator>(test::uniform(rng, 1, 3));
    Word p = make_palindrome(a, g, test::uniform(rng, -4, 4));
    EXPECT_TRUE(is_palindrome_word(p));
    EXPECT_TRUE(is_palindrome_word(invert(p)));
    // Reduced words never have equal adjacent generators.
    for (std::size_t i = 1; i < p.size(); ++i) {
      EXPECT_NE(p[i - 1].gen, p[i].gen);
    }
  }
}

}  // namespace
}  // namespace palwidth
