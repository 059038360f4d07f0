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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails or runs past its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "palwidth/palwidth.hpp"
#include "test_support.hpp"

namespace palwidth {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

Outcome coordinate_words() {
  Outcome o;
  for (std::uint32_t n = 1; n <= 6; ++n) {
    GroupContext ctx(n, 1);
    Word w;
    for (Generator i = 1; i <= n; ++i) {
      w.push(Syllable{i, 1});
    }
    auto f = abelian_decompose(w, n);
    o.require(f.verified && f.size() == n,
              "abelian_decompose factor count at n=" + std::to_string(n));
    o.require(parity_lower_bound(w, ctx) == n,
              "parity_lower_bound at n=" + std::to_string(n));
  }
  return o;
}

Outcome n22_box_sweep() {
  Outcome o;
  constexpr std::int64_t box = 6, gbox = 36;
  // Two-palindrome witnesses in this box need parameters up to 37.
  PalindromeSearch search(GroupContext(2, 2), SearchBounds{3, 40, 3});
  std::size_t max_len = 0, disagreements = 0, checked = 0;
  for (std::int64_t a = -box; a <= box; ++a) {
    for (std::int64_t b = -box; b <= box; ++b) {
      for (std::int64_t g = -gbox; g <= gbox; ++g) {
        auto c = n22_exact_length(Nil2Element::n22(a, b, g));
        max_len = std::max(max_len, c.upper);
        o.require(c.upper <= 3, "length above 3");
        o.require(check_certificate(c, c.exact()).ok, "certificate rejected");
        auto s = search.query(c.target);
        if (!s || s->upper != c.upper) {
          ++disagreements;
        }
        ++checked;
      }
    }
  }
  o.require(max_len == 3, "maximum length is not 3");
  o.require(n22_exact_length(Nil2Element::n22(0, 0, 1)).upper == 3,
            "[x2,x1] does not have length 3");
  o.require(disagreements == 0,
            std::to_string(disagreements) + " search disagreements");
  o.detail = o.ok ? std::to_string(checked) + " elements, 0 disagreements"
                  : o.detail;
  return o;
}

Outcome l1_replay() {
  Outcome o;
  auto r = exhaustive_l1_check(15);
  o.require(r.holds, "counterexample found");
  o.require(r.pairs_checked == 4ULL * 31 * 31 * 31 * 31, "pair count");
  if (o.ok) {
    o.detail = std::to_string(r.pairs_checked) + " pairs";
  }
  return o;
}

Outcome nn2_random() {
  Outcome o;
  test::Rng rng(2024);
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (int t = 0; t < 1000; ++t) {
      auto e = test::random_nil2(rng, n, 100);
      auto f = nn2_decompose(e);
      o.require(f.verified, "unverified factorization");
      o.require(f.size() <= 3 * (n - 1), "too many factors at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome nnr_random() {
  Outcome o;
  test::Rng rng(2025);
  for (auto [n, r] : {std::pair{2u, 3u}, {3u, 3u}, {2u, 4u}}) {
    GroupContext ctx(n, r);
    for (int t = 0; t < 200; ++t) {
      Word w = test::random_letter_word(rng, n, 12);
      auto form = commutator_form_decompose(w, ctx);
      o.require(equal_in_group(form.word(), w, ctx), "commutator form mismatch");
      for (auto const& step : form.layers) {
        GroupContext level = ctx.with_class(step.cls);
        Word prod;
        for (Generator i = 1; i <= n; ++i) {
          prod.append(commutator_word(step.a[i - 1], Word::generator(i)));
        }
        o.require(equal_in_group(prod, step.residual, level),
                  "layer identity fails in " + level.name());
      }
      auto f = nnr_decompose(w, ctx);
      o.require(f.verified, "unverified factorization");
      o.require(f.size() <= 3 * n, "too many factors in " + ctx.name());
    }
  }
  return o;
}

Outcome palcalc_suites() {
  Outcome o;
  test::Rng rng(2026);
  std::vector<GroupContext> contexts = {GroupContext(2, 2), GroupContext(3, 2),
                                        GroupContext(2, 3), GroupContext(3, 3)};
  auto verify = [](GroupContext const& c, Word target, std::vector<Word> fs) {
    return verify_factorization(
               Factorization{c, std::move(target), std::move(fs), false, {}})
        .verified;
  };
  auto pals = [&rng](std::uint32_t n, std::size_t k) {
    std::vector<Word> ps;
    for (std::size_t i = 0; i < k; ++i) {
      ps.push_back(test::random_palindrome(rng, n, 3, 4));
    }
    return ps;
  };
  for (int t = 0; t < 500; ++t) {
    auto const& c = contexts[t % contexts.size()];
    std::uint32_t const n = c.n();
    Word u = test::random_word(rng, n, 4, 4);

    auto one = pals(n, 1);
    auto f1 = conjugate_factorization(u, one);
    o.require(f1.size() == 2 && verify(c, concat({invert(u), one[0], u}), f1),
              "conjugate of one palindrome");

    std::size_t even = 2 * test::uniform(rng, 1, 3);
    auto pe = pals(n, even);
    auto f2 = conjugate_factorization(u, pe);
    o.require(f2.size() == even && verify(c, concat({invert(u), product(pe), u}), f2),
              "conjugate of an even count");

    std::size_t odd = 2 * test::uniform(rng, 1, 3) + 1;
    auto po = pals(n, odd);
    auto f3 = conjugate_factorization(u, po);
    o.require(f3.size() == odd + 1
                  && verify(c, concat({invert(u), product(po), u}), f3),
              "conjugate of an odd count");

    auto p = pals(n, 2);
    auto f4 = commutator_palindrome_factorization(u, p[0]);
    o.require(f4.size() == 3 && verify(c, commutator_word(u, p[0]), f4),
              "commutator with a palindrome");

    auto f5 = commutator_two_palindromes_factorization(u, p[0], p[1]);
    o.require(f5.size() == 4 && verify(c, commutator_word(u, concat(p[0], p[1])), f5),
              "commutator with two palindromes");

    GroupContext c2(n, 2);
    auto a = static_cast<Generator>(test::uniform(rng, 1, n));
    BigInt alpha = test::uniform(rng, -4, 4);
    auto syl = invert(u).syllables();
    std::shuffle(syl.begin(), syl.end(), rng);
    Word q1 = make_palindrome(u, a, alpha);
    Word q2 = make_palindrome(Word(syl), a, -alpha);
    BigInt m = test::uniform(rng, -6, 6);
    auto f6 = central_power_factorization(q1, q2, m, c2);
    o.require(f6.size() == 2 && verify(c2, power_word(concat(q1, q2), m), f6),
              "central power");
  }
  if (o.ok) {
    o.detail = "6 constructors x 500 instances";
  }
  return o;
}

Outcome nil2_against_series() {
  Outcome o;
  test::Rng rng(2027);
  GroupContext c32(3, 2);
  for (int t = 0; t < 1000; ++t) {
    Word u = test::random_word(rng, 3, 8, 5);
    Word v = t % 4 == 0 ? concat({Word::generator(2), u, Word::generator(2, -1)})
                        : test::random_word(rng, 3, 8, 5);
    auto eu = from_word(u, c32), ev = from_word(v, c32);
    o.require((eu == ev) == equal_in_group(u, v, c32), "equality disagrees");
    o.require(equal_in_group(to_word(mul(eu, ev)), concat(u, v), c32),
              "product disagrees");
    o.require(equal_in_group(to_word(inv(eu)), invert(u), c32),
              "inverse disagrees");
  }
  for (auto [n, r] : {std::pair{2u, 3u}, {3u, 3u}}) {
    GroupContext ctx(n, r);
    for (int t = 0; t < 200; ++t) {
      Word a = test::random_word(rng, n, 5, 4);
      Word b = test::random_word(rng, n, 5, 4);
      Word c = test::random_word(rng, n, 5, 4);
      auto sa = eval_word(a, ctx), sb = eval_word(b, ctx), sc = eval_word(c, ctx);
      o.require(series_mul(series_mul(sa, sb), sc) == series_mul(sa, series_mul(sb, sc)),
                "associativity in " + ctx.name());
      o.require(series_mul(sa, Series::one(ctx)) == sa, "identity in " + ctx.name());
      o.require(series_mul(sa, eval_word(invert(a), ctx)).is_one(),
                "inverse in " + ctx.name());
      std::vector<Word> entries;
      for (std::uint32_t i = 0; i <= r; ++i) {
        entries.push_back(test::random_word(rng, n, 3, 3));
      }
      o.require(is_identity(left_normed_commutator(entries), ctx),
                "weight r+1 commutator survives in " + ctx.name());
    }
  }
  return o;
}

Outcome abelian_projection() {
  Outcome o;
  test::Rng rng(2028);
  GroupContext c21(2, 1);
  for (int t = 0; t < 1000; ++t) {
    auto e = test::random_nil2(rng, 2, 50);
    auto c = n22_exact_length(e);
    Word w = to_word(e);
    o.require(abelian_exact_length(w, 2).upper <= c.upper,
              "abelian length above nilpotent length");
    for (auto const& p : c.witness.factors) {
      o.require(is_palindrome_word(p), "witness factor is not a palindrome");
    }
    auto projected = verify_factorization(
        Factorization{c21, w, c.witness.factors, false, {}});
    o.require(projected.verified, "projected witness fails in N(2,1)");
  }
  return o;
}

}  // namespace
}  // namespace palwidth

int main() {
  using palwidth::Criterion;
  std::vector<Criterion> criteria = {
      {"1 coordinate words in the abelian quotient", 1, palwidth::coordinate_words},
      {"2 N(2,2) box sweep and search cross-check", 120, palwidth::n22_box_sweep},
      {"3 two-palindrome commutator lemma, bound 15", 60, palwidth::l1_replay},
      {"4 N(n,2) decompositions, n = 2..6", 60, palwidth::nn2_random},
      {"5 N(n,r) decompositions with layer checks", 300, palwidth::nnr_random},
      {"6 palindrome calculus constructors", 300, palwidth::palcalc_suites},
      {"7 class-2 normal form against series", 30, palwidth::nil2_against_series},
      {"8 abelian projection of N(2,2) witnesses", 300, palwidth::abelian_projection},
  };
  bool all = true;
  for (auto const& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    palwidth::Outcome o;
    try {
      o = c.body();
    } catch (std::exception const& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail = "over budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + "s";
    }
    all = all && o.ok;
    std::printf("%s  criterion %s  (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL",
                c.name.c_str(), secs, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
