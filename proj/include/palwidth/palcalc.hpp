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

#ifndef PALWIDTH_PALCALC_HPP
#define PALWIDTH_PALCALC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "magnus.hpp"
#include "word.hpp"
#include "word_io.hpp"

// Constructors that turn palindrome identities into explicit factor lists.
// They work on words only, so an output is a valid certificate in every
// quotient N_{n,r}: epimorphisms fixing the basis send palindromes to
// palindromes. Group equality is checked by verify_factorization.

namespace palwidth {

// A claimed product g = p_1 p_2 ... p_k of palindromes.
struct Factorization {
  GroupContext ctx;
  Word target;
  std::vector<Word> factors;
  // Only verify_factorization sets this.
  bool verified = false;
  std::string diagnostic;

  [[nodiscard]] std::size_t size() const noexcept { return factors.size(); }
};

inline Word product(std::vector<Word> const& factors) {
  Word w;
  for (auto const& f : factors) {
    w.append(f);
  }
  return w;
}

inline Factorization verify_factorization(Factorization f) {
  f.verified = false;
  f.diagnostic.clear();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (f.factors[i].max_generator() > f.ctx.n()) {
      f.diagnostic = "factor " + std::to_string(i) + " outside the alphabet";
      return f;
    }
    if (!is_palindrome_word(f.factors[i])) {
      f.diagnostic = "factor " + std::to_string(i) + " not a palindrome";
      return f;
    }
  }
  if (f.target.max_generator() > f.ctx.n()) {
    f.diagnostic = "target outside the alphabet";
    return f;
  }
  Series prod = Series::one(f.ctx);
  for (auto const& p : f.factors) {
    prod = series_mul(prod, eval_word(p, f.ctx));
  }
  if (!(prod == eval_word(f.target, f.ctx))) {
    f.diagnostic = "product mismatch";
    return f;
  }
  f.verified = true;
  return f;
}

// Verifies and throws internal_error on failure; for constructed output.
inline Factorization certify(GroupContext const& ctx, Word target,
                             std::vector<Word> factors) {
  auto f = verify_factorization(
      Factorization{ctx, std::move(target), std::move(factors), false, {}});
  if (!f.verified) {
    throw internal_error("constructed factorization of "
                         + format_word(f.target) + " failed: " + f.diagnostic);
  }
  return f;
}

namespace detail {

inline void require_palindrome(Word const& p, char const* what) {
  if (!is_palindrome_word(p)) {
    throw domain_error(std::string(what) + " is not a palindrome: "
                       + format_word(p));
  }
}

}  // namespace detail

// p^m; powers of a palindrome are palindromes.
inline Word power_palindrome(Word const& p, BigInt const& m) {
  detail::require_palindrome(p, "power base");
  return power_word(p, m);
}

// Palindromes whose product is u^-1 (p_1 ... p_k) u. Even k gives k
// factors, alternating u^-1 p rev(u^-1) and rev(u) p u so that the inner
// rev(u^-1) rev(u) pairs cancel. Odd k >= 3 gives k + 1: the even prefix,
// then u^-1 rev(u^-1) and rev(u) p_k u. For k = 1 the two factors are
// u^-1 p rev(u^-1) and rev(u) u.
inline std::vector<Word> conjugate_factorization(Word const& u,
                                                 std::vector<Word> const& ps) {
  for (auto const& p : ps) {
    detail::require_palindrome(p, "conjugated factor");
  }
  Word const u_inv = invert(u);
  Word const rev_u = reverse(u);
  Word const rev_u_inv = reverse(u_inv);
  auto left = [&](Word const& p) { return concat({u_inv, p, rev_u_inv}); };
  auto right = [&](Word const& p) { return concat({rev_u, p, u}); };

  std::vector<Word> out;
  std::size_t const k = ps.size();
  if (k == 1) {
    out.push_back(left(ps[0]));
    out.push_back(concat(rev_u, u));
    return out;
  }
  std::size_t const even = k - (k % 2);
  for (std::size_t i = 0; i < even; ++i) {
    out.push_back(i % 2 == 0 ? left(ps[i]) : right(ps[i]));
  }
  if (k % 2 == 1) {
    out.push_back(concat(u_inv, rev_u_inv));
    out.push_back(right(ps.back()));
  }
  return out;
}

// Three palindromes with product [u, p] a^beta:
//   (u^-1 p^-1 rev(u^-1)) (rev(u) u) (p a^beta).
// When beta != 0, p must be a power a^alpha of the generator a, so the last
// factor a^{alpha+beta} is still a palindrome.
inline std::vector<Word> commutator_palindrome_factorization(
    Word const& u, Word const& p, BigInt const& beta = 0,
    std::optional<Generator> a = std::nullopt) {
  detail::require_palindrome(p, "commutator argument");
  if (beta != 0) {
    if (!a) {
      throw domain_error("a nonzero trailing power needs its generator");
    }
    if (p.size() > 1 || (p.size() == 1 && p[0].gen != *a)) {
      throw domain_error("with a trailing power, p must be a power of x"
                         + std::to_string(*a));
    }
  }
  Word const u_inv = invert(u);
  Word last = p;
  if (beta != 0) {
    last.push(Syllable{*a, beta});
  }
  return {concat({u_inv, invert(p), reverse(u_inv)}), concat(reverse(u), u),
          std::move(last)};
}

// Four palindromes with product [u, pq] = (u^-1 q^-1 p^-1 u) p q.
inline std::vector<Word> commutator_two_palindromes_factorization(
    Word const& u, Word const& p, Word const& q) {
  detail::require_palindrome(p, "first palindrome");
  detail::require_palindrome(q, "second palindrome");
  auto out = conjugate_factorization(u, {invert(q), invert(p)});
  out.push_back(p);
  out.push_back(q);
  return out;
}

// If p1 p2 is central, (p1 p2)^m = p1^m p2^m.
inline std::vector<Word> central_power_factorization(Word const& p1,
                                                     Word const& p2,
                                                     BigInt const& m,
                                                     GroupContext const& ctx) {
  detail::require_palindrome(p1, "first palindrome");
  detail::require_palindrome(p2, "second palindrome");
  if (!is_central(concat(p1, p2), ctx)) {
    throw domain_error("product of the two palindromes is not central in "
                       + ctx.name());
  }
  return {power_word(p1, m), power_word(p2, m)};
}

}  // namespace palwidth

#endif  // PALWIDTH_PALCALC_HPP
