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

#ifndef PALWIDTH_DECOMPOSE_HPP
#define PALWIDTH_DECOMPOSE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "errors.hpp"
#include "hnf.hpp"
#include "integer.hpp"
#include "magnus.hpp"
#include "nil2.hpp"
#include "palcalc.hpp"
#include "word.hpp"

namespace palwidth {

enum class LowerMethod { parity, n22_classification, exhaustive };

inline std::string to_string(LowerMethod m) {
  switch (m) {
    case LowerMethod::parity:
      return "parity";
    case LowerMethod::n22_classification:
      return "n22-classification";
    case LowerMethod::exhaustive:
      return "exhaustive";
  }
  return "parity";
}

inline LowerMethod lower_method_from_string(std::string const& s) {
  if (s == "parity") {
    return LowerMethod::parity;
  }
  if (s == "n22-classification") {
    return LowerMethod::n22_classification;
  }
  if (s == "exhaustive") {
    return LowerMethod::exhaustive;
  }
  throw domain_error("unknown lower bound method '" + s + "'");
}

// lower <= l_P(target) <= upper, the upper bound witnessed.
struct LengthCertificate {
  GroupContext ctx;
  Word target;
  std::size_t lower;
  LowerMethod lower_method;
  std::size_t upper;
  Factorization witness;

  [[nodiscard]] bool exact() const noexcept { return lower == upper; }
};

inline std::vector<Word> drop_empty(std::vector<Word> factors) {
  std::erase_if(factors, [](Word const& w) { return w.empty(); });
  return factors;
}

////////////////////////////////////////////////////////////////////////////
// Abelian case and the parity bound
////////////////////////////////////////////////////////////////////////////

// x_1^{a_1}, ..., x_n^{a_n} with zero powers omitted.
inline Factorization abelian_decompose(Word const& w, std::uint32_t n) {
  GroupContext ctx(n, 1);
  auto sums = exponent_sums(w, n);
  std::vector<Word> factors;
  for (Generator i = 1; i <= n; ++i) {
    if (sums[i - 1] != 0) {
      factors.push_back(Word::generator(i, sums[i - 1]));
    }
  }
  return certify(ctx, w, std::move(factors));
}

// Number of odd exponent sums. A palindrome u x_l^a rev(u) has exponent
// sums 2 sum(u) + a e_l, so at most one of them is odd.
inline std::size_t parity_lower_bound(Word const& w, GroupContext const& ctx) {
  return parity_vector(w, ctx.n()).weight();
}

// Parity bound sharpened by 1 for nontrivial elements.
inline std::size_t certified_lower_bound(Word const& w,
                                         GroupContext const& ctx) {
  if (is_identity(w, ctx)) {
    return 0;
  }
  return std::max<std::size_t>(1, parity_lower_bound(w, ctx));
}

// Exact length in N_{n,1}: 0 for the identity, else max(1, #odd sums).
// Even halves ride along inside the palindrome of one chosen coordinate.
inline LengthCertificate abelian_exact_length(Word const& w, std::uint32_t n) {
  GroupContext ctx(n, 1);
  auto sums = exponent_sums(w, n);
  std::vector<Generator> odd;
  std::optional<Generator> host;
  for (Generator i = 1; i <= n; ++i) {
    if (!is_even(sums[i - 1])) {
      odd.push_back(i);
    } else if (sums[i - 1] != 0 && !host) {
      host = i;
    }
  }
  if (!odd.empty()) {
    host = odd.front();
  }
  std::vector<Word> factors;
  if (host) {
    Word half;
    for (Generator i = 1; i <= n; ++i) {
      if (i != *host && is_even(sums[i - 1])) {
        half.push(Syllable{i, sums[i - 1] / 2});
      }
    }
    factors.push_back(make_palindrome(half, *host, sums[*host - 1]));
    for (auto i : odd) {
      if (i != *host) {
        factors.push_back(Word::generator(i, sums[i - 1]));
      }
    }
  }
  auto witness = certify(ctx, w, std::move(factors));
  std::size_t k = witness.size();
  return LengthCertificate{ctx, w, k, LowerMethod::parity, k,
                           std::move(witness)};
}

////////////////////////////////////////////////////////////////////////////
// N_{2,2} = <x, y>, elements x^alpha y^beta z^gamma with z = [y, x]
////////////////////////////////////////////////////////////////////////////

// Every palindrome of N_{2,2} is one of
//   type A: x^{2a} y^b z^{ab}, realized by x^a y^b x^a,
//   type B: x^a y^{2b} z^{ab}, realized by y^b x^a y^b.
struct PalindromeFormN22 {
  enum class Kind { type_a, type_b };

  Kind kind;
  BigInt a;
  BigInt b;

  [[nodiscard]] Nil2Element element() const {
    if (kind == Kind::type_a) {
      return Nil2Element::n22(2 * a, b, a * b);
    }
    return Nil2Element::n22(a, 2 * b, a * b);
  }

  // Realizing palindrome, with x and y renamed if asked.
  [[nodiscard]] Word witness(Generator x = 1, Generator y = 2) const {
    Word const xa = Word::generator(x, a);
    Word const yb = Word::generator(y, b);
    return kind == Kind::type_a ? concat({xa, yb, xa}) : concat({yb, xa, yb});
  }

  friend bool operator==(PalindromeFormN22 const&,
                         PalindromeFormN22 const&) = default;
};

namespace detail {

inline void require_n22(Nil2Element const& e) {
  if (e.rank() != 2) {
    throw domain_error("N(2,2) routine called with rank "
                       + std::to_string(e.rank()));
  }
}

// Some (x, y) with p x + q y = c, reduced toward small |x|.
inline std::optional<std::pair<BigInt, BigInt>> solve_linear2(
    BigInt const& p, BigInt const& q, BigInt const& c) {
  auto [g, s, t] = extended_gcd(p, q);
  if (!divides(g, c)) {
    return std::nullopt;
  }
  if (g == 0) {
    return std::make_pair(BigInt(0), BigInt(0));
  }
  BigInt x = s * (c / g);
  BigInt y = t * (c / g);
  BigInt const step_x = q / g;
  BigInt const step_y = p / g;
  if (step_x != 0) {
    BigInt k = round_div(-x, step_x);
    x += k * step_x;
    y -= k * step_y;
  }
  return std::make_pair(std::move(x), std::move(y));
}

}  // namespace detail

// The palindrome form of e, if e is a palindrome: alpha*beta even and
// 2 gamma = alpha beta.
inline std::optional<PalindromeFormN22> n22_palindrome_form(
    Nil2Element const& e) {
  detail::require_n22(e);
  BigInt const& alpha = e.alpha(1);
  BigInt const& beta = e.alpha(2);
  BigInt const& gamma = e.beta(2, 1);
  BigInt const ab = alpha * beta;
  if (!is_even(ab) || 2 * gamma != ab) {
    return std::nullopt;
  }
  if (is_even(alpha)) {
    return PalindromeFormN22{PalindromeFormN22::Kind::type_a, alpha / 2, beta};
  }
  return PalindromeFormN22{PalindromeFormN22::Kind::type_b, alpha, beta / 2};
}

// Two palindromes with product e, if they exist. Expanding the four
// type orderings with the closed product gives linear conditions:
//   AA: alpha = 2A, beta = B,  gamma = A b1 + B a2
//   BB: alpha = A, beta = 2B,  gamma = A b1 + B a2
//   AB: alpha beta - gamma = beta a1 + alpha b2
//   BA: gamma = alpha b1 + beta a2
// so each case is solvable iff a gcd divides the right-hand side.
inline std::optional<std::pair<PalindromeFormN22, PalindromeFormN22>>
n22_two_palindrome_test(Nil2Element const& e) {
  detail::require_n22(e);
  using Kind = PalindromeFormN22::Kind;
  BigInt const& alpha = e.alpha(1);
  BigInt const& beta = e.alpha(2);
  BigInt const& gamma = e.beta(2, 1);

  auto check = [&e](PalindromeFormN22 p, PalindromeFormN22 q)
      -> std::optional<std::pair<PalindromeFormN22, PalindromeFormN22>> {
    if (!(mul(p.element(), q.element()) == e)) {
      throw internal_error("two-palindrome solution does not reproduce target");
    }
    return std::make_pair(std::move(p), std::move(q));
  };

  if (is_even(alpha)) {
    BigInt const big_a = alpha / 2;
    if (auto sol = detail::solve_linear2(big_a, beta, gamma)) {
      auto const& [b1, a2] = *sol;
      return check({Kind::type_a, big_a - a2, b1}, {Kind::type_a, a2, beta - b1});
    }
  }
  if (auto sol = detail::solve_linear2(beta, alpha, alpha * beta - gamma)) {
    auto const& [a1, b2] = *sol;
    return check({Kind::type_a, a1, beta - 2 * b2},
                 {Kind::type_b, alpha - 2 * a1, b2});
  }
  if (auto sol = detail::solve_linear2(alpha, beta, gamma)) {
    auto const& [b1, a2] = *sol;
    return check({Kind::type_b, alpha - 2 * a2, b1},
                 {Kind::type_a, a2, beta - 2 * b1});
  }
  if (is_even(beta)) {
    BigInt const big_b = beta / 2;
    if (auto sol = detail::solve_linear2(alpha, big_b, gamma)) {
      auto const& [b1, a2] = *sol;
      return check({Kind::type_b, alpha - a2, b1}, {Kind::type_b, a2, big_b - b1});
    }
  }
  return std::nullopt;
}

namespace detail {

// At most three palindromes for x^alpha y^beta z^gamma over generators
// (x, y). A palindrome short-circuits; otherwise
//   (x^alpha y^{beta-gamma} x^alpha) x^{-alpha-2} (x y^gamma x),
// using y^gamma z^gamma = (x^-1 y x)^gamma.
inline std::vector<Word> n22_factor_words(Nil2Element const& e, Generator x,
                                          Generator y) {
  if (auto form = n22_palindrome_form(e)) {
    return drop_empty({form->witness(x, y)});
  }
  BigInt const& alpha = e.alpha(1);
  BigInt const& beta = e.alpha(2);
  BigInt const& gamma = e.beta(2, 1);
  Word const xa = Word::generator(x, alpha);
  Word const x1 = Word::generator(x);
  return drop_empty({concat({xa, Word::generator(y, beta - gamma), xa}),
                     Word::generator(x, -alpha - 2),
                     concat({x1, Word::generator(y, gamma), x1})});
}

}  // namespace detail

inline Factorization n22_decompose(Nil2Element const& e) {
  detail::require_n22(e);
  return certify(GroupContext(2, 2), to_word(e),
                 detail::n22_factor_words(e, 1, 2));
}

// Exact palindromic length in N_{2,2}, which is at most 3.
inline LengthCertificate n22_exact_length(Nil2Element const& e) {
  detail::require_n22(e);
  GroupContext const ctx(2, 2);
  Word const target = to_word(e);
  std::vector<Word> factors;
  if (e.is_identity()) {
    // zero factors
  } else if (auto form = n22_palindrome_form(e)) {
    factors.push_back(form->witness());
  } else if (auto pair = n22_two_palindrome_test(e)) {
    factors = drop_empty({pair->first.witness(), pair->second.witness()});
  } else {
    factors = detail::n22_factor_words(e, 1, 2);
  }
  auto witness = certify(ctx, target, std::move(factors));
  std::size_t k = witness.size();
  if ((k == 2 && !n22_two_palindrome_test(e)) || k > 3) {
    throw internal_error("N(2,2) length witness has unexpected size");
  }
  return LengthCertificate{ctx, target, k, LowerMethod::n22_classification, k,
                           std::move(witness)};
}

////////////////////////////////////////////////////////////////////////////
// N_{n,2}: at most 3(n-1) palindromes
////////////////////////////////////////////////////////////////////////////

// Word for x_n^{b_{n,j}} x_{n-1}^{b_{n-1,j}} ... x_{j+1}^{b_{j+1,j}}; in
// class 2, [v_j, x_j] = prod_{i > j} [x_i, x_j]^{b_ij}.
inline Word nil2_commutator_partner(Nil2Element const& e, Generator j) {
  Word v;
  for (Generator i = e.rank(); i > j; --i) {
    v.push(Syllable{i, e.beta(i, j)});
  }
  return v;
}

// Three palindromes for [u, x_i] x_i^alpha, or the single x_i^alpha when u
// is the empty word.
inline std::vector<Word> commutator_block_factors(Word const& u, Generator i,
                                                  BigInt const& alpha) {
  if (u.empty()) {
    return drop_empty({Word::generator(i, alpha)});
  }
  return drop_empty(
      commutator_palindrome_factorization(u, Word::generator(i), alpha, i));
}

// g = prod_{j <= n-2} [v_j, x_j] x_j^{a_j} * x_{n-1}^{a_{n-1}}
//     [x_n^{b_{n,n-1}}, x_{n-1}] x_n^{a_n}
// Each leading block costs 3 palindromes and the last block lives in
// <x_{n-1}, x_n>, a copy of N_{2,2}, so it costs 3 as well.
inline Factorization nn2_decompose(Nil2Element const& e) {
  std::uint32_t const n = e.rank();
  if (n < 2) {
    throw domain_error("rank must be at least 2");
  }
  if (n == 2) {
    return n22_decompose(e);
  }
  std::vector<Word> factors;
  for (Generator j = 1; j + 2 <= n; ++j) {
    auto block =
        commutator_block_factors(nil2_commutator_partner(e, j), j, e.alpha(j));
    factors.insert(factors.end(), block.begin(), block.end());
  }
  auto last = detail::n22_factor_words(
      Nil2Element::n22(e.alpha(n - 1), e.alpha(n), e.beta(n, n - 1)), n - 1, n);
  factors.insert(factors.end(), last.begin(), last.end());
  return certify(GroupContext(n, 2), to_word(e), std::move(factors));
}

////////////////////////////////////////////////////////////////////////////
// General class: the commutator form prod_i [u_i, x_i] x_i^{a_i}
////////////////////////////////////////////////////////////////////////////

namespace detail {

// Left-normed brackets of weight k with distinct first two letters.
// Those with i_1 > i_2 come first so that solutions prefer them.
inline std::vector<std::vector<Generator>> spanning_brackets(std::uint32_t n,
                                                             std::uint32_t k) {
  std::vector<std::vector<Generator>> all;
  std::vector<Generator> idx(k, 1);
  while (true) {
    all.push_back(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n) {
      idx[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) {
      break;
    }
    ++idx[pos - 1];
  }
  std::vector<std::vector<Generator>> first, second;
  for (auto& b : all) {
    if (k == 1 || b[0] > b[1]) {
      first.push_back(std::move(b));
    } else if (b[0] < b[1]) {
      second.push_back(std::move(b));
    }
  }
  first.insert(first.end(), std::make_move_iterator(second.begin()),
               std::make_move_iterator(second.end()));
  return first;
}

inline Word bracket_word(std::vector<Generator> const& letters,
                         BigInt const& first_power = 1) {
  std::vector<Word> entries;
  entries.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    entries.push_back(Word::generator(letters[i], i == 0 ? first_power : 1));
  }
  return left_normed_commutator(entries);
}

}  // namespace detail

inline Word commutator_form_word(std::vector<Word> const& u,
                                 std::vector<BigInt> const& alpha) {
  Word w;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto const g = static_cast<Generator>(i + 1);
    w.append(commutator_word(u[i], Word::generator(g)));
    w.push(Syllable{g, alpha[i]});
  }
  return w;
}

// For d in gamma_k of N_{n,k}, words a_1..a_n in gamma_{k-1} with
// d = [a_1, x_1] ... [a_n, x_n].
//
// In class k the degree-k part of such a product is sum_i [A_i, X_i], with
// A_i the degree-(k-1) part of a_i. The degree-k part of d is solved over Z
// against left-normed brackets; brackets ending in x_i with coefficient c
// contribute [x_{i_1}^c, x_{i_2}, ..., x_{i_{k-1}}] to a_i, which has
// leading part c times the shorter bracket.
inline std::vector<Word> layer_decompose(Word const& d, std::uint32_t k,
                                         GroupContext const& ctx) {
  if (k < 2 || ctx.r() != k) {
    throw domain_error("layer step needs class r = k >= 2");
  }
  if (!is_in_gamma(d, k, ctx)) {
    throw domain_error("residual is not in gamma_" + std::to_string(k));
  }
  std::uint32_t const n = ctx.n();
  std::vector<Word> a(n);
  Series const top = homogeneous_component(eval_word(d, ctx), k);
  if (top.is_zero()) {
    return a;
  }
  detail::MonomialIndex index(ctx);
  std::uint64_t const base = index.offset[k];
  std::uint64_t const rows = index.power[k];

  auto brackets = detail::spanning_brackets(n, k);
  IntMatrix m(rows, brackets.size());
  for (std::size_t c = 0; c < brackets.size(); ++c) {
    auto s = homogeneous_component(eval_word(detail::bracket_word(brackets[c]), ctx), k);
    for (auto const& t : s.terms()) {
      m(t.key - base, c) = t.coef;
    }
  }
  std::vector<BigInt> rhs(rows);
  for (auto const& t : top.terms()) {
    rhs[t.key - base] = t.coef;
  }
  auto sol = solve_integer_system(m, rhs);
  if (!sol) {
    throw internal_error("degree-" + std::to_string(k)
                         + " layer is not an integer combination of brackets");
  }
  for (std::size_t c = 0; c < brackets.size(); ++c) {
    if ((*sol)[c] == 0) {
      continue;
    }
    auto const& letters = brackets[c];
    std::vector<Generator> head(letters.begin(), letters.end() - 1);
    a[letters.back() - 1].append(detail::bracket_word(head, (*sol)[c]));
  }
  Word check;
  for (Generator i = 1; i <= n; ++i) {
    check.append(commutator_word(a[i - 1], Word::generator(i)));
  }
  if (!equal_in_group(check, d, ctx)) {
    throw internal_error("layer decomposition does not reproduce residual");
  }
  return a;
}

struct LayerStep {
  std::uint32_t cls;
  Word residual;
  std::vector<Word> a;
};

struct CommutatorForm {
  std::vector<Word> u;
  std::vector<BigInt> alpha;
  // One entry per class >= 3 lifted through layer_decompose.
  std::vector<LayerStep> layers;

  [[nodiscard]] Word word() const { return commutator_form_word(u, alpha); }
};

// u_1..u_n and a_1..a_n with w = prod_i [u_i, x_i] x_i^{a_i} in N_{n,r},
// by induction on the class. Class 1 is the exponent-sum vector and class 2
// reads u_j off the normal form. Going from class c-1 to c, the residual
// d = lift^-1 w lies in gamma_c, is split as prod [a_i, x_i] and merged as
// u_i <- u_i a_i, since [u a, x] = [u, x][a, x] once [a, x] is central.
inline CommutatorForm commutator_form_decompose(Word const& w,
                                                GroupContext const& ctx) {
  require_alphabet(w, ctx);
  std::uint32_t const n = ctx.n();
  CommutatorForm form;
  form.u.assign(n, Word());
  if (ctx.r() == 1) {
    form.alpha = exponent_sums(w, n);
    return form;
  }
  auto e = from_word(w, n);
  form.alpha = e.alphas();
  for (Generator j = 1; j <= n; ++j) {
    form.u[j - 1] = nil2_commutator_partner(e, j);
  }
  for (std::uint32_t c = 3; c <= ctx.r(); ++c) {
    GroupContext const level = ctx.with_class(c);
    Word d = concat(invert(form.word()), w);
    auto a = layer_decompose(d, c, level);
    for (std::uint32_t i = 0; i < n; ++i) {
      form.u[i].append(a[i]);
    }
    form.layers.push_back(LayerStep{c, std::move(d), std::move(a)});
  }
  return form;
}

// At most 3n palindromes via the commutator form.
inline Factorization nnr_decompose(Word const& w, GroupContext const& ctx) {
  auto form = commutator_form_decompose(w, ctx);
  std::vector<Word> factors;
  for (Generator i = 1; i <= ctx.n(); ++i) {
    auto block = commutator_block_factors(form.u[i - 1], i, form.alpha[i - 1]);
    factors.insert(factors.end(), block.begin(), block.end());
  }
  return certify(ctx, w, std::move(factors));
}

// Best constructive factorization available for the context.
inline Factorization best_decomposition(Word const& w, GroupContext const& ctx) {
  require_alphabet(w, ctx);
  if (ctx.r() == 1) {
    return abelian_exact_length(w, ctx.n()).witness;
  }
  if (ctx.r() == 2) {
    auto e = from_word(w, ctx.n());
    auto f = ctx.n() == 2 ? n22_exact_length(e).witness : nn2_decompose(e);
    f.target = w;
    return verify_factorization(std::move(f));
  }
  return nnr_decompose(w, ctx);
}

}  // namespace palwidth

#endif  // PALWIDTH_DECOMPOSE_HPP
