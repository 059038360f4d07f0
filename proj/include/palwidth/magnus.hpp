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

#ifndef PALWIDTH_MAGNUS_HPP
#define PALWIDTH_MAGNUS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "word.hpp"

// Exact arithmetic in N_{n,r} through the truncated Magnus embedding
// x_i -> 1 + X_i into Z<<X_1..X_n>> modulo monomials of degree > r.
// Two words are equal in N_{n,r} iff their truncated series agree, and
// w lies in the k-th lower central term iff degrees 1..k-1 vanish.

namespace palwidth {

// A non-commutative monomial X_{i_1} ... X_{i_d}; empty is the unit.
struct Monomial {
  std::vector<Generator> letters;

  [[nodiscard]] std::size_t degree() const noexcept { return letters.size(); }

  friend bool operator==(Monomial const&, Monomial const&) = default;

  // Length first, then lexicographic by generator index.
  friend bool operator<(Monomial const& a, Monomial const& b) {
    if (a.letters.size() != b.letters.size()) {
      return a.letters.size() < b.letters.size();
    }
    return a.letters < b.letters;
  }
};

namespace detail {

inline constexpr std::size_t max_series_class = 62;

// Dense numbering of monomials of degree <= r compatible with the
// length-then-lex order: key = offset[d] + (letters as base-n digits).
struct MonomialIndex {
  std::uint64_t n = 0;
  std::uint32_t r = 0;
  std::array<std::uint64_t, max_series_class + 2> offset{};
  std::array<std::uint64_t, max_series_class + 2> power{};

  explicit MonomialIndex(GroupContext const& ctx) : n(ctx.n()), r(ctx.r()) {
    if (r > max_series_class) {
      throw domain_error("class too large for series arithmetic");
    }
    constexpr std::uint64_t limit = std::uint64_t(1) << 62;
    power[0] = 1;
    offset[0] = 0;
    for (std::uint32_t k = 0; k <= r; ++k) {
      if (power[k] > limit / n || offset[k] > limit - power[k]) {
        throw domain_error("context " + ctx.name()
                           + " too large for series arithmetic");
      }
      power[k + 1] = power[k] * n;
      offset[k + 1] = offset[k] + power[k];
    }
  }

  [[nodiscard]] std::uint64_t size() const noexcept { return offset[r + 1]; }

  [[nodiscard]] std::uint64_t key(Monomial const& m) const {
    if (m.degree() > r) {
      throw domain_error("monomial degree exceeds the class");
    }
    std::uint64_t rank = 0;
    for (auto g : m.letters) {
      if (g < 1 || g > n) {
        throw domain_error("monomial letter out of range");
      }
      rank = rank * n + (g - 1);
    }
    return offset[m.degree()] + rank;
  }

  [[nodiscard]] Monomial monomial(std::uint64_t key, std::uint32_t degree) const {
    Monomial m;
    m.letters.resize(degree);
    std::uint64_t rank = key - offset[degree];
    for (std::uint32_t i = degree; i-- > 0;) {
      m.letters[i] = static_cast<Generator>(rank % n + 1);
      rank /= n;
    }
    return m;
  }
};

}  // namespace detail

class Series {
 public:
  struct Term {
    std::uint64_t key;
    std::uint32_t degree;
    BigInt coef;

    friend bool operator==(Term const&, Term const&) = default;
  };

  // The zero series.
  explicit Series(GroupContext ctx) : ctx_(ctx) {}

  static Series one(GroupContext ctx) {
    Series s(ctx);
    s.terms_.push_back(Term{0, 0, 1});
    return s;
  }

  static Series from_terms(GroupContext ctx,
                           std::vector<std::pair<Monomial, BigInt>> terms) {
    detail::MonomialIndex index(ctx);
    Series s(ctx);
    for (auto& [m, c] : terms) {
      s.terms_.push_back(Term{index.key(m),
                              static_cast<std::uint32_t>(m.degree()),
                              std::move(c)});
    }
    s.canonicalize();
    return s;
  }

  [[nodiscard]] GroupContext const& context() const noexcept { return ctx_; }
  [[nodiscard]] std::vector<Term> const& terms() const noexcept {
    return terms_;
  }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].degree == 0 && terms_[0].coef == 1;
  }

  [[nodiscard]] BigInt coefficient(Monomial const& m) const {
    auto key = detail::MonomialIndex(ctx_).key(m);
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), key,
        [](Term const& t, std::uint64_t k) { return t.key < k; });
    return (it != terms_.end() && it->key == key) ? it->coef : BigInt(0);
  }

  // Terms in canonical order with decoded monomials.
  [[nodiscard]] std::vector<std::pair<Monomial, BigInt>> expanded() const {
    detail::MonomialIndex index(ctx_);
    std::vector<std::pair<Monomial, BigInt>> out;
    out.reserve(terms_.size());
    for (auto const& t : terms_) {
      out.emplace_back(index.monomial(t.key, t.degree), t.coef);
    }
    return out;
  }

  friend bool operator==(Series const&, Series const&) = default;

  [[nodiscard]] std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto const& t : terms_) {
      h ^= std::hash<std::uint64_t>{}(t.key) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
      h ^= std::hash<BigInt>{}(t.coef) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }

  // Sorts by key, merges duplicates and drops zeros.
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](Term const& a, Term const& b) { return a.key < b.key; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Term acc = std::move(terms_[i]);
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].key == acc.key; ++j) {
        acc.coef += terms_[j].coef;
      }
      if (acc.coef != 0) {
        terms_[out++] = std::move(acc);
      }
      i = j;
    }
    terms_.resize(out);
  }

  std::vector<Term>& mutable_terms() noexcept { return terms_; }

 private:
  GroupContext ctx_;
  std::vector<Term> terms_;
};

struct SeriesHash {
  std::size_t operator()(Series const& s) const noexcept { return s.hash(); }
};

// Truncated product; terms of degree > r are discarded.
inline Series series_mul(Series const& a, Series const& b) {
  if (!(a.context() == b.context())) {
    throw domain_error("series context mismatch: " + a.context().name()
                       + " vs " + b.context().name());
  }
  detail::MonomialIndex index(a.context());
  auto const r = index.r;
  Series out(a.context());
  auto& terms = out.mutable_terms();
  terms.reserve(a.terms().size() + b.terms().size());
  for (auto const& ta : a.terms()) {
    std::uint64_t rank_a = ta.key - index.offset[ta.degree];
    for (auto const& tb : b.terms()) {
      // b is sorted by degree first.
      if (ta.degree + tb.degree > r) {
        break;
      }
      std::uint32_t d = ta.degree + tb.degree;
      std::uint64_t rank_b = tb.key - index.offset[tb.degree];
      terms.push_back(
          Series::Term{index.offset[d] + rank_a * index.power[tb.degree] + rank_b,
                       d, ta.coef * tb.coef});
    }
  }
  out.canonicalize();
  return out;
}

inline Series operator*(Series const& a, Series const& b) {
  return series_mul(a, b);
}

// (1 + X_g)^e truncated at degree r, for any integer e.
inline Series syllable_series(Generator g, BigInt const& e,
                              GroupContext const& ctx) {
  detail::MonomialIndex index(ctx);
  if (g < 1 || g > ctx.n()) {
    throw domain_error("generator x" + std::to_string(g) + " out of range for "
                       + ctx.name());
  }
  Series s(ctx);
  auto& terms = s.mutable_terms();
  std::uint64_t rank = 0;
  for (std::uint32_t k = 0; k <= ctx.r(); ++k) {
    BigInt c = binomial(e, k);
    if (c != 0) {
      terms.push_back(Series::Term{index.offset[k] + rank, k, std::move(c)});
    }
    rank = rank * index.n + (g - 1);
  }
  return s;
}

inline Series eval_word(Word const& w, GroupContext const& ctx) {
  require_alphabet(w, ctx);
  Series acc = Series::one(ctx);
  for (auto const& s : w.syllables()) {
    acc = series_mul(acc, syllable_series(s.gen, s.exp, ctx));
  }
  return acc;
}

inline bool equal_in_group(Word const& a, Word const& b,
                           GroupContext const& ctx) {
  return eval_word(a, ctx) == eval_word(b, ctx);
}

inline bool is_identity(Word const& w, GroupContext const& ctx) {
  return eval_word(w, ctx).is_one();
}

inline Series homogeneous_component(Series const& s, std::uint32_t k) {
  Series out(s.context());
  for (auto const& t : s.terms()) {
    if (t.degree == k) {
      out.mutable_terms().push_back(t);
    }
  }
  return out;
}

// Membership in gamma_k (gamma_1 = the whole group), 1 <= k <= r + 1.
inline bool is_in_gamma(Word const& w, std::uint32_t k,
                        GroupContext const& ctx) {
  if (k < 1 || k > ctx.r() + 1) {
    throw domain_error("gamma index out of range 1..r+1");
  }
  Series s = eval_word(w, ctx);
  for (auto const& t : s.terms()) {
    if (t.degree >= 1 && t.degree < k) {
      return false;
    }
  }
  return true;
}

inline bool is_central(Word const& w, GroupContext const& ctx) {
  for (Generator i = 1; i <= ctx.n(); ++i) {
    if (!is_identity(commutator_word(Word::generator(i), w), ctx)) {
      return false;
    }
  }
  return true;
}

// "1 + 2*X1 - 1*X1X2"; the zero series prints as "0".
inline std::string to_string(Series const& s) {
  if (s.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (auto const& [m, c] : s.expanded()) {
    std::string mono;
    for (auto g : m.letters) {
      mono += "X" + std::to_string(g);
    }
    BigInt mag = abs(c);
    std::string body = m.letters.empty() ? mag.str() : mag.str() + "*" + mono;
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace palwidth

#endif  // PALWIDTH_MAGNUS_HPP
