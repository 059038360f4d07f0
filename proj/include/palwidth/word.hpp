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

#ifndef PALWIDTH_WORD_HPP
#define PALWIDTH_WORD_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "context.hpp"
#include "errors.hpp"
#include "integer.hpp"

namespace palwidth {

struct Syllable {
  Generator gen;
  BigInt exp;

  friend bool operator==(Syllable const&, Syllable const&) = default;
};

// A freely reduced word over x_1, x_2, ..., stored as syllables x_g^e.
// Invariants: no zero exponents, adjacent syllables have distinct
// generators. The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Reduces the input; zero exponents and adjacent equal generators are fine.
  explicit Word(std::vector<Syllable> syllables) {
    syllables_.reserve(syllables.size());
    for (auto& s : syllables) {
      push(std::move(s));
    }
  }

  Word(std::initializer_list<Syllable> syllables)
      : Word(std::vector<Syllable>(syllables)) {}

  static Word generator(Generator g, BigInt exp = 1) {
    if (g == 0) {
      throw domain_error("generator indices are 1-based");
    }
    Word w;
    w.push(Syllable{g, std::move(exp)});
    return w;
  }

  [[nodiscard]] std::vector<Syllable> const& syllables() const noexcept {
    return syllables_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return syllables_.size(); }
  [[nodiscard]] bool empty() const noexcept { return syllables_.empty(); }
  [[nodiscard]] Syllable const& operator[](std::size_t i) const {
    return syllables_[i];
  }

  // Largest generator index used, 0 for the identity.
  [[nodiscard]] Generator max_generator() const noexcept {
    Generator m = 0;
    for (auto const& s : syllables_) {
      m = std::max(m, s.gen);
    }
    return m;
  }

  // Appends x_g^e and reduces against the tail.
  void push(Syllable s) {
    if (s.exp == 0) {
      return;
    }
    if (!syllables_.empty() && syllables_.back().gen == s.gen) {
      syllables_.back().exp += s.exp;
      if (syllables_.back().exp == 0) {
        syllables_.pop_back();
      }
      return;
    }
    syllables_.push_back(std::move(s));
  }

  void append(Word const& other) {
    for (auto const& s : other.syllables_) {
      push(s);
    }
  }

  friend bool operator==(Word const&, Word const&) = default;

  friend bool operator<(Word const& a, Word const& b) {
    return std::lexicographical_compare(
        a.syllables_.begin(), a.syllables_.end(), b.syllables_.begin(),
        b.syllables_.end(), [](Syllable const& x, Syllable const& y) {
          return x.gen != y.gen ? x.gen < y.gen : x.exp < y.exp;
        });
  }

 private:
  std::vector<Syllable> syllables_;
};

inline Word concat(Word a, Word const& b) {
  a.append(b);
  return a;
}

inline Word concat(std::initializer_list<Word> ws) {
  Word result;
  for (auto const& w : ws) {
    result.append(w);
  }
  return result;
}

inline Word invert(Word const& w) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    out.push_back(Syllable{it->gen, -it->exp});
  }
  return Word(std::move(out));
}

// Syllables in reverse order, exponents unchanged.
inline Word reverse(Word const& w) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  return Word(std::move(out));
}

// Reduced words only: syllable symmetry is the same as letter symmetry.
inline bool is_palindrome_word(Word const& w) {
  auto const& s = w.syllables();
  for (std::size_t i = 0, j = s.size(); i < j; ++i) {
    --j;
    if (i == j) {
      break;
    }
    if (!(s[i] == s[j])) {
      return false;
    }
  }
  return true;
}

// u a^alpha reverse(u)
inline Word make_palindrome(Word const& u, Generator a, BigInt const& alpha) {
  Word w = u;
  w.push(Syllable{a, alpha});
  w.append(reverse(u));
  return w;
}

// [u, v] = u^-1 v^-1 u v
inline Word commutator_word(Word const& u, Word const& v) {
  return concat({invert(u), invert(v), u, v});
}

// Left-normed [w_1, w_2, ..., w_k]; a single entry is returned as is.
inline Word left_normed_commutator(std::vector<Word> const& entries) {
  if (entries.empty()) {
    return Word();
  }
  Word acc = entries.front();
  for (std::size_t i = 1; i < entries.size(); ++i) {
    acc = commutator_word(acc, entries[i]);
  }
  return acc;
}

// Upper limit on the syllable count of an explicit word power.
inline constexpr std::size_t max_power_syllables = std::size_t(1) << 22;

// w^m as a reduced word. Conjugates of single syllables stay compact for
// any exponent; otherwise the output grows linearly in |m|.
inline Word power_word(Word const& w, BigInt const& m) {
  if (m == 0 || w.empty()) {
    return Word();
  }
  // w = c v c^-1 with v cyclically reduced.
  std::vector<Syllable> core = w.syllables();
  Word conj;
  std::size_t lo = 0, hi = core.size();
  while (hi - lo >= 2 && core[lo].gen == core[hi - 1].gen) {
    Syllable last = core[hi - 1];
    conj.push(Syllable{last.gen, -last.exp});
    core[lo].exp += last.exp;
    --hi;
    if (core[lo].exp == 0) {
      ++lo;
    }
  }
  Word v(std::vector<Syllable>(core.begin() + lo, core.begin() + hi));
  Word vm;
  if (v.size() == 1) {
    vm = Word::generator(v[0].gen, v[0].exp * m);
  } else {
    BigInt reps = abs(m);
    if (reps * v.size() > max_power_syllables) {
      throw domain_error("word power too large to expand");
    }
    Word base = m > 0 ? v : invert(v);
    auto count = static_cast<std::size_t>(reps);
    for (std::size_t i = 0; i < count; ++i) {
      vm.append(base);
    }
  }
  return concat({conj, vm, invert(conj)});
}

// Exponent sum of each of x_1..x_n; generators above n are rejected.
inline std::vector<BigInt> exponent_sums(Word const& w, std::uint32_t n) {
  std::vector<BigInt> sums(n);
  for (auto const& s : w.syllables()) {
    if (s.gen > n) {
      throw domain_error("generator x" + std::to_string(s.gen)
                         + " out of range for rank " + std::to_string(n));
    }
    sums[s.gen - 1] += s.exp;
  }
  return sums;
}

// Renames x_i to x_{map[i-1]}.
inline Word relabel(Word const& w, std::vector<Generator> const& map) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (auto const& s : w.syllables()) {
    out.push_back(Syllable{map.at(s.gen - 1), s.exp});
  }
  return Word(std::move(out));
}

inline void require_alphabet(Word const& w, GroupContext const& ctx) {
  if (w.max_generator() > ctx.n()) {
    throw domain_error("word uses x" + std::to_string(w.max_generator())
                       + " but the rank is " + std::to_string(ctx.n()));
  }
}

}  // namespace palwidth

#endif  // PALWIDTH_WORD_HPP
