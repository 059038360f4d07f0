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

#ifndef PALWIDTH_NIL2_HPP
#define PALWIDTH_NIL2_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "word.hpp"

// Exponent normal form for N_{n,2}:
//
//   g = x_1^{a_1} ... x_n^{a_n} * prod_{1 <= j < i <= n} [x_i, x_j]^{b_ij}
//
// Commutators are central in class 2 and x_i^a x_j^b = x_j^b x_i^a
// [x_i, x_j]^{ab}, which gives the closed product
//
//   (a, b) (a', b') = (a + a', b_ij + b'_ij + a_i a'_j).

namespace palwidth {

class Nil2Element {
 public:
  explicit Nil2Element(std::uint32_t n)
      : n_(n), alpha_(n), beta_(n * (n - 1) / 2) {
    if (n < 1) {
      throw domain_error("rank n must be at least 1");
    }
  }

  // N_{2,2} element x^alpha y^beta [y,x]^gamma.
  static Nil2Element n22(BigInt alpha, BigInt beta, BigInt gamma) {
    Nil2Element e(2);
    e.alpha(1) = std::move(alpha);
    e.alpha(2) = std::move(beta);
    e.beta(2, 1) = std::move(gamma);
    return e;
  }

  [[nodiscard]] std::uint32_t rank() const noexcept { return n_; }

  [[nodiscard]] BigInt const& alpha(Generator i) const {
    return alpha_.at(i - 1);
  }
  BigInt& alpha(Generator i) { return alpha_.at(i - 1); }

  // Exponent of [x_i, x_j], requires 1 <= j < i <= n.
  [[nodiscard]] BigInt const& beta(Generator i, Generator j) const {
    return beta_.at(beta_index(i, j));
  }
  BigInt& beta(Generator i, Generator j) { return beta_.at(beta_index(i, j)); }

  [[nodiscard]] std::vector<BigInt> const& alphas() const noexcept {
    return alpha_;
  }

  [[nodiscard]] bool is_identity() const {
    for (auto const& a : alpha_) {
      if (a != 0) {
        return false;
      }
    }
    for (auto const& b : beta_) {
      if (b != 0) {
        return false;
      }
    }
    return true;
  }

  // Right multiplication by x_g^e.
  void multiply_syllable(Generator g, BigInt const& e) {
    if (g < 1 || g > n_) {
      throw domain_error("generator x" + std::to_string(g)
                         + " out of range for rank " + std::to_string(n_));
    }
    for (Generator i = g + 1; i <= n_; ++i) {
      beta(i, g) += alpha(i) * e;
    }
    alpha(g) += e;
  }

  friend bool operator==(Nil2Element const&, Nil2Element const&) = default;

 private:
  std::size_t beta_index(Generator i, Generator j) const {
    if (!(1 <= j && j < i && i <= n_)) {
      throw domain_error("commutator index must satisfy 1 <= j < i <= n");
    }
    return (i - 1) * (i - 2) / 2 + (j - 1);
  }

  std::uint32_t n_;
  std::vector<BigInt> alpha_;
  std::vector<BigInt> beta_;
};

inline Nil2Element from_word(Word const& w, std::uint32_t n) {
  Nil2Element e(n);
  for (auto const& s : w.syllables()) {
    e.multiply_syllable(s.gen, s.exp);
  }
  return e;
}

inline Nil2Element from_word(Word const& w, GroupContext const& ctx) {
  if (ctx.r() != 2) {
    throw domain_error("class-2 normal form requires r = 2");
  }
  return from_word(w, ctx.n());
}

inline Nil2Element mul(Nil2Element const& a, Nil2Element const& b) {
  if (a.rank() != b.rank()) {
    throw domain_error("rank mismatch in class-2 product");
  }
  std::uint32_t n = a.rank();
  Nil2Element out(n);
  for (Generator i = 1; i <= n; ++i) {
    out.alpha(i) = a.alpha(i) + b.alpha(i);
    for (Generator j = 1; j < i; ++j) {
      out.beta(i, j) = a.beta(i, j) + b.beta(i, j) + a.alpha(i) * b.alpha(j);
    }
  }
  return out;
}

inline Nil2Element inv(Nil2Element const& e) {
  std::uint32_t n = e.rank();
  Nil2Element out(n);
  for (Generator i = 1; i <= n; ++i) {
    out.alpha(i) = -e.alpha(i);
    for (Generator j = 1; j < i; ++j) {
      out.beta(i, j) = -e.beta(i, j) + e.alpha(i) * e.alpha(j);
    }
  }
  return out;
}

// x_1^{a_1} ... x_n^{a_n} followed by [x_i^{b_ij}, x_j] for i = 2..n,
// j = 1..i-1. In class 2, [x_i^b, x_j] = [x_i, x_j]^b, so each
// commutator power costs four syllables.
inline Word to_word(Nil2Element const& e) {
  std::uint32_t n = e.rank();
  Word w;
  for (Generator i = 1; i <= n; ++i) {
    w.push(Syllable{i, e.alpha(i)});
  }
  for (Generator i = 2; i <= n; ++i) {
    for (Generator j = 1; j < i; ++j) {
      if (e.beta(i, j) != 0) {
        w.append(commutator_word(Word::generator(i, e.beta(i, j)),
                                 Word::generator(j)));
      }
    }
  }
  return w;
}

// "x1^2 x2^2 [x2,x1]"; zero exponents omitted, identity is "1".
inline std::string format_normal_form(Nil2Element const& e) {
  std::string out;
  auto add = [&out](std::string const& base, BigInt const& exp) {
    if (exp == 0) {
      return;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += base;
    if (exp != 1) {
      out += "^" + exp.str();
    }
  };
  for (Generator i = 1; i <= e.rank(); ++i) {
    add("x" + std::to_string(i), e.alpha(i));
  }
  for (Generator i = 2; i <= e.rank(); ++i) {
    for (Generator j = 1; j < i; ++j) {
      add("[x" + std::to_string(i) + ",x" + std::to_string(j) + "]",
          e.beta(i, j));
    }
  }
  return out.empty() ? "1" : out;
}

// Image in Z_2^n of the exponent-sum vector.
struct ParityVector {
  std::vector<std::uint8_t> bits;

  [[nodiscard]] std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto b : bits) {
      w += b;
    }
    return w;
  }

  friend bool operator==(ParityVector const&, ParityVector const&) = default;
};

inline ParityVector parity_vector(Word const& w, std::uint32_t n) {
  auto sums = exponent_sums(w, n);
  ParityVector p;
  p.bits.reserve(n);
  for (auto const& s : sums) {
    p.bits.push_back(is_even(s) ? 0 : 1);
  }
  return p;
}

inline ParityVector operator+(ParityVector const& a, ParityVector const& b) {
  if (a.bits.size() != b.bits.size()) {
    throw domain_error("parity vector length mismatch");
  }
  ParityVector out = a;
  for (std::size_t i = 0; i < out.bits.size(); ++i) {
    out.bits[i] ^= b.bits[i];
  }
  return out;
}

}  // namespace palwidth

#endif  // PALWIDTH_NIL2_HPP
