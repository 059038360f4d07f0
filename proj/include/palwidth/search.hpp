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

#ifndef PALWIDTH_SEARCH_HPP
#define PALWIDTH_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "context.hpp"
#include "decompose.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "magnus.hpp"
#include "nil2.hpp"
#include "palcalc.hpp"
#include "word.hpp"

// Brute-force oracles. Everything here bounds l_P from above only: a
// miss within the bounds proves nothing.

namespace palwidth {

struct SearchBounds {
  std::uint32_t max_syllables;
  std::uint32_t max_exponent;
  std::uint32_t max_factors;

  void validate() const {
    if (max_syllables < 1 || max_exponent < 1 || max_factors < 1) {
      throw domain_error("search bounds must be positive");
    }
  }
};

// Calls f on every reduced palindrome word with at most max_syllables
// syllables and every exponent in [-max_exponent, max_exponent]. Reduced
// palindromes have an odd number of syllables. The identity is skipped.
template <typename F>
void for_each_palindrome_word(GroupContext const& ctx, SearchBounds const& b,
                              F&& f) {
  b.validate();
  std::uint32_t const n = ctx.n();
  std::int64_t const e_max = b.max_exponent;
  std::uint32_t const max_half = (b.max_syllables - 1) / 2;
  std::vector<Syllable> half;

  std::function<void(std::uint32_t)> rec = [&](std::uint32_t depth) {
    // center syllable
    for (Generator g = 1; g <= n; ++g) {
      if (!half.empty() && half.back().gen == g) {
        continue;
      }
      for (std::int64_t e = -e_max; e <= e_max; ++e) {
        if (e == 0) {
          continue;
        }
        std::vector<Syllable> s = half;
        s.push_back(Syllable{g, e});
        s.insert(s.end(), half.rbegin(), half.rend());
        f(Word(std::move(s)));
      }
    }
    if (depth == max_half) {
      return;
    }
    for (Generator g = 1; g <= n; ++g) {
      if (!half.empty() && half.back().gen == g) {
        continue;
      }
      for (std::int64_t e = -e_max; e <= e_max; ++e) {
        if (e == 0) {
          continue;
        }
        half.push_back(Syllable{g, e});
        rec(depth + 1);
        half.pop_back();
      }
    }
  };
  rec(0);
}

namespace detail {

inline BigInt max_abs_exponent(Word const& w) {
  BigInt m = 0;
  for (auto const& s : w.syllables()) {
    m = std::max(m, abs(s.exp));
  }
  return m;
}

}  // namespace detail

// All bounded palindrome words, smallest exponents first, then fewest
// syllables, then word order.
inline std::vector<Word> enumerate_palindrome_words(GroupContext const& ctx,
                                                    SearchBounds const& b) {
  std::vector<std::pair<std::pair<BigInt, std::size_t>, Word>> keyed;
  for_each_palindrome_word(ctx, b, [&keyed](Word w) {
    auto key = std::make_pair(detail::max_abs_exponent(w), w.size());
    keyed.emplace_back(std::move(key), std::move(w));
  });
  std::sort(keyed.begin(), keyed.end(), [](auto const& x, auto const& y) {
    if (x.first != y.first) {
      return x.first < y.first;
    }
    return x.second < y.second;
  });
  std::vector<Word> out;
  out.reserve(keyed.size());
  for (auto& [k, w] : keyed) {
    out.push_back(std::move(w));
  }
  return out;
}

// Breadth-first layers of products of bounded palindromes, keyed by the
// truncated series, so each group element is stored once with its least
// layer. Layers are materialized while they fit in ball_limit elements;
// deeper lengths are reached by peeling palindromes off the target until
// the remainder lands in the stored ball.
class PalindromeSearch {
 public:
  PalindromeSearch(GroupContext ctx, SearchBounds bounds,
                   std::size_t ball_limit = std::size_t(1) << 21)
      : ctx_(ctx), bounds_(bounds) {
    bounds_.validate();
    palindromes_ = enumerate_palindrome_words(ctx_, bounds_);
    inverse_series_.reserve(palindromes_.size());
    std::vector<Series> forward;
    forward.reserve(palindromes_.size());
    for (auto const& p : palindromes_) {
      forward.push_back(eval_word(p, ctx_));
      inverse_series_.push_back(eval_word(invert(p), ctx_));
    }
    build_ball(forward, ball_limit);
  }

  [[nodiscard]] GroupContext const& context() const noexcept { return ctx_; }
  [[nodiscard]] SearchBounds const& bounds() const noexcept { return bounds_; }
  [[nodiscard]] std::vector<Word> const& palindromes() const noexcept {
    return palindromes_;
  }
  [[nodiscard]] std::size_t ball_depth() const noexcept { return ball_depth_; }
  [[nodiscard]] std::size_t ball_size() const noexcept { return nodes_.size(); }

  // Least k <= max_factors with w a product of k bounded palindromes.
  [[nodiscard]] std::optional<LengthCertificate> query(Word const& w) const {
    require_alphabet(w, ctx_);
    Series const target = eval_word(w, ctx_);
    std::vector<std::size_t> prefix;
    for (std::size_t k = 0; k <= bounds_.max_factors; ++k) {
      if (auto chain = find(target, k, prefix)) {
        std::vector<Word> factors;
        for (auto i : *chain) {
          factors.push_back(palindromes_[i]);
        }
        auto f = certify(ctx_, w, std::move(factors));
        std::size_t lower = std::min(certified_lower_bound(w, ctx_), k);
        return LengthCertificate{ctx_, w, lower, LowerMethod::parity, k,
                                 std::move(f)};
      }
    }
    return std::nullopt;
  }

 private:
  struct Node {
    std::uint32_t layer;
    std::int64_t parent;
    std::int64_t palindrome;
  };

  void build_ball(std::vector<Series> const& forward, std::size_t limit) {
    nodes_.push_back(Node{0, -1, -1});
    index_.emplace(Series::one(ctx_), 0);
    std::vector<std::pair<std::size_t, Series>> frontier;
    frontier.emplace_back(0, Series::one(ctx_));
    ball_depth_ = 0;
    while (ball_depth_ < bounds_.max_factors
           && frontier.size() * forward.size() + nodes_.size() <= limit) {
      std::vector<std::pair<std::size_t, Series>> next;
      for (auto const& [node, s] : frontier) {
        for (std::size_t p = 0; p < forward.size(); ++p) {
          Series t = series_mul(s, forward[p]);
          if (index_.find(t) != index_.end()) {
            continue;
          }
          nodes_.push_back(Node{static_cast<std::uint32_t>(ball_depth_ + 1),
                                static_cast<std::int64_t>(node),
                                static_cast<std::int64_t>(p)});
          index_.emplace(t, nodes_.size() - 1);
          next.emplace_back(nodes_.size() - 1, std::move(t));
        }
      }
      ++ball_depth_;
      frontier = std::move(next);
      if (frontier.empty()) {
        break;
      }
    }
  }

  std::vector<std::size_t> chain_of(std::size_t node) const {
    std::vector<std::size_t> chain;
    for (auto i = static_cast<std::int64_t>(node); nodes_[i].parent >= 0;
         i = nodes_[i].parent) {
      chain.push_back(static_cast<std::size_t>(nodes_[i].palindrome));
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  // Palindrome indices of length at most k multiplying to target, after
  // the indices already in prefix.
  std::optional<std::vector<std::size_t>> find(
      Series const& target, std::size_t k,
      std::vector<std::size_t>& prefix) const {
    if (k <= ball_depth_) {
      auto it = index_.find(target);
      if (it == index_.end() || nodes_[it->second].layer > k) {
        return std::nullopt;
      }
      auto chain = prefix;
      auto tail = chain_of(it->second);
      chain.insert(chain.end(), tail.begin(), tail.end());
      return chain;
    }
    for (std::size_t p = 0; p < palindromes_.size(); ++p) {
      prefix.push_back(p);
      auto hit = find(series_mul(inverse_series_[p], target), k - 1, prefix);
      prefix.pop_back();
      if (hit) {
        return hit;
      }
    }
    return std::nullopt;
  }

  GroupContext ctx_;
  SearchBounds bounds_;
  std::vector<Word> palindromes_;
  std::vector<Series> inverse_series_;
  std::vector<Node> nodes_;
  std::unordered_map<Series, std::size_t, SeriesHash> index_;
  std::size_t ball_depth_ = 0;
};

inline std::optional<LengthCertificate> restricted_palindromic_length(
    Word const& w, GroupContext const& ctx, SearchBounds const& b) {
  return PalindromeSearch(ctx, b).query(w);
}

struct L1Counterexample {
  PalindromeFormN22 first;
  PalindromeFormN22 second;
  Nil2Element product;
};

struct L1Report {
  bool holds = true;
  std::uint64_t pairs_checked = 0;
  std::vector<L1Counterexample> counterexamples;
};

// Every product of two classified palindromes of N_{2,2} with parameters
// in [-bound, bound] that lands in the commutator subgroup must be trivial.
inline L1Report exhaustive_l1_check(std::int64_t bound) {
  if (bound < 0) {
    throw domain_error("bound must be non-negative");
  }
  using Kind = PalindromeFormN22::Kind;
  std::vector<std::pair<PalindromeFormN22, Nil2Element>> forms;
  for (Kind kind : {Kind::type_a, Kind::type_b}) {
    for (std::int64_t a = -bound; a <= bound; ++a) {
      for (std::int64_t b = -bound; b <= bound; ++b) {
        PalindromeFormN22 f{kind, a, b};
        forms.emplace_back(f, f.element());
      }
    }
  }
  L1Report report;
  for (auto const& [f1, e1] : forms) {
    for (auto const& [f2, e2] : forms) {
      ++report.pairs_checked;
      // Only the commutator coordinate needs the product formula.
      if (e1.alpha(1) + e2.alpha(1) != 0 || e1.alpha(2) + e2.alpha(2) != 0) {
        continue;
      }
      auto prod = mul(e1, e2);
      if (!prod.is_identity()) {
        report.holds = false;
        report.counterexamples.push_back(L1Counterexample{f1, f2, prod});
      }
    }
  }
  return report;
}

}  // namespace palwidth

#endif  // PALWIDTH_SEARCH_HPP
