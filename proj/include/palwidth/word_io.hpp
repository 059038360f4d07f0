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

#ifndef PALWIDTH_WORD_IO_HPP
#define PALWIDTH_WORD_IO_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "context.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "word.hpp"

// Text syntax for words:
//
//   word   := factor*
//   factor := atom power?
//   atom   := GEN | '(' word ')' | '[' word ',' word ']'
//   power  := '^' '-'? DIGIT+
//   GEN    := 'x' DIGIT+            (1-based, at most n)
//
// Whitespace separates factors and is otherwise ignored. "1" on its own is
// the identity. Brackets are commutators [g,h] = g^-1 h^-1 g h.

namespace palwidth {

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, GroupContext const& ctx)
      : text_(text), ctx_(ctx) {}

  Word parse() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '1' && only_space_after(pos_ + 1)) {
      return Word();
    }
    Word w = parse_word();
    skip_space();
    if (pos_ != text_.size()) {
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return w;
  }

 private:
  bool only_space_after(std::size_t p) const {
    for (; p < text_.size(); ++p) {
      if (!std::isspace(static_cast<unsigned char>(text_[p]))) {
        return false;
      }
    }
    return true;
  }

  [[noreturn]] void fail(std::string const& msg) const {
    throw parse_error(msg, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size()
           && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  BigInt digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size()
           && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected digits");
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Word parse_word() {
    Word w;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        break;
      }
      char c = text_[pos_];
      if (c != 'x' && c != '(' && c != '[') {
        break;
      }
      w.append(parse_factor());
    }
    return w;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    if (at('^')) {
      ++pos_;
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      BigInt e = digits();
      if (negative) {
        e = -e;
      }
      return power_word(atom, e);
    }
    return atom;
  }

  Word parse_atom() {
    skip_space();
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      BigInt index = digits();
      if (index < 1 || index > ctx_.n()) {
        pos_ = start;
        fail("generator x" + index.str() + " out of range 1.."
             + std::to_string(ctx_.n()));
      }
      return Word::generator(static_cast<Generator>(index));
    }
    if (c == '(') {
      ++pos_;
      Word inner = parse_word();
      expect(')');
      return inner;
    }
    ++pos_;  // '['
    Word left = parse_word();
    expect(',');
    Word right = parse_word();
    expect(']');
    return commutator_word(left, right);
  }

  std::string_view text_;
  GroupContext const& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text, GroupContext const& ctx) {
  return detail::WordParser(text, ctx).parse();
}

inline std::string format_syllable(Syllable const& s) {
  std::string out = "x" + std::to_string(s.gen);
  if (s.exp != 1) {
    out += "^" + s.exp.str();
  }
  return out;
}

inline std::string format_word(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (auto const& s : w.syllables()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += format_syllable(s);
  }
  return out;
}

}  // namespace palwidth

#endif  // PALWIDTH_WORD_IO_HPP
