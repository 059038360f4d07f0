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

#ifndef PALWIDTH_ERRORS_HPP
#define PALWIDTH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palwidth {

// Bad user input or a violated precondition. The CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public domain_error {
 public:
  parse_error(std::string const& what, std::size_t position)
      : domain_error("parse error at position " + std::to_string(position)
                     + ": " + what),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A constructed object failed its own post-condition; always a bug.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace palwidth

#endif  // PALWIDTH_ERRORS_HPP
