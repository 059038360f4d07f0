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

#ifndef PALWIDTH_CONTEXT_HPP
#define PALWIDTH_CONTEXT_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace palwidth {

// 1-based index of a basis element x_1, ..., x_n.
using Generator = std::uint32_t;

// The group N_{n,r}: free nilpotent of rank n and class r.
class GroupContext {
 public:
  GroupContext(std::uint32_t n, std::uint32_t r) : n_(n), r_(r) {
    if (n < 1) {
      throw domain_error("rank n must be at least 1");
    }
    if (r < 1) {
      throw domain_error("class r must be at least 1");
    }
  }

  [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
  [[nodiscard]] std::uint32_t r() const noexcept { return r_; }

  [[nodiscard]] GroupContext with_class(std::uint32_t r) const {
    return GroupContext(n_, r);
  }

  [[nodiscard]] std::string name() const {
    return "N(" + std::to_string(n_) + "," + std::to_string(r_) + ")";
  }

  friend bool operator==(GroupContext const&, GroupContext const&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t r_;
};

}  // namespace palwidth

#endif  // PALWIDTH_CONTEXT_HPP
