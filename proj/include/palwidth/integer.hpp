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

#ifndef PALWIDTH_INTEGER_HPP
#define PALWIDTH_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <tuple>

namespace palwidth {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(BigInt const& x) { return x.str(); }

inline BigInt abs(BigInt const& x) { return x < 0 ? BigInt(-x) : x; }

inline bool is_even(BigInt const& x) {
  return x % 2 == 0;
}

// Non-negative gcd; gcd(0, 0) == 0.
inline BigInt gcd(BigInt const& a, BigInt const& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// True iff d | x, with the convention that 0 divides only 0.
inline bool divides(BigInt const& d, BigInt const& x) {
  if (d == 0) {
    return x == 0;
  }
  return x % d == 0;
}

// Returns (g, s, t) with a*s + b*t == g == gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> extended_gcd(BigInt const& a,
                                                       BigInt const& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// floor(a / b) for b != 0.
inline BigInt floor_div(BigInt const& a, BigInt const& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

// Nearest integer to a / b (ties toward -infinity), b != 0.
inline BigInt round_div(BigInt const& a, BigInt const& b) {
  BigInt num = 2 * a + b;
  BigInt den = 2 * b;
  return floor_div(num, den);
}

// Generalized binomial coefficient C(e, k) for any integer e and k >= 0.
inline BigInt binomial(BigInt const& e, unsigned k) {
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= (e - i);
    den *= (i + 1);
  }
  return num / den;
}

}  // namespace palwidth

#endif  // PALWIDTH_INTEGER_HPP
