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

#ifndef PALWIDTH_CERTIFICATE_HPP
#define PALWIDTH_CERTIFICATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "context.hpp"
#include "decompose.hpp"
#include "errors.hpp"
#include "palcalc.hpp"
#include "word.hpp"
#include "word_io.hpp"

// JSON certificate:
//   { "n": int, "r": int, "target": word, "factors": [word], "verified": bool,
//     "lower_bound": int, "lower_method": "parity" | "n22-classification" |
//     "exhaustive", "upper_bound": int, "exact": bool }

namespace palwidth {

inline nlohmann::json to_json(LengthCertificate const& c) {
  nlohmann::json factors = nlohmann::json::array();
  for (auto const& f : c.witness.factors) {
    factors.push_back(format_word(f));
  }
  return nlohmann::json{{"n", c.ctx.n()},
                        {"r", c.ctx.r()},
                        {"target", format_word(c.target)},
                        {"factors", std::move(factors)},
                        {"verified", c.witness.verified},
                        {"lower_bound", c.lower},
                        {"lower_method", to_string(c.lower_method)},
                        {"upper_bound", c.upper},
                        {"exact", c.exact()}};
}

// Parsed but not yet checked; witness.verified is false.
inline LengthCertificate certificate_from_json(nlohmann::json const& j) {
  try {
    GroupContext ctx(j.at("n").get<std::uint32_t>(),
                     j.at("r").get<std::uint32_t>());
    Word target = parse_word(j.at("target").get<std::string>(), ctx);
    std::vector<Word> factors;
    for (auto const& f : j.at("factors")) {
      factors.push_back(parse_word(f.get<std::string>(), ctx));
    }
    Factorization witness{ctx, target, std::move(factors), false, {}};
    return LengthCertificate{
        ctx,
        std::move(target),
        j.at("lower_bound").get<std::size_t>(),
        lower_method_from_string(j.at("lower_method").get<std::string>()),
        j.at("upper_bound").get<std::size_t>(),
        std::move(witness)};
  } catch (nlohmann::json::exception const& e) {
    throw domain_error(std::string("malformed certificate: ") + e.what());
  }
}

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

// Re-verifies the witness and every claimed bound from scratch.
inline CertificateCheck check_certificate(LengthCertificate const& c,
                                          bool claimed_exact) {
  auto f = verify_factorization(c.witness);
  if (!f.verified) {
    return {false, f.diagnostic};
  }
  if (c.upper != f.size()) {
    return {false, "upper_bound does not match the factor count"};
  }
  if (c.lower > c.upper) {
    return {false, "lower_bound exceeds upper_bound"};
  }
  if (claimed_exact != (c.lower == c.upper)) {
    return {false, "exact flag inconsistent with the bounds"};
  }
  std::size_t provable = 0;
  switch (c.lower_method) {
    case LowerMethod::parity:
      provable = certified_lower_bound(c.target, c.ctx);
      break;
    case LowerMethod::n22_classification:
    case LowerMethod::exhaustive:
      if (!(c.ctx == GroupContext(2, 2))) {
        return {false, to_string(c.lower_method)
                           + " lower bounds are only available in N(2,2)"};
      }
      provable = n22_exact_length(from_word(c.target, 2)).lower;
      break;
  }
  if (c.lower > provable) {
    return {false, "lower_bound " + std::to_string(c.lower)
                       + " is not justified by " + to_string(c.lower_method)};
  }
  return {true, {}};
}

}  // namespace palwidth

#endif  // PALWIDTH_CERTIFICATE_HPP
