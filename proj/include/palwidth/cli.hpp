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

#ifndef PALWIDTH_CLI_HPP
#define PALWIDTH_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "certificate.hpp"
#include "context.hpp"
#include "decompose.hpp"
#include "errors.hpp"
#include "magnus.hpp"
#include "nil2.hpp"
#include "search.hpp"
#include "word.hpp"
#include "word_io.hpp"

// palwidth <verb> [args] --n <rank> --r <class> [--json] [--out <path>]
//
// Exit status: 0 success, 1 bad input or failed precondition, 2 internal
// invariant breach (a constructed certificate did not verify).

namespace palwidth::cli {

namespace detail {

struct Options {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  bool json = false;
  std::string out_path;
  std::vector<std::string> words;
  std::string file;
  std::string lemma;
  std::int64_t bound = 5;
  std::uint32_t max_syllables = 3;
  std::uint32_t max_exponent = 3;
  std::uint32_t max_factors = 3;
};

inline std::string format_abelian(std::vector<BigInt> const& sums) {
  std::string out;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += format_syllable(Syllable{static_cast<Generator>(i + 1), sums[i]});
  }
  return out.empty() ? "1" : out;
}

inline std::string format_commutator_form(CommutatorForm const& form) {
  std::string out;
  for (std::size_t i = 0; i < form.u.size(); ++i) {
    auto const g = "x" + std::to_string(i + 1);
    std::string block;
    if (!form.u[i].empty()) {
      block = "[" + format_word(form.u[i]) + "," + g + "]";
    }
    if (form.alpha[i] != 0) {
      if (!block.empty()) {
        block += ' ';
      }
      block += format_syllable(
          Syllable{static_cast<Generator>(i + 1), form.alpha[i]});
    }
    if (!block.empty()) {
      out += (out.empty() ? "" : " ") + block;
    }
  }
  return out.empty() ? "1" : out;
}

// Normal form text for the class of the context.
inline std::string normal_form(Word const& w, GroupContext const& ctx) {
  require_alphabet(w, ctx);
  if (ctx.r() == 1) {
    return format_abelian(exponent_sums(w, ctx.n()));
  }
  if (ctx.r() == 2) {
    return format_normal_form(from_word(w, ctx.n()));
  }
  return format_commutator_form(commutator_form_decompose(w, ctx));
}

inline std::string certificate_text(LengthCertificate const& c,
                                    std::string const& label) {
  std::ostringstream os;
  os << "target: " << format_word(c.target) << '\n';
  os << "factors: " << c.witness.size() << '\n';
  for (std::size_t i = 0; i < c.witness.size(); ++i) {
    os << "p" << (i + 1) << " = " << format_word(c.witness.factors[i]) << '\n';
  }
  os << label << ": " << c.lower << " <= l_P <= " << c.upper << " ("
     << to_string(c.lower_method) << ")\n";
  return os.str();
}

// Length certificate for the context: exact in N(n,1) and N(2,2),
// otherwise a bracket [certified lower, constructive upper].
inline LengthCertificate length_certificate(Word const& w,
                                            GroupContext const& ctx) {
  require_alphabet(w, ctx);
  if (ctx.r() == 1) {
    return abelian_exact_length(w, ctx.n());
  }
  if (ctx.r() == 2 && ctx.n() == 2) {
    auto c = n22_exact_length(from_word(w, 2));
    c.target = w;
    c.witness.target = w;
    c.witness = verify_factorization(std::move(c.witness));
    return c;
  }
  auto f = best_decomposition(w, ctx);
  if (!f.verified) {
    throw internal_error("constructed factorization failed: " + f.diagnostic);
  }
  std::size_t k = f.size();
  return LengthCertificate{ctx, w, certified_lower_bound(w, ctx),
                           LowerMethod::parity, k, std::move(f)};
}

inline GroupContext context_of(Options const& o) {
  return GroupContext(o.n, o.r);
}

inline Word word_arg(Options const& o, std::size_t i,
                     GroupContext const& ctx) {
  return parse_word(o.words.at(i), ctx);
}

}  // namespace detail

inline int run(std::vector<std::string> const& args, std::ostream& out,
               std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Palindromic length and width in free nilpotent groups"};
  app.name("palwidth");
  app.require_subcommand(1);

  auto add_context = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank")->required();
    sub->add_option("--r", o.r, "nilpotency class")->required();
  };
  auto add_output = [&o](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_option("--out", o.out_path, "write output to a file");
  };

  struct Verb {
    std::string name;
    std::string help;
    std::size_t arity;
  };
  std::vector<Verb> const word_verbs = {
      {"normalize", "normal form of a word", 1},
      {"mul", "product of two words, in normal form", 2},
      {"inv", "inverse of a word, in normal form", 1},
      {"eval", "truncated power series of a word", 1},
      {"decompose", "constructive palindrome factorization", 1},
      {"length", "palindromic length (exact or bracketed)", 1},
      {"search", "bounded brute-force palindromic length", 1}};
  for (auto const& v : word_verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    add_context(sub);
    add_output(sub);
    sub->add_option("words", o.words, "word(s)")
        ->required()
        ->expected(static_cast<int>(v.arity))
        // Keep "[a,b]" as one word instead of a bracketed value list.
        ->allow_extra_args(false);
  }
  auto* search = app.get_subcommand("search");
  search->add_option("--max-syllables", o.max_syllables);
  search->add_option("--max-exponent", o.max_exponent);
  search->add_option("--max-factors", o.max_factors);

  auto* verify = app.add_subcommand("verify", "re-verify a JSON certificate");
  verify->add_option("file", o.file, "certificate path, '-' for stdin")
      ->required();
  add_output(verify);

  auto* lemma = app.add_subcommand("lemma-check", "exhaustive lemma replay");
  lemma->add_option("lemma", o.lemma, "lemma name (l1)")->required();
  lemma->add_option("--bound", o.bound, "parameter bound");
  add_output(lemma);

  std::vector<char const*> argv;
  argv.push_back("palwidth");
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::ostringstream result;
  try {
    auto* sub = app.get_subcommands().front();
    std::string const verb = sub->get_name();
    if (verb == "normalize" || verb == "inv" || verb == "mul") {
      auto ctx = detail::context_of(o);
      Word w = detail::word_arg(o, 0, ctx);
      if (verb == "inv") {
        w = invert(w);
      } else if (verb == "mul") {
        w = concat(w, detail::word_arg(o, 1, ctx));
      }
      auto nf = detail::normal_form(w, ctx);
      if (o.json) {
        result << nlohmann::json{{"n", ctx.n()},
                                 {"r", ctx.r()},
                                 {"word", format_word(w)},
                                 {"normal_form", nf}}
                      .dump()
               << '\n';
      } else {
        result << nf << '\n';
      }
    } else if (verb == "eval") {
      auto ctx = detail::context_of(o);
      auto s = to_string(eval_word(detail::word_arg(o, 0, ctx), ctx));
      if (o.json) {
        result << nlohmann::json{{"n", ctx.n()}, {"r", ctx.r()}, {"series", s}}
                      .dump()
               << '\n';
      } else {
        result << s << '\n';
      }
    } else if (verb == "decompose") {
      auto ctx = detail::context_of(o);
      Word w = detail::word_arg(o, 0, ctx);
      auto f = best_decomposition(w, ctx);
      if (!f.verified) {
        throw internal_error("constructed factorization failed: "
                             + f.diagnostic);
      }
      LengthCertificate c{ctx, w, 0, LowerMethod::parity, f.size(), f};
      if (ctx == GroupContext(2, 2)) {
        c.lower = n22_exact_length(from_word(w, 2)).lower;
        c.lower_method = LowerMethod::n22_classification;
      } else {
        c.lower = certified_lower_bound(w, ctx);
      }
      if (o.json) {
        result << to_json(c).dump(2) << '\n';
      } else {
        result << detail::certificate_text(c, "bounds");
      }
    } else if (verb == "length") {
      auto ctx = detail::context_of(o);
      auto c = detail::length_certificate(detail::word_arg(o, 0, ctx), ctx);
      if (o.json) {
        result << to_json(c).dump(2) << '\n';
      } else if (ctx.r() == 1 || ctx == GroupContext(2, 2)) {
        result << c.lower << '\n';
      } else {
        result << "bracket [" << c.lower << ", " << c.upper << "]\n";
      }
    } else if (verb == "search") {
      auto ctx = detail::context_of(o);
      SearchBounds b{o.max_syllables, o.max_exponent, o.max_factors};
      auto c = restricted_palindromic_length(detail::word_arg(o, 0, ctx), ctx, b);
      if (o.json) {
        result << (c ? to_json(*c) : nlohmann::json{{"found", false}}).dump(2)
               << '\n';
      } else if (c) {
        result << c->upper << '\n';
      } else {
        result << "none within bounds\n";
      }
    } else if (verb == "verify") {
      nlohmann::json j;
      try {
        if (o.file == "-") {
          j = nlohmann::json::parse(std::cin);
        } else {
          std::ifstream in(o.file);
          if (!in) {
            throw domain_error("cannot open " + o.file);
          }
          j = nlohmann::json::parse(in);
        }
      } catch (nlohmann::json::exception const& e) {
        throw domain_error(std::string("invalid JSON: ") + e.what());
      }
      auto c = certificate_from_json(j);
      bool claimed_exact = j.value("exact", c.lower == c.upper);
      auto check = check_certificate(c, claimed_exact);
      if (o.json) {
        result << nlohmann::json{{"verified", check.ok}, {"reason", check.reason}}
                      .dump()
               << '\n';
      } else {
        result << (check.ok ? "verified" : "not verified: " + check.reason)
               << '\n';
      }
      if (!check.ok) {
        err << "certificate rejected: " << check.reason << '\n';
        out << result.str();
        return 1;
      }
    } else if (verb == "lemma-check") {
      if (o.lemma != "l1") {
        throw domain_error("unknown lemma '" + o.lemma + "' (known: l1)");
      }
      auto report = exhaustive_l1_check(o.bound);
      if (o.json) {
        nlohmann::json ces = nlohmann::json::array();
        for (auto const& ce : report.counterexamples) {
          ces.push_back(format_normal_form(ce.product));
        }
        result << nlohmann::json{{"lemma", "l1"},
                                 {"bound", o.bound},
                                 {"holds", report.holds},
                                 {"pairs_checked", report.pairs_checked},
                                 {"counterexamples", ces}}
                      .dump()
               << '\n';
      } else {
        result << "holds=" << (report.holds ? "true" : "false")
               << " pairs_checked=" << report.pairs_checked
               << " counterexamples=" << report.counterexamples.size() << '\n';
      }
    }
  } catch (internal_error const& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (domain_error const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot write " << o.out_path << '\n';
      return 1;
    }
    file << result.str();
  } else {
    out << result.str();
  }
  return 0;
}

}  // namespace palwidth::cli

#endif  // PALWIDTH_CLI_HPP
