// SPDX-License-Identifier: Apache-2.0

#include "hli/proof.hpp"

#include <algorithm>
#include <cctype>

#include "hli/error.hpp"
#include "hli/parser.hpp"

namespace hli {

namespace {

std::size_t parse_index(std::string_view text, std::string_view whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorKind::FormatError, "bad line number in \"" + std::string(whole) + "\"");
  }
  const std::size_t i = std::stoul(std::string(text));
  if (i == 0) throw Error(ErrorKind::FormatError, "line numbers start at 1 in \"" + std::string(whole) + "\"");
  return i;
}

std::vector<std::string_view> split_args(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

Justification parse_justification(std::string_view text) {
  Justification just;
  if (text == "premise") return just;
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::FormatError, "unknown justification \"" + std::string(text) + "\"");
  }
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (head == "axiom") {
    just.kind = Justification::Kind::Axiom;
    try {
      just.axiom = parse_axiom_id(rest);
    } catch (const Error& e) {
      throw Error(ErrorKind::FormatError, e.message());
    }
    return just;
  }
  const auto args = split_args(rest);
  if (head == "mp") {
    if (args.size() != 2) throw Error(ErrorKind::FormatError, "mp needs two line numbers");
    just.kind = Justification::Kind::ModusPonens;
    just.first = parse_index(args[0], text);
    just.second = parse_index(args[1], text);
    return just;
  }
  if (head == "gen" || head == "int-intro" || head == "int-mono") {
    if (args.size() != 2 || !is_identifier(args[1])) {
      throw Error(ErrorKind::FormatError, std::string(head) + " needs a line number and a variable");
    }
    just.kind = head == "gen"         ? Justification::Kind::Generalization
                : head == "int-intro" ? Justification::Kind::IntegralIntro
                                      : Justification::Kind::IntegralMono;
    just.first = parse_index(args[0], text);
    just.var = std::string(args[1]);
    return just;
  }
  throw Error(ErrorKind::FormatError, "unknown justification \"" + std::string(text) + "\"");
}

std::string to_string(const Justification& just) {
  switch (just.kind) {
    case Justification::Kind::Axiom: return "axiom:" + std::string(to_string(just.axiom));
    case Justification::Kind::Premise: return "premise";
    case Justification::Kind::ModusPonens:
      return "mp:" + std::to_string(just.first) + "," + std::to_string(just.second);
    case Justification::Kind::Generalization: return "gen:" + std::to_string(just.first) + "," + just.var;
    case Justification::Kind::IntegralIntro: return "int-intro:" + std::to_string(just.first) + "," + just.var;
    case Justification::Kind::IntegralMono: return "int-mono:" + std::to_string(just.first) + "," + just.var;
  }
  return "?";
}

ProofCheck check_proof(const ProofScript& script) {
  ProofCheck result;
  const auto& lines = script.lines;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t number = k + 1;
    const Formula& phi = lines[k].formula;
    const Justification& just = lines[k].just;
    auto fail = [&](std::string reason) {
      result.invalid_line = number;
      result.reason = std::move(reason);
      return result;
    };
    auto earlier = [&](std::size_t i) -> const Formula* {
      return i >= 1 && i < number ? &lines[i - 1].formula : nullptr;
    };

    switch (just.kind) {
      case Justification::Kind::Premise:
        break;
      case Justification::Kind::Axiom:
        if (!matches_axiom(just.axiom, phi, just.witness)) {
          return fail("not an instance of " + std::string(to_string(just.axiom)));
        }
        break;
      case Justification::Kind::ModusPonens: {
        const Formula* minor = earlier(just.first);
        const Formula* major = earlier(just.second);
        if (!minor || !major) return fail("mp cites a line that is not earlier");
        if (!(*major == implies(*minor, phi))) {
          return fail("line " + std::to_string(just.second) + " is not " +
                      print_formula(implies(*minor, phi)));
        }
        break;
      }
      case Justification::Kind::Generalization:
      case Justification::Kind::IntegralIntro: {
        const Formula* premise = earlier(just.first);
        if (!premise) return fail("rule cites a line that is not earlier");
        const Formula expected = just.kind == Justification::Kind::Generalization ? forall(just.var, *premise)
                                                                                   : integral(just.var, *premise);
        if (!(phi == expected)) return fail("expected " + print_formula(expected));
        break;
      }
      case Justification::Kind::IntegralMono: {
        const Formula* premise = earlier(just.first);
        if (!premise) return fail("int-mono cites a line that is not earlier");
        const auto* b = premise->as<Binary>();
        if (!b || b->op != Connective::Implies) {
          return fail("line " + std::to_string(just.first) + " is not an implication");
        }
        const Formula expected = implies(integral(just.var, b->lhs), integral(just.var, b->rhs));
        if (!(phi == expected)) return fail("expected " + print_formula(expected));
        break;
      }
    }
    ++result.lines_checked;
  }
  return result;
}

}  // namespace hli
