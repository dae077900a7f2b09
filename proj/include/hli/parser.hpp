// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "hli/formula.hpp"
#include "hli/vocabulary.hpp"

namespace hli {

// Concrete syntax (ASCII):
//
//   formula  := lattice [ "->" formula ]                  right-associative
//   lattice  := strong { ("/\" | "\/") strong }            left-associative
//   strong   := unary { ("&" | "|+|") unary }              left-associative
//   unary    := "~" unary | ("ALL" | "EX") var "." formula | primary
//   primary  := "INT" formula "d"var | "rat(" p ["/" q] ")" | "(" formula ")"
//             | Pred "(" term {"," term} ")"
//   term     := var | const | func "(" term {"," term} ")"
//   top      := formula [ "=" formula ]      both sides quantifier expressions
//
// ALL/EX bodies extend as far right as possible. A bare identifier is a
// constant when the vocabulary declares it and a variable otherwise.

/// Parses text against voc. Throws ParseError with kind SyntaxError,
/// UnknownSymbol, ArityMismatch, FlagMissing or ValueOutOfRange.
Formula parse_formula(std::string_view text, const Vocabulary& voc);

enum class FreeNames { AsVariables, AsConstants };

struct InferredFormula {
  Formula formula;
  Vocabulary vocabulary;
};

/// Parses without a fixed vocabulary: undeclared predicates and functions are
/// declared from their first use. Free bare names stay variables or become
/// constants according to mode. Symbols already in base keep their meaning.
InferredFormula parse_formula_inferring(std::string_view text, FreeNames mode, const Vocabulary& base = {});

/// Canonical text; parse_formula(print_formula(phi)) == phi for every phi
/// whose quantifier equalities occur only at the top level.
std::string print_formula(const Formula& phi);
std::string print_term(const Term& t);

}  // namespace hli
