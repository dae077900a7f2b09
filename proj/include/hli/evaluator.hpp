// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "hli/formula.hpp"
#include "hli/levels.hpp"
#include "hli/model.hpp"

namespace hli {

/// Assignment of universe elements to variables.
using Valuation = std::map<std::string, Element, std::less<>>;

enum class QuantifierDomain {
  /// ∀ and ∃ range over every element of the universe.
  AllElements,
  /// ∀ and ∃ range over the elements named by constants only; inf ∅ = 1 and
  /// sup ∅ = 0. Integrals still use the whole measure.
  NamedConstants,
};

struct EvalOptions {
  QuantifierDomain domain = QuantifierDomain::AllElements;
  /// Used by quantifier equalities, which evaluate to 0 or 1.
  LevelConfig levels;
};

/// ‖φ‖ under v. Throws Error{UnboundVariable} for a free variable missing
/// from v and Error{UnknownSymbol} for a symbol the model does not interpret.
Rational01 eval(const Formula& phi, const WeakProbModel& model, const Valuation& v = {}, const EvalOptions& opts = {});

/// Throws Error{NotASentence} naming the free variables of phi.
Rational01 eval_closed(const Formula& phi, const WeakProbModel& model, const EvalOptions& opts = {});

/// m ↦ ‖body‖ under v[var ↦ m]: the function a quantifier expression
/// quantifies over.
FuzzySubset matrix_function(const QuantExpr& q, const WeakProbModel& model, const Valuation& v = {},
                            const EvalOptions& opts = {});

}  // namespace hli
