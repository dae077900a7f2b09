// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "hli/rational.hpp"
#include "hli/vocabulary.hpp"

namespace hli {

/// Immutable term: a variable, a constant symbol, or a function application.
/// Copies share structure.
class Term {
 public:
  enum class Kind { Variable, Constant, Apply };

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term apply(std::string function, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  bool is_variable() const { return kind() == Kind::Variable; }
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaNode;

/// Immutable formula of the integral logic. Structural equality is exact
/// (bound variable names included), which is what approximation systems and
/// the proof checker compare on.
class Formula {
 public:
  template <class Alternative>
    requires(!std::is_same_v<std::remove_cvref_t<Alternative>, Formula>)
  Formula(Alternative alt);  // NOLINT: implicit from any node alternative

  const FormulaNode& node() const { return *node_; }

  template <class T>
  const T* as() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  std::shared_ptr<const FormulaNode> node_;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Truth constant r̂ for rational r in [0,1].
struct TruthConstant {
  Rational01 value;
  friend bool operator==(const TruthConstant&, const TruthConstant&) = default;
};

struct Negation {
  Formula body;
  friend bool operator==(const Negation&, const Negation&) = default;
};

enum class Connective { WeakAnd, WeakOr, StrongAnd, StrongOr, Implies };

struct Binary {
  Connective op;
  Formula lhs;
  Formula rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

enum class Quantifier { Forall, Exists, Integral };

/// ∀x φ, ∃x φ or ∫φ dx. Also serves as the quantifier expression compared
/// by a quantifier equality.
struct Quantified {
  Quantifier quantifier;
  std::string var;
  Formula body;
  friend bool operator==(const Quantified&, const Quantified&) = default;
};

using QuantExpr = Quantified;

/// Qφ(x) = Qψ(y). Crisp: it holds or it does not.
struct QuantifierEquality {
  QuantExpr lhs;
  QuantExpr rhs;
  friend bool operator==(const QuantifierEquality&, const QuantifierEquality&) = default;
};

struct FormulaNode {
  std::variant<Atom, TruthConstant, Negation, Binary, Quantified, QuantifierEquality> data;
};

template <class Alternative>
  requires(!std::is_same_v<std::remove_cvref_t<Alternative>, Formula>)
Formula::Formula(Alternative alt) : node_(std::make_shared<const FormulaNode>(FormulaNode{std::move(alt)})) {}

template <class T>
const T* Formula::as() const {
  return std::get_if<T>(&node_->data);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Builders.
Formula atom(std::string predicate, std::vector<Term> args);
Formula truth_constant(const Rational01& value);
Formula negation(Formula body);
Formula binary(Connective op, Formula lhs, Formula rhs);
Formula weak_and(Formula lhs, Formula rhs);
Formula weak_or(Formula lhs, Formula rhs);
Formula strong_and(Formula lhs, Formula rhs);
Formula strong_or(Formula lhs, Formula rhs);
Formula implies(Formula lhs, Formula rhs);
Formula forall(std::string var, Formula body);
Formula exists(std::string var, Formula body);
Formula integral(std::string var, Formula body);
Formula quantifier_equality(QuantExpr lhs, QuantExpr rhs);
/// (a →_L b) ∧ (b →_L a); value 1 − |a − b|. Used for ≡ in axioms.
Formula equivalence(Formula lhs, Formula rhs);

std::set<std::string> free_vars(const Formula& phi);
std::set<std::string> term_vars(const Term& t);
bool is_sentence(const Formula& phi);

/// Replaces the free occurrences of var by t. Throws Error{CaptureError} if a
/// variable of t would be captured by a quantifier.
Formula substitute(const Formula& phi, const std::string& var, const Term& t);
Term substitute(const Term& term, const std::string& var, const Term& t);

/// Renames predicate, function and constant symbols.
Formula rename_symbols(const Formula& phi, const SymbolRenaming& rho);

/// Throws Error{UnknownSymbol | ArityMismatch | FlagMissing} when phi uses a
/// symbol or construct that voc does not provide.
void check_well_formed(const Formula& phi, const Vocabulary& voc);
bool is_well_formed(const Formula& phi, const Vocabulary& voc);

/// The smallest vocabulary over which phi is well formed.
Vocabulary symbols_of(const Formula& phi);

std::size_t depth(const Formula& phi);

enum class CongruenceRelation { Eq, Approx };

/// One congruence formula per function symbol and per predicate symbol of voc,
/// over fresh variables x1..xn, y1..yn. For Eq the relation atom is the crisp
/// `eq`; for Approx it is `approx`, and a predicate's value similarity
/// P(x̄) ≈ P(ȳ) is written as the biresiduum (P(x̄) → P(ȳ)) ∧ (P(ȳ) → P(x̄)).
/// Throws Error{FlagMissing} if the relation is not enabled in voc.
std::vector<Formula> congruence_axioms(const Vocabulary& voc, CongruenceRelation relation);

}  // namespace hli
