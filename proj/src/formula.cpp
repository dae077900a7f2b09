// SPDX-License-Identifier: Apache-2.0

#include "hli/formula.hpp"

#include <algorithm>

#include "hli/error.hpp"

namespace hli {

// ---- Term -------------------------------------------------------------------

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Variable, std::move(name), {}}));
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Constant, std::move(name), {}}));
}

Term Term::apply(std::string function, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Kind::Apply, std::move(function), std::move(args)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name && a.node_->args == b.node_->args;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->data == b.node_->data;
}

// ---- Builders ---------------------------------------------------------------

Formula atom(std::string predicate, std::vector<Term> args) { return Atom{std::move(predicate), std::move(args)}; }
Formula truth_constant(const Rational01& value) { return TruthConstant{value}; }
Formula negation(Formula body) { return Negation{std::move(body)}; }
Formula binary(Connective op, Formula lhs, Formula rhs) { return Binary{op, std::move(lhs), std::move(rhs)}; }
Formula weak_and(Formula lhs, Formula rhs) { return binary(Connective::WeakAnd, std::move(lhs), std::move(rhs)); }
Formula weak_or(Formula lhs, Formula rhs) { return binary(Connective::WeakOr, std::move(lhs), std::move(rhs)); }
Formula strong_and(Formula lhs, Formula rhs) { return binary(Connective::StrongAnd, std::move(lhs), std::move(rhs)); }
Formula strong_or(Formula lhs, Formula rhs) { return binary(Connective::StrongOr, std::move(lhs), std::move(rhs)); }
Formula implies(Formula lhs, Formula rhs) { return binary(Connective::Implies, std::move(lhs), std::move(rhs)); }
Formula forall(std::string var, Formula body) { return Quantified{Quantifier::Forall, std::move(var), std::move(body)}; }
Formula exists(std::string var, Formula body) { return Quantified{Quantifier::Exists, std::move(var), std::move(body)}; }
Formula integral(std::string var, Formula body) {
  return Quantified{Quantifier::Integral, std::move(var), std::move(body)};
}
Formula quantifier_equality(QuantExpr lhs, QuantExpr rhs) {
  return QuantifierEquality{std::move(lhs), std::move(rhs)};
}
Formula equivalence(Formula lhs, Formula rhs) { return weak_and(implies(lhs, rhs), implies(rhs, lhs)); }

// ---- Variables --------------------------------------------------------------

namespace {

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_term_vars(a, out);
}

void collect_free(const Formula& phi, std::set<std::string>& out);

void collect_free_quantified(const Quantified& q, std::set<std::string>& out) {
  std::set<std::string> inner;
  collect_free(q.body, inner);
  inner.erase(q.var);
  out.insert(inner.begin(), inner.end());
}

void collect_free(const Formula& phi, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Atom& a) {
                   for (const auto& t : a.args) collect_term_vars(t, out);
                 },
                 [](const TruthConstant&) {},
                 [&](const Negation& n) { collect_free(n.body, out); },
                 [&](const Binary& b) {
                   collect_free(b.lhs, out);
                   collect_free(b.rhs, out);
                 },
                 [&](const Quantified& q) { collect_free_quantified(q, out); },
                 [&](const QuantifierEquality& e) {
                   collect_free_quantified(e.lhs, out);
                   collect_free_quantified(e.rhs, out);
                 },
             },
             phi.node().data);
}

}  // namespace

std::set<std::string> term_vars(const Term& t) {
  std::set<std::string> out;
  collect_term_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& phi) {
  std::set<std::string> out;
  collect_free(phi, out);
  return out;
}

bool is_sentence(const Formula& phi) { return free_vars(phi).empty(); }

// ---- Substitution -----------------------------------------------------------

Term substitute(const Term& term, const std::string& var, const Term& t) {
  switch (term.kind()) {
    case Term::Kind::Variable: return term.name() == var ? t : term;
    case Term::Kind::Constant: return term;
    case Term::Kind::Apply: {
      std::vector<Term> args;
      args.reserve(term.args().size());
      for (const auto& a : term.args()) args.push_back(substitute(a, var, t));
      return Term::apply(term.name(), std::move(args));
    }
  }
  return term;
}

namespace {

Quantified substitute_quantified(const Quantified& q, const std::string& var, const Term& t,
                                 const std::set<std::string>& t_vars) {
  if (q.var == var) return q;
  const auto body_free = free_vars(q.body);
  if (!body_free.contains(var)) return q;
  if (t_vars.contains(q.var)) {
    throw Error(ErrorKind::CaptureError, "substituting for " + var + " would capture " + q.var);
  }
  return Quantified{q.quantifier, q.var, substitute(q.body, var, t)};
}

}  // namespace

Formula substitute(const Formula& phi, const std::string& var, const Term& t) {
  const auto t_vars = term_vars(t);
  return std::visit(
      overloaded{
          [&](const Atom& a) -> Formula {
            std::vector<Term> args;
            args.reserve(a.args.size());
            for (const auto& arg : a.args) args.push_back(substitute(arg, var, t));
            return Atom{a.predicate, std::move(args)};
          },
          [&](const TruthConstant&) -> Formula { return phi; },
          [&](const Negation& n) -> Formula { return Negation{substitute(n.body, var, t)}; },
          [&](const Binary& b) -> Formula {
            return Binary{b.op, substitute(b.lhs, var, t), substitute(b.rhs, var, t)};
          },
          [&](const Quantified& q) -> Formula { return substitute_quantified(q, var, t, t_vars); },
          [&](const QuantifierEquality& e) -> Formula {
            return QuantifierEquality{substitute_quantified(e.lhs, var, t, t_vars),
                                      substitute_quantified(e.rhs, var, t, t_vars)};
          },
      },
      phi.node().data);
}

// ---- Renaming ---------------------------------------------------------------

namespace {

const std::string& renamed(const SymbolRenaming& rho, const std::string& name) {
  const auto it = rho.find(name);
  return it == rho.end() ? name : it->second;
}

Term rename_term(const Term& t, const SymbolRenaming& rho) {
  switch (t.kind()) {
    case Term::Kind::Variable: return t;
    case Term::Kind::Constant: return Term::constant(renamed(rho, t.name()));
    case Term::Kind::Apply: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(rename_term(a, rho));
      return Term::apply(renamed(rho, t.name()), std::move(args));
    }
  }
  return t;
}

Quantified rename_quantified(const Quantified& q, const SymbolRenaming& rho) {
  return Quantified{q.quantifier, q.var, rename_symbols(q.body, rho)};
}

}  // namespace

Formula rename_symbols(const Formula& phi, const SymbolRenaming& rho) {
  return std::visit(
      overloaded{
          [&](const Atom& a) -> Formula {
            std::vector<Term> args;
            for (const auto& t : a.args) args.push_back(rename_term(t, rho));
            const bool builtin = a.predicate == kEqPredicate || a.predicate == kApproxPredicate;
            return Atom{builtin ? a.predicate : renamed(rho, a.predicate), std::move(args)};
          },
          [&](const TruthConstant&) -> Formula { return phi; },
          [&](const Negation& n) -> Formula { return Negation{rename_symbols(n.body, rho)}; },
          [&](const Binary& b) -> Formula {
            return Binary{b.op, rename_symbols(b.lhs, rho), rename_symbols(b.rhs, rho)};
          },
          [&](const Quantified& q) -> Formula { return rename_quantified(q, rho); },
          [&](const QuantifierEquality& e) -> Formula {
            return QuantifierEquality{rename_quantified(e.lhs, rho), rename_quantified(e.rhs, rho)};
          },
      },
      phi.node().data);
}

// ---- Well-formedness --------------------------------------------------------

namespace {

void check_term(const Term& t, const Vocabulary& voc) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      if (voc.declares(t.name())) {
        throw Error(ErrorKind::UnknownSymbol, "symbol " + t.name() + " used as a variable");
      }
      return;
    case Term::Kind::Constant:
      if (!voc.has_constant(t.name())) throw Error(ErrorKind::UnknownSymbol, "unknown constant " + t.name());
      return;
    case Term::Kind::Apply: {
      const auto arity = voc.function_arity(t.name());
      if (!arity) throw Error(ErrorKind::UnknownSymbol, "unknown function " + t.name());
      if (*arity != t.args().size()) {
        throw Error(ErrorKind::ArityMismatch, t.name() + " expects " + std::to_string(*arity) + " arguments, got " +
                                                  std::to_string(t.args().size()));
      }
      for (const auto& a : t.args()) check_term(a, voc);
      return;
    }
  }
}

void check_formula(const Formula& phi, const Vocabulary& voc);

void check_quantified(const Quantified& q, const Vocabulary& voc) {
  if (voc.declares(q.var)) throw Error(ErrorKind::UnknownSymbol, "symbol " + q.var + " bound as a variable");
  check_formula(q.body, voc);
}

void check_formula(const Formula& phi, const Vocabulary& voc) {
  std::visit(overloaded{
                 [&](const Atom& a) {
                   std::size_t expected = 0;
                   if (a.predicate == kEqPredicate) {
                     if (!voc.has_eq()) throw Error(ErrorKind::FlagMissing, "eq is not enabled");
                     expected = 2;
                   } else if (a.predicate == kApproxPredicate) {
                     if (!voc.has_approx()) throw Error(ErrorKind::FlagMissing, "approx is not enabled");
                     expected = 2;
                   } else {
                     const auto arity = voc.predicate_arity(a.predicate);
                     if (!arity) throw Error(ErrorKind::UnknownSymbol, "unknown predicate " + a.predicate);
                     expected = *arity;
                   }
                   if (expected != a.args.size()) {
                     throw Error(ErrorKind::ArityMismatch, a.predicate + " expects " + std::to_string(expected) +
                                                               " arguments, got " + std::to_string(a.args.size()));
                   }
                   for (const auto& t : a.args) check_term(t, voc);
                 },
                 [](const TruthConstant&) {},
                 [&](const Negation& n) { check_formula(n.body, voc); },
                 [&](const Binary& b) {
                   check_formula(b.lhs, voc);
                   check_formula(b.rhs, voc);
                 },
                 [&](const Quantified& q) { check_quantified(q, voc); },
                 [&](const QuantifierEquality& e) {
                   if (!voc.has_eq()) throw Error(ErrorKind::FlagMissing, "quantifier equality is not enabled");
                   check_quantified(e.lhs, voc);
                   check_quantified(e.rhs, voc);
                 },
             },
             phi.node().data);
}

void collect_term_symbols(const Term& t, Vocabulary& voc) {
  if (t.kind() == Term::Kind::Constant && !voc.has_constant(t.name())) voc.add_constant(t.name());
  if (t.kind() == Term::Kind::Apply) {
    if (!voc.function_arity(t.name())) voc.add_function(t.name(), t.args().size());
    for (const auto& a : t.args()) collect_term_symbols(a, voc);
  }
}

void collect_symbols(const Formula& phi, Vocabulary& voc) {
  std::visit(overloaded{
                 [&](const Atom& a) {
                   if (a.predicate == kEqPredicate) {
                     voc.set_has_eq(true);
                   } else if (a.predicate == kApproxPredicate) {
                     voc.set_has_approx(true);
                   } else if (!voc.predicate_arity(a.predicate)) {
                     voc.add_predicate(a.predicate, a.args.size());
                   }
                   for (const auto& t : a.args) collect_term_symbols(t, voc);
                 },
                 [](const TruthConstant&) {},
                 [&](const Negation& n) { collect_symbols(n.body, voc); },
                 [&](const Binary& b) {
                   collect_symbols(b.lhs, voc);
                   collect_symbols(b.rhs, voc);
                 },
                 [&](const Quantified& q) { collect_symbols(q.body, voc); },
                 [&](const QuantifierEquality& e) {
                   voc.set_has_eq(true);
                   collect_symbols(e.lhs.body, voc);
                   collect_symbols(e.rhs.body, voc);
                 },
             },
             phi.node().data);
}

}  // namespace

void check_well_formed(const Formula& phi, const Vocabulary& voc) { check_formula(phi, voc); }

bool is_well_formed(const Formula& phi, const Vocabulary& voc) {
  try {
    check_formula(phi, voc);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Vocabulary symbols_of(const Formula& phi) {
  Vocabulary voc;
  collect_symbols(phi, voc);
  return voc;
}

std::size_t depth(const Formula& phi) {
  return std::visit(overloaded{
                        [](const Atom&) -> std::size_t { return 0; },
                        [](const TruthConstant&) -> std::size_t { return 0; },
                        [](const Negation& n) -> std::size_t { return 1 + depth(n.body); },
                        [](const Binary& b) -> std::size_t { return 1 + std::max(depth(b.lhs), depth(b.rhs)); },
                        [](const Quantified& q) -> std::size_t { return 1 + depth(q.body); },
                        [](const QuantifierEquality& e) -> std::size_t {
                          return 1 + std::max(depth(e.lhs.body), depth(e.rhs.body));
                        },
                    },
                    phi.node().data);
}

// ---- Congruence axioms ------------------------------------------------------

namespace {

std::string fresh_prefix(const Vocabulary& voc, std::string prefix, std::size_t max_arity) {
  auto clashes = [&](const std::string& p) {
    for (std::size_t i = 1; i <= max_arity; ++i) {
      if (voc.declares(p + std::to_string(i))) return true;
    }
    return false;
  };
  while (clashes(prefix)) prefix += "_";
  return prefix;
}

}  // namespace

std::vector<Formula> congruence_axioms(const Vocabulary& voc, CongruenceRelation relation) {
  const bool is_eq = relation == CongruenceRelation::Eq;
  if (is_eq && !voc.has_eq()) throw Error(ErrorKind::FlagMissing, "vocabulary does not enable eq");
  if (!is_eq && !voc.has_approx()) throw Error(ErrorKind::FlagMissing, "vocabulary does not enable approx");
  const std::string rel(is_eq ? kEqPredicate : kApproxPredicate);

  std::size_t max_arity = 0;
  for (const auto& s : voc.functions()) max_arity = std::max(max_arity, s.arity);
  for (const auto& s : voc.predicates()) max_arity = std::max(max_arity, s.arity);
  const std::string xp = fresh_prefix(voc, "x", max_arity);
  const std::string yp = fresh_prefix(voc, "y", max_arity);

  auto vars = [](const std::string& prefix, std::size_t n) {
    std::vector<Term> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(Term::variable(prefix + std::to_string(i)));
    return out;
  };
  auto antecedent = [&](const std::vector<Term>& xs, const std::vector<Term>& ys) {
    Formula acc = atom(rel, {xs[0], ys[0]});
    for (std::size_t i = 1; i < xs.size(); ++i) acc = weak_and(acc, atom(rel, {xs[i], ys[i]}));
    return acc;
  };

  // On crisp antecedents →_L coincides with the classical conditional, so one
  // implication connective serves both relations.
  std::vector<Formula> out;
  for (const auto& f : voc.functions()) {
    const auto xs = vars(xp, f.arity);
    const auto ys = vars(yp, f.arity);
    out.push_back(implies(antecedent(xs, ys), atom(rel, {Term::apply(f.name, xs), Term::apply(f.name, ys)})));
  }
  for (const auto& p : voc.predicates()) {
    const auto xs = vars(xp, p.arity);
    const auto ys = vars(yp, p.arity);
    const Formula px = atom(p.name, xs);
    const Formula py = atom(p.name, ys);
    out.push_back(implies(antecedent(xs, ys), is_eq ? implies(px, py) : equivalence(px, py)));
  }
  return out;
}

}  // namespace hli
