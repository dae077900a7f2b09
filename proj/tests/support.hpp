// SPDX-License-Identifier: Apache-2.0

// Test-side reference implementations. They work on plain mpq_class values
// and recurse over the syntax tree directly, sharing no code with the
// library's evaluator or integrators.

#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hli/formula.hpp"
#include "hli/model.hpp"
#include "hli/vocabulary.hpp"

namespace hli::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(HLI_TEST_DATA) / name;
}

inline Rational01 q(const char* text) { return Rational01::parse(text); }

inline std::vector<Rational01> qs(std::initializer_list<const char*> texts) {
  std::vector<Rational01> out;
  for (const char* t : texts) out.push_back(q(t));
  return out;
}

/// Unary model over elements a, b, ... with one table per predicate.
inline WeakProbModel unary_model(const std::vector<Rational01>& measure,
                                 const std::map<std::string, std::vector<Rational01>>& tables,
                                 const std::map<std::string, Element>& constants = {}) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < measure.size(); ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::map<std::string, PredicateTable> preds;
  for (const auto& [name, values] : tables) preds[name] = PredicateTable{1, values};
  return WeakProbModel(names, measure, preds, {}, constants);
}

namespace oracle {

inline mpq_class lneg(const mpq_class& a) { return 1 - a; }
inline mpq_class limp(const mpq_class& a, const mpq_class& b) {
  mpq_class r = 1 - a + b;
  return r > 1 ? mpq_class(1) : r;
}
inline mpq_class lsand(const mpq_class& a, const mpq_class& b) {
  mpq_class r = a + b - 1;
  return r < 0 ? mpq_class(0) : r;
}
inline mpq_class lsor(const mpq_class& a, const mpq_class& b) {
  mpq_class r = a + b;
  return r > 1 ? mpq_class(1) : r;
}

using Env = std::map<std::string, Element>;

inline Element term_value(const Term& t, const WeakProbModel& m, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Variable: return env.at(t.name());
    case Term::Kind::Constant: return m.constants().at(t.name());
    case Term::Kind::Apply: {
      const FunctionTable& table = m.functions().at(t.name());
      std::size_t index = 0;
      for (const Term& a : t.args()) index = index * m.size() + term_value(a, m, env);
      return table.values.at(index);
    }
  }
  return 0;
}

/// ‖φ‖ with every quantifier ranging over the whole universe.
inline mpq_class value(const Formula& phi, const WeakProbModel& m, Env env = {}) {
  if (const auto* a = phi.as<Atom>()) {
    std::vector<Element> args;
    for (const Term& t : a->args) args.push_back(term_value(t, m, env));
    if (a->predicate == "eq") return args[0] == args[1] ? 1 : 0;
    const PredicateTable& table = m.predicates().at(a->predicate);
    std::size_t index = 0;
    for (Element e : args) index = index * m.size() + e;
    return table.values.at(index).value();
  }
  if (const auto* c = phi.as<TruthConstant>()) return c->value.value();
  if (const auto* n = phi.as<Negation>()) return lneg(value(n->body, m, env));
  if (const auto* b = phi.as<Binary>()) {
    const mpq_class x = value(b->lhs, m, env);
    const mpq_class y = value(b->rhs, m, env);
    switch (b->op) {
      case Connective::WeakAnd: return std::min(x, y);
      case Connective::WeakOr: return std::max(x, y);
      case Connective::StrongAnd: return lsand(x, y);
      case Connective::StrongOr: return lsor(x, y);
      case Connective::Implies: return limp(x, y);
    }
  }
  const auto* qf = phi.as<Quantified>();
  mpq_class lo = 1, hi = 0, sum = 0;
  for (Element e = 0; e < m.size(); ++e) {
    env[qf->var] = e;
    const mpq_class v = value(qf->body, m, env);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v * m.measure(e).value();
  }
  switch (qf->quantifier) {
    case Quantifier::Forall: return lo;
    case Quantifier::Exists: return hi;
    case Quantifier::Integral: return sum;
  }
  return 0;
}

/// Σ f(m)·μ(m) written out directly.
inline mpq_class expectation(const std::vector<Rational01>& f, const std::vector<Rational01>& mu) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i].value() * mu[i].value();
  return s;
}

}  // namespace oracle

}  // namespace hli::testing
