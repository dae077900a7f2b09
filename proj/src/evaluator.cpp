// SPDX-License-Identifier: Apache-2.0

#include "hli/evaluator.hpp"

#include <algorithm>
#include <set>
#include <string_view>

#include "hli/error.hpp"
#include "hli/integral.hpp"
#include "hli/satisfaction.hpp"

namespace hli {

namespace {

class Evaluator {
 public:
  Evaluator(const WeakProbModel& model, const Valuation& v, const EvalOptions& opts) : model_(model), opts_(opts) {
    for (const auto& [name, e] : v) {
      if (e >= model.size()) throw Error(ErrorKind::ValueOutOfRange, "valuation of " + name + " is not an element");
      env_.emplace_back(name, e);
    }
    if (opts.domain == QuantifierDomain::AllElements) {
      for (Element e = 0; e < model.size(); ++e) domain_.push_back(e);
    } else {
      std::set<Element> named;
      for (const auto& [name, e] : model.constants()) named.insert(e);
      domain_.assign(named.begin(), named.end());
    }
  }

  Rational01 formula(const Formula& phi) {
    return std::visit(overloaded{
                          [&](const Atom& a) { return atom(a); },
                          [&](const TruthConstant& c) { return c.value; },
                          [&](const Negation& n) { return truth::negation(formula(n.body)); },
                          [&](const Binary& b) { return binary(b); },
                          [&](const Quantified& q) { return quantified(q); },
                          [&](const QuantifierEquality& q) {
                            return qeq_holds(matrix(q.lhs), matrix(q.rhs), model_, opts_.levels) ? Rational01::one()
                                                                                               : Rational01::zero();
                          },
                      },
                      phi.node().data);
  }

  FuzzySubset matrix(const QuantExpr& q) {
    std::vector<Rational01> values;
    values.reserve(model_.size());
    for (Element e = 0; e < model_.size(); ++e) values.push_back(bound(q.var, e, q.body));
    return FuzzySubset(model_.size(), 1, std::move(values));
  }

 private:
  Element term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == t.name()) return it->second;
        }
        throw Error(ErrorKind::UnboundVariable, "variable " + t.name() + " has no value");
      case Term::Kind::Constant:
        return model_.constant(t.name());
      case Term::Kind::Apply: {
        Tuple args;
        args.reserve(t.args().size());
        for (const auto& a : t.args()) args.push_back(term(a));
        return model_.function_value(t.name(), args);
      }
    }
    return 0;
  }

  Rational01 atom(const Atom& a) {
    Tuple args;
    args.reserve(a.args.size());
    for (const auto& t : a.args) args.push_back(term(t));
    if (a.predicate == kEqPredicate) {
      if (args.size() != 2) throw Error(ErrorKind::ArityMismatch, "eq takes two arguments");
      return args[0] == args[1] ? Rational01::one() : Rational01::zero();
    }
    return model_.predicate_value(a.predicate, args);
  }

  Rational01 binary(const Binary& b) {
    const Rational01 x = formula(b.lhs);
    const Rational01 y = formula(b.rhs);
    switch (b.op) {
      case Connective::WeakAnd: return truth::weak_and(x, y);
      case Connective::WeakOr: return truth::weak_or(x, y);
      case Connective::StrongAnd: return truth::strong_and(x, y);
      case Connective::StrongOr: return truth::strong_or(x, y);
      case Connective::Implies: return truth::implication(x, y);
    }
    return x;
  }

  Rational01 bound(const std::string& var, Element e, const Formula& body) {
    env_.emplace_back(var, e);
    Rational01 out;
    try {
      out = formula(body);
    } catch (...) {
      env_.pop_back();
      throw;
    }
    env_.pop_back();
    return out;
  }

  Rational01 quantified(const Quantified& q) {
    switch (q.quantifier) {
      case Quantifier::Forall: {
        Rational01 out = Rational01::one();
        for (Element e : domain_) {
          out = std::min(out, bound(q.var, e, q.body));
          if (out.is_zero()) break;
        }
        return out;
      }
      case Quantifier::Exists: {
        Rational01 out = Rational01::zero();
        for (Element e : domain_) {
          out = std::max(out, bound(q.var, e, q.body));
          if (out.is_one()) break;
        }
        return out;
      }
      case Quantifier::Integral:
        return integral_expectation(matrix(q), model_);
    }
    return Rational01::zero();
  }

  const WeakProbModel& model_;
  const EvalOptions& opts_;
  std::vector<std::pair<std::string_view, Element>> env_;
  std::vector<Element> domain_;
};

}  // namespace

Rational01 eval(const Formula& phi, const WeakProbModel& model, const Valuation& v, const EvalOptions& opts) {
  return Evaluator(model, v, opts).formula(phi);
}

Rational01 eval_closed(const Formula& phi, const WeakProbModel& model, const EvalOptions& opts) {
  const auto free = free_vars(phi);
  if (!free.empty()) {
    std::string names;
    for (const auto& x : free) names += (names.empty() ? "" : ", ") + x;
    throw Error(ErrorKind::NotASentence, "free variables: " + names);
  }
  return eval(phi, model, {}, opts);
}

FuzzySubset matrix_function(const QuantExpr& q, const WeakProbModel& model, const Valuation& v,
                            const EvalOptions& opts) {
  return Evaluator(model, v, opts).matrix(q);
}

}  // namespace hli
