// SPDX-License-Identifier: Apache-2.0

#include "hli/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hli/error.hpp"
#include "hli/integral.hpp"
#include "hli/model_io.hpp"

namespace hli {

namespace {

std::string describe(const FuzzySubset& f, const WeakProbModel& model) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (i > 0) out += ", ";
    const Tuple t = tuple_at(i, f.arity(), model.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k > 0) out += ',';
      out += model.element_name(t[k]);
    }
    out += ": " + f.values()[i].str();
  }
  return out + "}";
}

std::string describe_tuple(const Tuple& t, const WeakProbModel& model) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) out += ',';
    out += model.element_name(t[k]);
  }
  return out + ")";
}

template <class Op>
FuzzySubset pointwise(const FuzzySubset& f, const FuzzySubset& g, Op op) {
  std::vector<Rational01> out;
  out.reserve(f.values().size());
  for (std::size_t i = 0; i < f.values().size(); ++i) out.push_back(op(f.values()[i], g.values()[i]));
  return FuzzySubset(f.universe_size(), f.arity(), std::move(out));
}

Finding finding(std::string kind, std::string property, const WeakProbModel& model, std::string instantiation,
                const mpq_class& lhs, const mpq_class& rhs) {
  return Finding{std::move(kind), std::move(property), model_to_json(model), std::move(instantiation),
                 rational_to_string(lhs), rational_to_string(rhs), {}};
}

/// Calls visit(t) for every tuple of |M|^arity in row-major order.
template <class Visit>
void for_each_tuple(std::size_t n, std::size_t arity, Visit visit) {
  const std::size_t cells = table_size(n, arity);
  for (std::size_t i = 0; i < cells; ++i) visit(tuple_at(i, arity, n));
}

Rational01 similarity_min(const WeakProbModel& model, const PredicateTable& approx, const Tuple& a, const Tuple& b) {
  Rational01 out = Rational01::one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    out = std::min(out, approx.values[a[i] * model.size() + b[i]]);
  }
  return out;
}

}  // namespace

WeakProbModel reduct(const WeakProbModel& model, const Vocabulary& sub) {
  if (!sub.is_subvocabulary_of(model.vocabulary())) {
    throw Error(ErrorKind::NotSubvocabulary, "{" + to_string(sub) + "} is not part of the model's vocabulary");
  }
  std::map<std::string, PredicateTable> predicates;
  for (const auto& [name, table] : model.predicates()) {
    const bool keep = name == kApproxPredicate ? sub.has_approx() : sub.predicate_arity(name).has_value();
    if (keep) predicates.emplace(name, table);
  }
  std::map<std::string, FunctionTable> functions;
  for (const auto& [name, table] : model.functions()) {
    if (sub.function_arity(name)) functions.emplace(name, table);
  }
  std::map<std::string, Element> constants;
  for (const auto& [name, e] : model.constants()) {
    if (sub.has_constant(name)) constants.emplace(name, e);
  }
  return WeakProbModel(model.universe(), model.measure(), std::move(predicates), std::move(functions),
                       std::move(constants));
}

WeakProbModel rename(const WeakProbModel& model, const SymbolRenaming& rho) {
  model.vocabulary().renamed(rho);  // injectivity check
  auto name_of = [&](const std::string& name) {
    const auto it = rho.find(name);
    return it == rho.end() ? name : it->second;
  };
  std::map<std::string, PredicateTable> predicates;
  for (const auto& [name, table] : model.predicates()) {
    predicates.emplace(name == kApproxPredicate ? name : name_of(name), table);
  }
  std::map<std::string, FunctionTable> functions;
  for (const auto& [name, table] : model.functions()) functions.emplace(name_of(name), table);
  std::map<std::string, Element> constants;
  for (const auto& [name, e] : model.constants()) constants.emplace(name_of(name), e);
  return WeakProbModel(model.universe(), model.measure(), std::move(predicates), std::move(functions),
                       std::move(constants));
}

WeakProbModel relabel_universe(const WeakProbModel& model, const std::vector<Element>& perm) {
  const std::size_t n = model.size();
  std::vector<bool> hit(n, false);
  if (perm.size() != n) throw Error(ErrorKind::InvalidArgument, "permutation has the wrong length");
  for (Element e : perm) {
    if (e >= n || hit[e]) throw Error(ErrorKind::InvalidArgument, "not a permutation of the universe");
    hit[e] = true;
  }
  auto move_tuple = [&](const Tuple& t) {
    Tuple out(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) out[k] = perm[t[k]];
    return out;
  };

  std::vector<Rational01> measure(n);
  for (Element e = 0; e < n; ++e) measure[perm[e]] = model.measure(e);

  std::map<std::string, PredicateTable> predicates;
  for (const auto& [name, table] : model.predicates()) {
    PredicateTable out{table.arity, std::vector<Rational01>(table.values.size())};
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      out.values[tuple_index(move_tuple(tuple_at(i, table.arity, n)), n)] = table.values[i];
    }
    predicates.emplace(name, std::move(out));
  }
  std::map<std::string, FunctionTable> functions;
  for (const auto& [name, table] : model.functions()) {
    FunctionTable out{table.arity, std::vector<Element>(table.values.size())};
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      out.values[tuple_index(move_tuple(tuple_at(i, table.arity, n)), n)] = perm[table.values[i]];
    }
    functions.emplace(name, std::move(out));
  }
  std::map<std::string, Element> constants;
  for (const auto& [name, e] : model.constants()) constants.emplace(name, perm[e]);
  return WeakProbModel(model.universe(), std::move(measure), std::move(predicates), std::move(functions),
                       std::move(constants));
}

bool isomorphic(const WeakProbModel& m, const WeakProbModel& n, std::size_t max_universe) {
  if (m.size() > max_universe || n.size() > max_universe) {
    throw Error(ErrorKind::UniverseTooLarge,
                "isomorphism search is limited to " + std::to_string(max_universe) + " elements");
  }
  if (m.size() != n.size()) return false;
  auto same_shape = [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first && x.second.arity == y.second.arity; });
  };
  if (!same_shape(m.predicates(), n.predicates()) || !same_shape(m.functions(), n.functions())) return false;
  if (m.constants().size() != n.constants().size()) return false;
  for (const auto& [name, e] : m.constants()) {
    if (!n.constants().contains(name)) return false;
  }

  std::vector<Element> perm(m.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  do {
    // relabel_universe keeps names and orders keys the same way, so the
    // transported model either matches n field for field or it does not.
    const WeakProbModel moved = relabel_universe(m, perm);
    if (moved.measure() == n.measure() && moved.predicates() == n.predicates() &&
        moved.functions() == n.functions() && moved.constants() == n.constants()) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Report check_similarity_lipschitz(const WeakProbModel& model, std::string_view approx_pred) {
  const PredicateTable& approx = model.predicate(approx_pred);
  if (approx.arity != 2) {
    throw Error(ErrorKind::ArityMismatch, std::string(approx_pred) + " must be binary");
  }
  const std::size_t n = model.size();
  Report report;
  for (const auto& [name, table] : model.functions()) {
    for_each_tuple(n, table.arity, [&](const Tuple& a) {
      for_each_tuple(n, table.arity, [&](const Tuple& b) {
        ++report.checked;
        const Rational01 lhs = similarity_min(model, approx, a, b);
        const Element fa = table.values[tuple_index(a, n)];
        const Element fb = table.values[tuple_index(b, n)];
        const Rational01& rhs = approx.values[fa * n + fb];
        if (lhs > rhs) {
          report.violations.push_back(finding("violation", "similarity-lipschitz", model,
                                              name + describe_tuple(a, model) + " vs " + name +
                                                  describe_tuple(b, model),
                                              lhs.value(), rhs.value()));
        }
      });
    });
  }
  for (const auto& [name, table] : model.predicates()) {
    if (name == approx_pred) continue;
    for_each_tuple(n, table.arity, [&](const Tuple& a) {
      for_each_tuple(n, table.arity, [&](const Tuple& b) {
        ++report.checked;
        const mpq_class gap = abs(table.values[tuple_index(a, n)].value() - table.values[tuple_index(b, n)].value());
        const mpq_class bound = 1 - similarity_min(model, approx, a, b).value();
        if (gap > bound) {
          report.violations.push_back(finding("violation", "distance-lipschitz", model,
                                              name + describe_tuple(a, model) + " vs " + name +
                                                  describe_tuple(b, model),
                                              gap, bound));
        }
      });
    });
  }
  return report;
}

IntegralLawSamples exhaustive_integral_samples(std::size_t universe_size, const std::vector<Rational01>& grid) {
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "value grid is empty");
  auto all_subsets = [&](std::size_t arity) {
    const std::size_t cells = table_size(universe_size, arity);
    const std::size_t count = table_size(grid.size(), cells);
    std::vector<FuzzySubset> out;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<Rational01> values;
      std::size_t rest = code;
      for (std::size_t i = 0; i < cells; ++i) {
        values.push_back(grid[rest % grid.size()]);
        rest /= grid.size();
      }
      out.emplace_back(universe_size, arity, std::move(values));
    }
    return out;
  };
  IntegralLawSamples samples;
  samples.constants = grid;
  const auto unary = all_subsets(1);
  for (const auto& f : unary) {
    for (const auto& g : unary) samples.pairs.emplace_back(f, g);
  }
  samples.bivariate = all_subsets(2);
  return samples;
}

IntegralLawSamples random_integral_samples(std::size_t universe_size, const std::vector<Rational01>& grid,
                                           std::size_t count, std::mt19937_64& rng) {
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "value grid is empty");
  auto draw = [&](std::size_t arity) {
    std::vector<Rational01> values;
    const std::size_t cells = table_size(universe_size, arity);
    for (std::size_t i = 0; i < cells; ++i) values.push_back(grid[rng() % grid.size()]);
    return FuzzySubset(universe_size, arity, std::move(values));
  };
  IntegralLawSamples samples;
  samples.constants = grid;
  for (std::size_t i = 0; i < count; ++i) {
    FuzzySubset f = draw(1);
    samples.pairs.emplace_back(std::move(f), draw(1));
    samples.bivariate.push_back(draw(2));
  }
  return samples;
}

Report check_semantic_integral_laws(const WeakProbModel& model, const IntegralLawSamples& samples) {
  constexpr std::size_t kMaxWitnesses = 4;
  const std::size_t n = model.size();
  Report report;
  auto expect = [&](const FuzzySubset& f) { return integral_expectation(f, model).value(); };
  auto check_equal = [&](const char* law, const std::string& inst, const mpq_class& lhs, const mpq_class& rhs) {
    ++report.checked;
    if (lhs != rhs) report.violations.push_back(finding("violation", law, model, inst, lhs, rhs));
  };

  for (const auto& r : samples.constants) {
    check_equal("law19", "r = " + r.str(), expect(FuzzySubset::constant(n, 1, r)), r.value());
  }

  for (const auto& [f, g] : samples.pairs) {
    const std::string inst = "f = " + describe(f, model) + ", g = " + describe(g, model);
    const mpq_class ef = expect(f);
    const mpq_class eg = expect(g);

    std::vector<Rational01> complement;
    for (const auto& v : f.values()) complement.push_back(truth::negation(v));
    check_equal("law20", inst, expect(FuzzySubset(n, 1, std::move(complement))), 1 - ef);

    ++report.checked;
    const mpq_class lhs21 = expect(pointwise(f, g, truth::implication));
    const mpq_class rhs21 = truth::implication(Rational01(ef), Rational01(eg)).value();
    if (lhs21 > rhs21) {
      report.violations.push_back(finding("violation", "law21", model, inst, lhs21, rhs21));
    } else if (lhs21 < rhs21 && report.witnesses.size() < kMaxWitnesses) {
      Finding w = finding("witness", "law21", model, inst, lhs21, rhs21);
      w.detail = "strict inequality";
      report.witnesses.push_back(std::move(w));
    }

    check_equal("law22", inst, expect(pointwise(f, g, truth::strong_or)),
                ef + eg - expect(pointwise(f, g, truth::strong_and)));
  }

  for (const auto& h : samples.bivariate) {
    check_equal("law23", "h = " + describe(h, model), expect(integrate_first(h, model)),
                expect(integrate_second(h, model)));
  }
  return report;
}

Report check_f_algebra_closure(const std::vector<FuzzySubset>& family, const WeakProbModel& model,
                               const std::vector<Rational01>& constants) {
  const std::size_t n = model.size();
  auto contains = [&](const FuzzySubset& f) { return std::find(family.begin(), family.end(), f) != family.end(); };
  auto missing = [&](std::string property, std::string inst) {
    return Finding{"violation", std::move(property), model_to_json(model), std::move(inst), "", "", "not in family"};
  };
  Report report;
  for (const auto& r : constants) {
    ++report.checked;
    if (!contains(FuzzySubset::constant(n, 1, r))) report.violations.push_back(missing("constant", "k_" + r.str()));
  }
  for (const auto& f : family) {
    for (const auto& g : family) {
      ++report.checked;
      const FuzzySubset fg = pointwise(f, g, truth::implication);
      if (!contains(fg)) {
        report.violations.push_back(
            missing("implication", describe(f, model) + " => " + describe(g, model) + " = " + describe(fg, model)));
      }
    }
  }
  return report;
}

}  // namespace hli
