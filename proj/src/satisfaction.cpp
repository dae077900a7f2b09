// SPDX-License-Identifier: Apache-2.0

#include "hli/satisfaction.hpp"

#include <algorithm>

#include "hli/error.hpp"
#include "hli/integral.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"

namespace hli {

namespace {

std::string describe_pair(std::size_t i, std::size_t j, const std::vector<Rational01>& levels) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ") at levels " + levels[i].str() + ", " +
         levels[j].str();
}

std::vector<Rational01> resolve_levels(const LevelConfig& cfg, const FuzzySubset& f, const FuzzySubset& g) {
  if (cfg.levels) return *cfg.levels;
  std::set<Rational01> seen;
  for (const auto* h : {&f, &g}) {
    for (const auto& v : h->values()) {
      if (!v.is_crisp()) seen.insert(v);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::pair<std::size_t, std::size_t>> resolve_pairs(const LevelConfig& cfg, std::size_t level_count) {
  if (cfg.pairs) {
    for (const auto& [i, j] : *cfg.pairs) {
      if (i >= level_count || j >= level_count) {
        throw Error(ErrorKind::InvalidLevelConfig, "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                                       ") is out of range for " + std::to_string(level_count) +
                                                       " levels");
      }
    }
    return *cfg.pairs;
  }
  std::vector<std::pair<std::size_t, std::size_t>> diagonal;
  for (std::size_t i = 0; i < level_count; ++i) diagonal.emplace_back(i, i);
  return diagonal;
}

std::set<Element> truth_set(const FuzzySubset& f) {
  std::set<Element> out;
  for (Element e = 0; e < f.values().size(); ++e) {
    if (f[e].is_one()) out.insert(e);
  }
  return out;
}

std::set<Element> difference(const std::set<Element>& a, const std::set<Element>& b) {
  std::set<Element> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

void require_unary_matrix(const QuantExpr& q) {
  for (const auto& x : free_vars(q.body)) {
    if (x != q.var) {
      throw Error(ErrorKind::ArityMismatch, "body of a compared quantifier expression has free variable " + x +
                                                " besides " + q.var);
    }
  }
}

void require_sentence(const Formula& phi) {
  if (!is_sentence(phi)) throw Error(ErrorKind::NotASentence, print_formula(phi) + " has free variables");
}

Finding finding(std::string kind, std::string property, const WeakProbModel& model, std::string instantiation,
                std::string lhs = {}, std::string rhs = {}, std::string detail = {}) {
  return Finding{std::move(kind),   std::move(property), model_to_json(model), std::move(instantiation),
                 std::move(lhs),    std::move(rhs),      std::move(detail)};
}

}  // namespace

void validate(const LevelConfig& cfg) {
  if (cfg.levels) {
    const auto& levels = *cfg.levels;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i].is_crisp()) {
        throw Error(ErrorKind::InvalidLevelConfig, "level " + levels[i].str() + " is not strictly between 0 and 1");
      }
      if (i > 0 && !(levels[i - 1] < levels[i])) {
        throw Error(ErrorKind::InvalidLevelConfig, "levels must be strictly ascending");
      }
    }
    resolve_pairs(cfg, levels.size());
  }
}

bool hsat(const Formula& phi, const WeakProbModel& model, const EvalOptions& opts) {
  require_sentence(phi);
  if (const auto* n = phi.as<Negation>()) return eval_closed(n->body, model, opts).is_zero();
  if (const auto* q = phi.as<QuantifierEquality>()) return hsat_qeq(q->lhs, q->rhs, model, opts.levels);
  return eval_closed(phi, model, opts).is_one();
}

bool hsat_qeq_dirac(const FuzzySubset& f, const FuzzySubset& g, const WeakProbModel& model) {
  if (!f.is_crisp() || !g.is_crisp()) throw Error(ErrorKind::NotCrisp, "the crisp equality needs {0,1}-valued matrices");
  const auto fs = truth_set(f);
  const auto gs = truth_set(g);
  if (!std::includes(fs.begin(), fs.end(), gs.begin(), gs.end())) {
    throw Error(ErrorKind::ContainmentViolated, "{g = 1} is not contained in {f = 1}");
  }
  return mu_set(model, difference(fs, gs)).is_zero();
}

bool qeq_level_condition(const FuzzySubset& f, const FuzzySubset& g, const WeakProbModel& model,
                         const LevelConfig& cfg) {
  validate(cfg);
  const auto levels = resolve_levels(cfg, f, g);
  mpq_class total = 0;
  for (const auto& [i, j] : resolve_pairs(cfg, levels.size())) {
    const auto upper = level_set(f, levels[i]);
    const auto lower = level_set(g, levels[j]);
    if (!std::includes(upper.begin(), upper.end(), lower.begin(), lower.end())) {
      throw Error(ErrorKind::ContainmentViolated, "pair " + describe_pair(i, j, levels) +
                                                      ": {g > level} is not contained in {f > level}");
    }
    total += mu_set(model, difference(upper, lower)).value();
  }
  return total == 0;
}

bool qeq_holds(const FuzzySubset& f, const FuzzySubset& g, const WeakProbModel& model, const LevelConfig& cfg) {
  if (f.is_crisp() && g.is_crisp()) return hsat_qeq_dirac(f, g, model);
  return qeq_level_condition(f, g, model, cfg);
}

bool hsat_qeq(const QuantExpr& lhs, const QuantExpr& rhs, const WeakProbModel& model, const LevelConfig& cfg) {
  require_unary_matrix(lhs);
  require_unary_matrix(rhs);
  return qeq_holds(matrix_function(lhs, model), matrix_function(rhs, model), model, cfg);
}

std::optional<std::size_t> ApproximationSystem::index_of(const Formula& phi) const {
  const auto it = std::find(sentences.begin(), sentences.end(), phi);
  if (it == sentences.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sentences.begin());
}

std::vector<std::size_t> ApproximationSystem::approximations_of(std::size_t i) const {
  std::vector<std::size_t> out;
  for (auto it = rel.lower_bound({i, 0}); it != rel.end() && it->first == i; ++it) out.push_back(it->second);
  return out;
}

ApproximationSystem ApproximationSystem::diagonal(std::vector<Formula> sentences) {
  ApproximationSystem sys{std::move(sentences), {}};
  for (std::size_t i = 0; i < sys.sentences.size(); ++i) sys.rel.emplace(i, i);
  return sys;
}

ApproximationSystem transitive_closure(ApproximationSystem sys) {
  const std::size_t n = sys.sentences.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [i, j] : sys.rel) reach.at(i).at(j) = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  sys.rel.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) sys.rel.emplace(i, j);
    }
  }
  return sys;
}

Report validate_approximation_system(const ApproximationSystem& sys, const std::vector<WeakProbModel>& models,
                                     const EvalOptions& opts) {
  const std::size_t n = sys.sentences.size();
  for (const auto& [i, j] : sys.rel) {
    if (i >= n || j >= n) throw Error(ErrorKind::InvalidArgument, "relation index out of range");
  }
  auto edge = [&](std::size_t i, std::size_t j) {
    return print_formula(sys.sentences[i]) + " |> " + print_formula(sys.sentences[j]);
  };

  Report report;
  for (const auto& [i, j] : sys.rel) {
    for (std::size_t k : sys.approximations_of(j)) {
      ++report.checked;
      if (!sys.rel.contains({i, k})) {
        report.violations.push_back(Finding{"violation", "transitivity", std::nullopt,
                                            edge(i, j) + " and " + edge(j, k), "", "",
                                            "missing (" + std::to_string(i) + ", " + std::to_string(k) + ")"});
      }
    }
  }
  for (const auto& model : models) {
    const Vocabulary voc = model.vocabulary();
    for (const auto& [i, j] : sys.rel) {
      if (!is_well_formed(sys.sentences[i], voc)) continue;
      ++report.checked;
      if (!is_well_formed(sys.sentences[j], voc)) {
        report.violations.push_back(finding("violation", "language", model, edge(i, j), "", "",
                                            "approximation leaves the model's language"));
        continue;
      }
      if (hsat(sys.sentences[i], model, opts) && !hsat(sys.sentences[j], model, opts)) {
        report.violations.push_back(finding("violation", "monotonicity", model, edge(i, j), "H-SAT", "NOT H-SAT"));
      }
    }
  }
  return report;
}

bool hasat(const Formula& phi, const WeakProbModel& model, const ApproximationSystem& sys, const EvalOptions& opts) {
  const auto i = sys.index_of(phi);
  if (!i) throw Error(ErrorKind::SentenceNotInSystem, print_formula(phi) + " is not in the approximation system");
  const auto approximations = sys.approximations_of(*i);
  return std::all_of(approximations.begin(), approximations.end(),
                     [&](std::size_t j) { return hsat(sys.sentences.at(j), model, opts); });
}

Report check_weak_negation(const WeakNegation& neg, const std::vector<Formula>& pool, const ApproximationSystem& sys,
                           const std::vector<WeakProbModel>& models, const EvalOptions& opts) {
  Report report;
  for (const auto& model : models) {
    const Vocabulary voc = model.vocabulary();
    for (const auto& phi : pool) {
      if (!is_well_formed(phi, voc)) continue;
      const Formula neg_phi = neg.apply(phi);
      const std::string inst = print_formula(phi);
      ++report.checked;
      if (!is_well_formed(neg_phi, voc)) {
        report.violations.push_back(finding("violation", "language", model, inst, "", "",
                                            "negation leaves the model's language"));
        continue;
      }
      if (!hsat(phi, model, opts) && !hsat(neg_phi, model, opts)) {
        report.violations.push_back(finding("violation", "2a", model, inst, eval_closed(phi, model, opts).str(),
                                            eval_closed(neg_phi, model, opts).str(),
                                            "neither the sentence nor its negation is H-satisfied"));
      }

      const auto i = sys.index_of(phi);
      if (!i) {
        report.violations.push_back(finding("violation", "closure", model, inst, "", "", "not in the system"));
        continue;
      }
      for (std::size_t j : sys.approximations_of(*i)) {
        const Formula neg_approx = neg.apply(sys.sentences[j]);
        const std::string at = inst + " via " + print_formula(sys.sentences[j]);
        ++report.checked;
        if (!sys.index_of(neg_approx)) {
          report.violations.push_back(finding("violation", "closure", model, at, "", "",
                                              print_formula(neg_approx) + " is not in the system"));
          continue;
        }
        if (hasat(neg_approx, model, sys, opts) && hasat(phi, model, sys, opts)) {
          report.violations.push_back(finding("violation", "2b", model, at, "HA-SAT", "HA-SAT",
                                              "both the sentence and the negated approximation hold"));
        }
      }
    }
  }
  return report;
}

std::vector<Formula> theory_of(const WeakProbModel& model, const std::vector<Formula>& pool,
                               const ApproximationSystem& sys, const EvalOptions& opts) {
  const Vocabulary voc = model.vocabulary();
  std::vector<Formula> out;
  for (const auto& phi : pool) {
    if (is_well_formed(phi, voc) && hasat(phi, model, sys, opts)) out.push_back(phi);
  }
  return out;
}

WeakProbModel expand_by_element_constants(const WeakProbModel& model, const std::vector<std::string>& names) {
  auto constants = model.constants();
  const Vocabulary voc = model.vocabulary();
  for (const auto& name : names) {
    const auto e = model.find_element(name);
    if (!e) throw Error(ErrorKind::NotASubuniverse, "element " + name + " is missing");
    if (const auto it = constants.find(name); it != constants.end()) {
      if (it->second == *e) continue;
      throw Error(ErrorKind::InvalidVocabulary, "constant " + name + " already names another element");
    }
    if (!is_identifier(name) || is_reserved_name(name) || voc.declares(name)) {
      throw Error(ErrorKind::InvalidVocabulary, "element " + name + " cannot be named by a constant");
    }
    constants.emplace(name, *e);
  }
  return WeakProbModel(model.universe(), model.measure(), model.predicates(), model.functions(),
                       std::move(constants));
}

bool check_elementary_substructure(const WeakProbModel& m, const WeakProbModel& n, const std::vector<Formula>& pool,
                                   const ApproximationSystem& sys, const EvalOptions& opts) {
  for (const auto& name : m.universe()) {
    if (!n.find_element(name)) throw Error(ErrorKind::NotASubuniverse, "element " + name + " of M is not in N");
  }
  const WeakProbModel m_named = expand_by_element_constants(m, m.universe());
  const WeakProbModel n_named = expand_by_element_constants(n, m.universe());
  const Vocabulary voc = n_named.vocabulary();
  for (const auto& phi : theory_of(m_named, pool, sys, opts)) {
    if (!is_well_formed(phi, voc) || !hasat(phi, n_named, sys, opts)) return false;
  }
  return true;
}

}  // namespace hli
