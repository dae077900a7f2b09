// SPDX-License-Identifier: Apache-2.0

#include "hli/validation.hpp"

#include <numeric>

#include "hli/error.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"
#include "hli/structure.hpp"

namespace hli {

namespace {

std::string fresh_name(const Vocabulary& voc, std::string name) {
  while (voc.declares(name) || is_reserved_name(name)) name += "_";
  return name;
}

SymbolRenaming priming_renaming(const Vocabulary& voc) {
  SymbolRenaming rho;
  Vocabulary taken = voc;
  auto add = [&](const std::string& name) {
    const std::string target = fresh_name(taken, name + "_r");
    taken.add_constant(target);
    rho.emplace(name, target);
  };
  for (const auto& p : voc.predicates()) add(p.name);
  for (const auto& f : voc.functions()) add(f.name);
  for (const auto& c : voc.constants()) add(c);
  return rho;
}

std::vector<Element> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return perm;
}

}  // namespace

std::optional<WeakProbModel> find_countermodel(const Formula& phi, const ModelGenSpec& spec, SearchMode mode,
                                               const EvalOptions& opts) {
  if (!is_sentence(phi)) throw Error(ErrorKind::NotASentence, print_formula(phi) + " has free variables");
  ModelGenSpec search = spec;
  search.vocabulary = spec.vocabulary.merged_with(symbols_of(phi));
  validate(search);

  std::optional<WeakProbModel> found;
  auto visit = [&](const WeakProbModel& model) {
    if (eval_closed(phi, model, opts).is_one()) return true;
    found = model;
    return false;
  };

  if (mode == SearchMode::Random) {
    if (!search.count) search.count = kDefaultRandomModels;
    for_each_model(search, visit);
    return found;
  }

  if (search.universe_size > kMaxExhaustiveUniverse) {
    throw Error(ErrorKind::SearchSpaceTooLarge, "exhaustive search allows universes up to " +
                                                    std::to_string(kMaxExhaustiveUniverse) + " elements");
  }
  if (search.value_grid.size() > kMaxExhaustiveGrid || search.measure_grid.size() > kMaxExhaustiveGrid) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "exhaustive search allows grids of up to " + std::to_string(kMaxExhaustiveGrid) + " values");
  }
  search.count.reset();
  std::size_t total = 0;
  for (std::size_t n = 1; n <= spec.universe_size; ++n) {
    ModelGenSpec at = search;
    at.universe_size = n;
    total += exhaustive_model_count(at);
    if (total > kMaxExhaustiveModels) {
      throw Error(ErrorKind::SearchSpaceTooLarge, "more than " + std::to_string(kMaxExhaustiveModels) +
                                                      " models to search; use random mode or a smaller grid");
    }
  }
  for (std::size_t n = 1; n <= spec.universe_size && !found; ++n) {
    ModelGenSpec at = search;
    at.universe_size = n;
    for_each_model(at, visit);
  }
  return found;
}

Report check_invariance(const WeakProbModel& model, const Formula& phi, std::mt19937_64& rng,
                        const EvalOptions& opts) {
  Report report;
  const std::string text = print_formula(phi);
  const Vocabulary voc = model.vocabulary();
  check_well_formed(phi, voc);
  const Rational01 value = eval_closed(phi, model, opts);
  auto compare = [&](const char* property, const Rational01& other, std::string detail) {
    ++report.checked;
    if (other != value) {
      report.violations.push_back(
          Finding{"violation", property, model_to_json(model), text, value.str(), other.str(), std::move(detail)});
    }
  };

  const SymbolRenaming rho = priming_renaming(voc);
  compare("renaming", eval_closed(rename_symbols(phi, rho), rename(model, rho), opts), "symbols renamed");

  Vocabulary sub = symbols_of(phi);
  sub.set_has_eq(false);
  compare("reduct", eval_closed(phi, reduct(model, sub), opts), "reduct to {" + to_string(sub) + "}");

  const auto perm = random_permutation(model.size(), rng);
  const WeakProbModel moved = relabel_universe(model, perm);
  std::string perm_text;
  for (Element e = 0; e < perm.size(); ++e) {
    perm_text += (e ? ", " : "") + model.element_name(e) + " -> " + model.element_name(perm[e]);
  }
  compare("isomorphism", eval_closed(phi, moved, opts), "universe permuted: " + perm_text);
  if (model.size() <= kDefaultIsomorphismBound) {
    ++report.checked;
    if (!isomorphic(model, moved)) {
      report.violations.push_back(Finding{"violation", "isomorphism", model_to_json(model), text, "", "",
                                          "permuted copy not recognised as isomorphic: " + perm_text});
    }
  }

  Vocabulary wider = voc;
  wider.add_predicate(fresh_name(voc, "Extra"), 1);
  ++report.checked;
  if (!is_well_formed(phi, wider)) {
    report.violations.push_back(Finding{"violation", "sentence-monotonicity", std::nullopt, text, "", "",
                                        "not a sentence of a larger vocabulary"});
  }
  return report;
}

Report check_abstract_logic_properties(const ModelGenSpec& spec, const std::vector<Formula>& pool,
                                       const EvalOptions& opts) {
  ModelGenSpec gen = spec;
  for (const auto& phi : pool) {
    if (!is_sentence(phi)) throw Error(ErrorKind::NotASentence, print_formula(phi) + " has free variables");
    Vocabulary syms = symbols_of(phi);
    syms.set_has_eq(false);
    gen.vocabulary = gen.vocabulary.merged_with(syms);
  }
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  Report report;
  for_each_model(gen, [&](const WeakProbModel& model) {
    for (const auto& phi : pool) report.merge(check_invariance(model, phi, rng, opts));
    return true;
  });
  return report;
}

}  // namespace hli
