// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hli/evaluator.hpp"
#include "hli/formula.hpp"
#include "hli/levels.hpp"
#include "hli/model.hpp"
#include "hli/report.hpp"

namespace hli {

/// M ⊨^H φ. A negation holds when its body evaluates to 0, a quantifier
/// equality when hsat_qeq does, anything else when it evaluates to 1.
/// Throws Error{NotASentence}.
bool hsat(const Formula& phi, const WeakProbModel& model, const EvalOptions& opts = {});

/// Crisp case: μ({f = 1} − {g = 1}) = 0. Requires {g = 1} ⊆ {f = 1}.
/// Throws Error{NotCrisp} or Error{ContainmentViolated}.
bool hsat_qeq_dirac(const FuzzySubset& f, const FuzzySubset& g, const WeakProbModel& model);

/// The level-set condition itself: Σ over the configured pairs (i, j) of
/// μ({f > α_i} − {g > α_j}) = 0, after checking {g > α_j} ⊆ {f > α_i} for
/// every pair. Throws Error{ContainmentViolated} naming the pair, or
/// Error{InvalidLevelConfig}.
bool qeq_level_condition(const FuzzySubset& f, const FuzzySubset& g, const WeakProbModel& model,
                         const LevelConfig& cfg);

/// hsat_qeq_dirac when both matrices are crisp, qeq_level_condition otherwise.
bool qeq_holds(const FuzzySubset& f, const FuzzySubset& g, const WeakProbModel& model, const LevelConfig& cfg);

/// Qφ(x) = Qψ(y) on M. The bodies may have no free variable other than the
/// bound one (Error{ArityMismatch} otherwise).
bool hsat_qeq(const QuantExpr& lhs, const QuantExpr& rhs, const WeakProbModel& model, const LevelConfig& cfg = {});

/// A finite relation φ ⊲ φ′ over an explicit list of sentences, stored as
/// index pairs.
struct ApproximationSystem {
  std::vector<Formula> sentences;
  std::set<std::pair<std::size_t, std::size_t>> rel;

  std::optional<std::size_t> index_of(const Formula& phi) const;
  /// Indices j with (i, j) in rel, ascending.
  std::vector<std::size_t> approximations_of(std::size_t i) const;

  /// Each sentence approximates exactly itself.
  static ApproximationSystem diagonal(std::vector<Formula> sentences);
};

ApproximationSystem transitive_closure(ApproximationSystem sys);

/// Checks transitivity, that approximations of a sentence in a model's
/// language stay in that language, and that H-satisfaction propagates along
/// every edge. Findings use the properties "transitivity", "language" and
/// "monotonicity".
Report validate_approximation_system(const ApproximationSystem& sys, const std::vector<WeakProbModel>& models,
                                     const EvalOptions& opts = {});

/// M ⊨^HA φ: every approximation of φ is H-satisfied.
/// Throws Error{SentenceNotInSystem}.
bool hasat(const Formula& phi, const WeakProbModel& model, const ApproximationSystem& sys,
           const EvalOptions& opts = {});

/// A sentence-to-sentence operator standing in for the weak negation.
struct WeakNegation {
  std::function<Formula(const Formula&)> apply = [](const Formula& phi) { return negation(phi); };
};

/// Per model and pool sentence φ:
///   "2a"  M ⊨^H φ or M ⊨^H neg(φ)
///   "2b"  for each approximation φ′ of φ, M ⊨^HA neg(φ′) implies M ⊭^HA φ
/// Pool sentences, or their negations, missing from sys are reported as
/// "closure" findings instead.
Report check_weak_negation(const WeakNegation& neg, const std::vector<Formula>& pool, const ApproximationSystem& sys,
                           const std::vector<WeakProbModel>& models, const EvalOptions& opts = {});

/// The pool sentences over M's language that M approximately satisfies.
std::vector<Formula> theory_of(const WeakProbModel& model, const std::vector<Formula>& pool,
                               const ApproximationSystem& sys, const EvalOptions& opts = {});

/// M expanded by one constant per element, named after the element.
/// Throws Error{InvalidVocabulary} if an element name is not usable as a
/// fresh constant.
WeakProbModel expand_by_element_constants(const WeakProbModel& model, const std::vector<std::string>& names);

/// M ≺^HA N on the given pool: |M| ⊆ |N| by element name, and N expanded
/// by constants for M's elements approximately satisfies the pool theory of M
/// expanded likewise. Throws Error{NotASubuniverse}.
bool check_elementary_substructure(const WeakProbModel& m, const WeakProbModel& n, const std::vector<Formula>& pool,
                                   const ApproximationSystem& sys, const EvalOptions& opts = {});

}  // namespace hli
