// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <random>
#include <string_view>
#include <vector>

#include "hli/model.hpp"
#include "hli/report.hpp"

namespace hli {

/// Drops every interpretation outside sub. Throws Error{NotSubvocabulary}
/// unless sub is a subvocabulary of the model's vocabulary.
WeakProbModel reduct(const WeakProbModel& model, const Vocabulary& sub);

/// Relabels symbols by a bijection. The built-in approx predicate keeps its
/// name. Throws Error{InvalidRenaming} if rho is not injective on the
/// model's symbols.
WeakProbModel rename(const WeakProbModel& model, const SymbolRenaming& rho);

/// The isomorphic copy that moves element m to perm[m]: the universe names
/// stay in place and every table is transported along perm.
WeakProbModel relabel_universe(const WeakProbModel& model, const std::vector<Element>& perm);

inline constexpr std::size_t kDefaultIsomorphismBound = 8;

/// Brute force over universe bijections preserving measure, predicates,
/// functions and constants. Throws Error{UniverseTooLarge} beyond max_universe.
bool isomorphic(const WeakProbModel& m, const WeakProbModel& n,
                std::size_t max_universe = kDefaultIsomorphismBound);

/// Checks, with d(x, y) = 1 − (x ≈ y):
///  * every function f: min_i (a_i ≈ b_i) ≤ f(ā) ≈ f(b̄);
///  * every predicate P other than the similarity itself:
///    |P(ā) − P(b̄)| ≤ max_i d(a_i, b_i).
/// Violations carry the offending tuples.
Report check_similarity_lipschitz(const WeakProbModel& model, std::string_view approx_pred = "approx");

/// Samples for the semantic-integral laws. All fuzzy subsets are over the
/// model's universe; `pairs` are unary, `bivariate` are binary.
struct IntegralLawSamples {
  std::vector<Rational01> constants;
  std::vector<std::pair<FuzzySubset, FuzzySubset>> pairs;
  std::vector<FuzzySubset> bivariate;
};

/// Every unary fuzzy subset over `grid` (pairs = all ordered pairs), every
/// bivariate one, and the grid values as constants.
IntegralLawSamples exhaustive_integral_samples(std::size_t universe_size, const std::vector<Rational01>& grid);

/// count seeded random pairs and bivariate subsets with values from grid.
IntegralLawSamples random_integral_samples(std::size_t universe_size, const std::vector<Rational01>& grid,
                                           std::size_t count, std::mt19937_64& rng);

/// Checks, with the expectation integral ∮:
///   law19  ∮k_r = r
///   law20  ∮(1 − f) = 1 − ∮f
///   law21  ∮(f ⇒ g) ≤ ∮f ⇒ ∮g        (strict cases recorded as witnesses)
///   law22  ∮(f ⊕ g) = ∮f + ∮g − ∮(f ∗ g)
///   law23  ∮(∮h dx)dy = ∮(∮h dy)dx
Report check_semantic_integral_laws(const WeakProbModel& model, const IntegralLawSamples& samples);

/// A finite family F is checked for containing k_r for each r in `constants`
/// and for closure under pointwise ⇒.
Report check_f_algebra_closure(const std::vector<FuzzySubset>& family, const WeakProbModel& model,
                               const std::vector<Rational01>& constants);

}  // namespace hli
