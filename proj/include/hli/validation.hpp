// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "hli/evaluator.hpp"
#include "hli/generate.hpp"
#include "hli/report.hpp"

namespace hli {

enum class SearchMode { Exhaustive, Random };

inline constexpr std::size_t kMaxExhaustiveUniverse = 3;
inline constexpr std::size_t kMaxExhaustiveGrid = 5;
inline constexpr std::size_t kMaxExhaustiveModels = 20'000'000;
inline constexpr std::size_t kDefaultRandomModels = 1000;

/// A model with ‖φ‖ < 1, if the searched space has one. The vocabulary is
/// spec.vocabulary plus the symbols of φ. Exhaustive search tries universe
/// sizes 1..spec.universe_size in turn; random search draws spec.count
/// models (default 1000) of size spec.universe_size.
/// Throws Error{NotASentence}, or Error{SearchSpaceTooLarge} when the
/// exhaustive space exceeds the bounds above.
std::optional<WeakProbModel> find_countermodel(const Formula& phi, const ModelGenSpec& spec, SearchMode mode,
                                               const EvalOptions& opts = {});

/// Invariance of ‖φ‖ on one model under symbol renaming, reduct to the
/// symbols of φ, and a universe permutation drawn from rng (which must also
/// be recognised by isomorphic()); plus Sent(S) ⊆ Sent(S′) for the symbols of
/// φ inside the model's vocabulary and a strict extension of it.
Report check_invariance(const WeakProbModel& model, const Formula& phi, std::mt19937_64& rng,
                        const EvalOptions& opts = {});

/// check_invariance for every pool sentence on every model of spec, whose
/// vocabulary is extended by the symbols of the pool.
Report check_abstract_logic_properties(const ModelGenSpec& spec, const std::vector<Formula>& pool,
                                       const EvalOptions& opts = {});

}  // namespace hli
