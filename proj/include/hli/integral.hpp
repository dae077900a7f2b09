// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <set>

#include "hli/model.hpp"

namespace hli {

/// μ(A) for A ⊆ |M|^k: the sum over tuples of μ(m1)·…·μ(mk).
Rational01 mu_set(const WeakProbModel& model, const std::set<Tuple>& tuples, std::size_t arity);
Rational01 mu_set(const WeakProbModel& model, const std::set<Element>& elements);

/// Σ_m f(m)·μ(m). f must be unary over the model's universe.
Rational01 integral_expectation(const FuzzySubset& f, const WeakProbModel& model);

inline constexpr std::size_t kDefaultDissectionBound = 8;

/// Lebesgue integral as a supremum over measurable dissections: the maximum
/// over every set partition of |M| of Σ_blocks inf_block(f)·μ(block).
/// Exhaustive (Bell-number many partitions); throws Error{UniverseTooLarge}
/// beyond max_universe.
Rational01 integral_dissection(const FuzzySubset& f, const WeakProbModel& model,
                               std::size_t max_universe = kDefaultDissectionBound);

/// Lower sum of f over one given dissection.
Rational01 dissection_sum(const FuzzySubset& f, const WeakProbModel& model, const Dissection& d);

/// Calls visit for every set partition of {0..n-1}, as restricted growth
/// strings turned into blocks. Stops early if visit returns false.
void for_each_set_partition(std::size_t n, const std::function<bool(const std::vector<std::vector<Element>>&)>& visit);

/// Layer-cake form: with the distinct values 0 = v0 < v1 < … < vk of f
/// (and 0), Σ_i (v_i − v_{i−1})·μ{x : f(x) ≥ v_i}.
Rational01 integral_layercake(const FuzzySubset& f, const WeakProbModel& model);

/// {x : f(x) > alpha}, strict.
std::set<Element> level_set(const FuzzySubset& f, const Rational01& alpha);

/// For bivariate h, the function y ↦ ∮ h(x, y) dx (integrating out the first
/// argument) or x ↦ ∮ h(x, y) dy (the second).
FuzzySubset integrate_first(const FuzzySubset& h, const WeakProbModel& model);
FuzzySubset integrate_second(const FuzzySubset& h, const WeakProbModel& model);

/// Σ over tuples of h(t)·μ(t1)·…·μ(tk), the integral against product measure.
Rational01 integral_product(const FuzzySubset& h, const WeakProbModel& model);

}  // namespace hli
