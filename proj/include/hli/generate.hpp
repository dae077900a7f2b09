// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hli/formula.hpp"
#include "hli/model.hpp"

namespace hli {

/// {0, 1/4, 1/2, 3/4, 1}
std::vector<Rational01> default_grid();

/// Parses "0,1/4,1/2" (FormatError / ValueOutOfRange on bad entries).
std::vector<Rational01> parse_grid(std::string_view text);

/// What models to generate: every symbol of `vocabulary` (plus the approx
/// table when has_approx) gets a table. Exhaustive when count is unset.
struct ModelGenSpec {
  Vocabulary vocabulary;
  std::size_t universe_size = 2;
  std::vector<Rational01> value_grid = default_grid();
  std::vector<Rational01> measure_grid = default_grid();
  std::uint64_t seed = 0;
  std::optional<std::size_t> count;
};

/// Throws Error{InvalidArgument} on an empty grid or universe.
void validate(const ModelGenSpec& spec);

/// Element names a, b, c, ... (then e26, e27, ...).
std::vector<std::string> element_names(std::size_t n);

/// Every distinct normalized measure whose unnormalized weights come from the
/// grid, all-zero draws excluded. Sorted lexicographically.
std::vector<std::vector<Rational01>> enumerate_measures(std::size_t universe_size, const std::vector<Rational01>& grid);

/// Number of models for_each_model visits in exhaustive mode, saturating at
/// SIZE_MAX.
std::size_t exhaustive_model_count(const ModelGenSpec& spec);

/// Visits spec.count seeded random models, or every model in exhaustive mode,
/// in a deterministic order. Stops early when visit returns false.
void for_each_model(const ModelGenSpec& spec, const std::function<bool(const WeakProbModel&)>& visit);

/// One random model under spec (count is ignored).
WeakProbModel random_model(const ModelGenSpec& spec, std::mt19937_64& rng);

struct GeneratorOptions {
  std::size_t max_depth = 3;
  /// Variables that may occur free in formula().
  std::vector<std::string> free_variables;
  /// Names used by quantifiers.
  std::vector<std::string> bound_variables{"x", "y", "z"};
  bool allow_forall = true;
  bool allow_exists = true;
  bool allow_integral = true;
  /// Top-level quantifier equalities (needs has_eq).
  bool allow_qeq = false;
  bool allow_truth_constants = true;
  /// Truth constants are k/q with 1 ≤ q ≤ this.
  unsigned long max_denominator = 12;
};

/// Seeded random formulas over a vocabulary. Bare names never collide with
/// declared symbols, so printed formulas parse back to the same tree.
class FormulaGenerator {
 public:
  FormulaGenerator(Vocabulary voc, GeneratorOptions options, std::uint64_t seed);

  /// Free variables drawn from options.free_variables.
  Formula formula();
  /// No free variables.
  Formula sentence();

  std::mt19937_64& rng() { return rng_; }

 private:
  Formula build(std::vector<std::string>& scope, std::size_t depth);
  Formula atom(const std::vector<std::string>& scope);
  Term term(const std::vector<std::string>& scope, std::size_t depth);
  Formula qeq(std::vector<std::string>& scope, std::size_t depth);
  std::size_t pick(std::size_t n);

  Vocabulary voc_;
  GeneratorOptions options_;
  std::mt19937_64 rng_;
};

}  // namespace hli
