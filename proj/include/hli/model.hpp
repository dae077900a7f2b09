// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hli/rational.hpp"
#include "hli/vocabulary.hpp"

namespace hli {

/// Index of an element of the universe.
using Element = std::size_t;
using Tuple = std::vector<Element>;

/// Total table |M|^arity -> [0,1], row-major over argument tuples.
struct PredicateTable {
  std::size_t arity = 1;
  std::vector<Rational01> values;
  friend bool operator==(const PredicateTable&, const PredicateTable&) = default;
};

/// Total table |M|^arity -> |M|, row-major over argument tuples.
struct FunctionTable {
  std::size_t arity = 1;
  std::vector<Element> values;
  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

/// n^k, throwing Error{UniverseTooLarge} if it does not fit in memory terms.
std::size_t table_size(std::size_t universe_size, std::size_t arity);
std::size_t tuple_index(std::span<const Element> tuple, std::size_t universe_size);
Tuple tuple_at(std::size_t index, std::size_t arity, std::size_t universe_size);

/// A finite weak probabilistic model: a non-empty universe with an exact
/// probability measure, [0,1]-valued predicates, functions and constants.
/// Immutable once constructed; the constructor checks every invariant
/// (measure sums to exactly 1, tables total, values in range) and throws
/// MeasureNotNormalized, TableIncomplete or ValueOutOfRange.
class WeakProbModel {
 public:
  WeakProbModel(std::vector<std::string> universe, std::vector<Rational01> measure,
                std::map<std::string, PredicateTable> predicates = {},
                std::map<std::string, FunctionTable> functions = {},
                std::map<std::string, Element> constants = {});

  std::size_t size() const { return universe_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& element_name(Element e) const { return universe_.at(e); }
  std::optional<Element> find_element(std::string_view name) const;

  const std::vector<Rational01>& measure() const { return measure_; }
  const Rational01& measure(Element e) const { return measure_.at(e); }

  const std::map<std::string, PredicateTable>& predicates() const { return predicates_; }
  const std::map<std::string, FunctionTable>& functions() const { return functions_; }
  const std::map<std::string, Element>& constants() const { return constants_; }

  /// Throws Error{UnknownSymbol} for uninterpreted symbols.
  const PredicateTable& predicate(std::string_view name) const;
  const FunctionTable& function(std::string_view name) const;
  Element constant(std::string_view name) const;

  const Rational01& predicate_value(std::string_view name, std::span<const Element> args) const;
  Element function_value(std::string_view name, std::span<const Element> args) const;

  /// Symbols interpreted here. `approx`, when interpreted, sets has_approx
  /// instead of appearing as a predicate. has_eq is always set.
  Vocabulary vocabulary() const;

  friend bool operator==(const WeakProbModel&, const WeakProbModel&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<Rational01> measure_;
  std::map<std::string, PredicateTable> predicates_;
  std::map<std::string, FunctionTable> functions_;
  std::map<std::string, Element> constants_;
};

/// A [0,1]-fuzzy subset of |M|^arity, stored row-major like PredicateTable.
class FuzzySubset {
 public:
  /// Throws Error{TableIncomplete} unless values.size() == universe_size^arity.
  FuzzySubset(std::size_t universe_size, std::size_t arity, std::vector<Rational01> values);

  static FuzzySubset constant(std::size_t universe_size, std::size_t arity, const Rational01& r);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Rational01>& values() const { return values_; }
  const Rational01& operator[](Element e) const { return values_.at(e); }
  const Rational01& at(std::span<const Element> tuple) const;
  bool is_crisp() const;

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;

 private:
  std::size_t universe_size_;
  std::size_t arity_;
  std::vector<Rational01> values_;
};

/// A partition of the universe into non-empty, pairwise disjoint blocks.
class Dissection {
 public:
  /// Throws Error{InvalidDissection} if blocks do not partition {0..n-1}.
  Dissection(std::size_t universe_size, std::vector<std::vector<Element>> blocks);

  const std::vector<std::vector<Element>>& blocks() const { return blocks_; }

 private:
  std::vector<std::vector<Element>> blocks_;
};

}  // namespace hli
