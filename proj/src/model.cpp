// SPDX-License-Identifier: Apache-2.0

#include "hli/model.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "hli/error.hpp"

namespace hli {

std::size_t table_size(std::size_t universe_size, std::size_t arity) {
  constexpr std::size_t kLimit = std::size_t{1} << 26;
  std::size_t out = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (universe_size != 0 && out > kLimit / universe_size) {
      throw Error(ErrorKind::UniverseTooLarge, "table of arity " + std::to_string(arity) + " over " +
                                                   std::to_string(universe_size) + " elements is too large");
    }
    out *= universe_size;
  }
  return out;
}

std::size_t tuple_index(std::span<const Element> tuple, std::size_t universe_size) {
  std::size_t idx = 0;
  for (const Element e : tuple) {
    if (e >= universe_size) throw Error(ErrorKind::ValueOutOfRange, "element index out of range");
    idx = idx * universe_size + e;
  }
  return idx;
}

Tuple tuple_at(std::size_t index, std::size_t arity, std::size_t universe_size) {
  Tuple t(arity);
  for (std::size_t i = arity; i-- > 0;) {
    t[i] = index % universe_size;
    index /= universe_size;
  }
  return t;
}

WeakProbModel::WeakProbModel(std::vector<std::string> universe, std::vector<Rational01> measure,
                             std::map<std::string, PredicateTable> predicates,
                             std::map<std::string, FunctionTable> functions,
                             std::map<std::string, Element> constants)
    : universe_(std::move(universe)),
      measure_(std::move(measure)),
      predicates_(std::move(predicates)),
      functions_(std::move(functions)),
      constants_(std::move(constants)) {
  const std::size_t n = universe_.size();
  if (n == 0) throw Error(ErrorKind::FormatError, "universe must be non-empty");
  std::set<std::string> seen;
  for (const auto& name : universe_) {
    if (name.empty() || name.find(',') != std::string::npos) {
      throw Error(ErrorKind::FormatError, "element name \"" + name + "\" must be non-empty and comma-free");
    }
    if (!seen.insert(name).second) throw Error(ErrorKind::FormatError, "duplicate element \"" + name + "\"");
  }
  if (measure_.size() != n) throw Error(ErrorKind::TableIncomplete, "measure must weight every element");
  mpq_class total(0);
  for (const auto& w : measure_) total += w.value();
  if (total != 1) {
    throw Error(ErrorKind::MeasureNotNormalized, "measure sums to " + rational_to_string(total) + ", not 1");
  }

  std::set<std::string> symbols;
  auto check_symbol = [&](const std::string& name, bool allow_approx) {
    const bool approx = name == kApproxPredicate;
    if (!is_identifier(name) || (is_reserved_name(name) && !(allow_approx && approx))) {
      throw Error(ErrorKind::FormatError, "bad symbol name \"" + name + "\"");
    }
    if (!symbols.insert(name).second) throw Error(ErrorKind::FormatError, "duplicate symbol \"" + name + "\"");
  };
  for (const auto& [name, table] : predicates_) {
    check_symbol(name, true);
    if (table.arity == 0) throw Error(ErrorKind::FormatError, "predicate " + name + " needs arity >= 1");
    if (name == kApproxPredicate && table.arity != 2) throw Error(ErrorKind::FormatError, "approx must be binary");
    if (table.values.size() != table_size(n, table.arity)) {
      throw Error(ErrorKind::TableIncomplete, "predicate " + name + " is not total over |M|^" +
                                                  std::to_string(table.arity));
    }
  }
  for (const auto& [name, table] : functions_) {
    check_symbol(name, false);
    if (table.arity == 0) throw Error(ErrorKind::FormatError, "function " + name + " needs arity >= 1");
    if (table.values.size() != table_size(n, table.arity)) {
      throw Error(ErrorKind::TableIncomplete, "function " + name + " is not total over |M|^" +
                                                  std::to_string(table.arity));
    }
    for (const Element e : table.values) {
      if (e >= n) throw Error(ErrorKind::ValueOutOfRange, "function " + name + " leaves the universe");
    }
  }
  for (const auto& [name, e] : constants_) {
    check_symbol(name, false);
    if (e >= n) throw Error(ErrorKind::ValueOutOfRange, "constant " + name + " is not an element");
  }
}

std::optional<Element> WeakProbModel::find_element(std::string_view name) const {
  const auto it = std::find(universe_.begin(), universe_.end(), name);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<Element>(it - universe_.begin());
}

const PredicateTable& WeakProbModel::predicate(std::string_view name) const {
  const auto it = predicates_.find(std::string(name));
  if (it == predicates_.end()) throw Error(ErrorKind::UnknownSymbol, "predicate " + std::string(name) + " is not interpreted");
  return it->second;
}

const FunctionTable& WeakProbModel::function(std::string_view name) const {
  const auto it = functions_.find(std::string(name));
  if (it == functions_.end()) throw Error(ErrorKind::UnknownSymbol, "function " + std::string(name) + " is not interpreted");
  return it->second;
}

Element WeakProbModel::constant(std::string_view name) const {
  const auto it = constants_.find(std::string(name));
  if (it == constants_.end()) throw Error(ErrorKind::UnknownSymbol, "constant " + std::string(name) + " is not interpreted");
  return it->second;
}

const Rational01& WeakProbModel::predicate_value(std::string_view name, std::span<const Element> args) const {
  const auto& table = predicate(name);
  if (args.size() != table.arity) throw Error(ErrorKind::ArityMismatch, "wrong arity for " + std::string(name));
  return table.values[tuple_index(args, size())];
}

Element WeakProbModel::function_value(std::string_view name, std::span<const Element> args) const {
  const auto& table = function(name);
  if (args.size() != table.arity) throw Error(ErrorKind::ArityMismatch, "wrong arity for " + std::string(name));
  return table.values[tuple_index(args, size())];
}

Vocabulary WeakProbModel::vocabulary() const {
  Vocabulary voc;
  voc.set_has_eq(true);
  for (const auto& [name, table] : predicates_) {
    if (name == kApproxPredicate) {
      voc.set_has_approx(true);
    } else {
      voc.add_predicate(name, table.arity);
    }
  }
  for (const auto& [name, table] : functions_) voc.add_function(name, table.arity);
  for (const auto& [name, e] : constants_) voc.add_constant(name);
  return voc;
}

FuzzySubset::FuzzySubset(std::size_t universe_size, std::size_t arity, std::vector<Rational01> values)
    : universe_size_(universe_size), arity_(arity), values_(std::move(values)) {
  if (arity_ == 0 || values_.size() != table_size(universe_size_, arity_)) {
    throw Error(ErrorKind::TableIncomplete, "fuzzy subset is not total over |M|^" + std::to_string(arity_));
  }
}

FuzzySubset FuzzySubset::constant(std::size_t universe_size, std::size_t arity, const Rational01& r) {
  return FuzzySubset(universe_size, arity, std::vector<Rational01>(table_size(universe_size, arity), r));
}

const Rational01& FuzzySubset::at(std::span<const Element> tuple) const {
  if (tuple.size() != arity_) throw Error(ErrorKind::ArityMismatch, "tuple arity does not match fuzzy subset");
  return values_[tuple_index(tuple, universe_size_)];
}

bool FuzzySubset::is_crisp() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational01& v) { return v.is_crisp(); });
}

Dissection::Dissection(std::size_t universe_size, std::vector<std::vector<Element>> blocks)
    : blocks_(std::move(blocks)) {
  std::vector<bool> covered(universe_size, false);
  for (const auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorKind::InvalidDissection, "empty block");
    for (const Element e : block) {
      if (e >= universe_size) throw Error(ErrorKind::InvalidDissection, "block element outside the universe");
      if (covered[e]) throw Error(ErrorKind::InvalidDissection, "blocks are not pairwise disjoint");
      covered[e] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw Error(ErrorKind::InvalidDissection, "blocks do not cover the universe");
  }
}

}  // namespace hli
