// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hli {

/// Built-in crisp identity on terms. Available when the vocabulary has_eq.
inline constexpr std::string_view kEqPredicate = "eq";
/// Built-in binary similarity predicate. Available when the vocabulary
/// has_approx; models interpret it through a predicate table of this name.
inline constexpr std::string_view kApproxPredicate = "approx";

bool is_identifier(std::string_view name);
/// Keywords of the concrete syntax plus the two built-in predicates.
bool is_reserved_name(std::string_view name);

struct SymbolDecl {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const SymbolDecl&, const SymbolDecl&) = default;
};

/// Maps symbol names to new names. Symbols that are not keys keep their name.
using SymbolRenaming = std::map<std::string, std::string>;

/// A signature S: predicate, function and constant symbols, plus the flags
/// that enable '=' between quantifier expressions (and the eq atom) and ≈.
///
/// Names are unique across the three symbol lists and arities are positive;
/// the mutators throw Error{InvalidVocabulary} otherwise.
class Vocabulary {
 public:
  Vocabulary& add_predicate(std::string name, std::size_t arity);
  Vocabulary& add_function(std::string name, std::size_t arity);
  Vocabulary& add_constant(std::string name);
  Vocabulary& set_has_eq(bool on) {
    has_eq_ = on;
    return *this;
  }
  Vocabulary& set_has_approx(bool on) {
    has_approx_ = on;
    return *this;
  }

  const std::vector<SymbolDecl>& predicates() const { return predicates_; }
  const std::vector<SymbolDecl>& functions() const { return functions_; }
  const std::vector<std::string>& constants() const { return constants_; }
  bool has_eq() const { return has_eq_; }
  bool has_approx() const { return has_approx_; }

  std::optional<std::size_t> predicate_arity(std::string_view name) const;
  std::optional<std::size_t> function_arity(std::string_view name) const;
  bool has_constant(std::string_view name) const;
  bool declares(std::string_view name) const;
  bool empty() const { return predicates_.empty() && functions_.empty() && constants_.empty(); }

  /// Every symbol of *this is declared in other with the same arity, and every
  /// flag set here is set there too.
  bool is_subvocabulary_of(const Vocabulary& other) const;

  /// Union of two vocabularies; throws InvalidVocabulary on conflicting kinds
  /// or arities for a shared name.
  Vocabulary merged_with(const Vocabulary& other) const;

  /// Applies a renaming; throws InvalidRenaming if the result is not injective.
  Vocabulary renamed(const SymbolRenaming& rho) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  void check_new_name(const std::string& name) const;

  std::vector<SymbolDecl> predicates_;
  std::vector<SymbolDecl> functions_;
  std::vector<std::string> constants_;
  bool has_eq_ = false;
  bool has_approx_ = false;
};

/// Parses the compact form "P/1,Q/2,f:1,c" used by the CLI: `name/n` declares
/// a predicate, `name:n` a function and a bare name a constant.
Vocabulary parse_vocabulary_spec(std::string_view text);

std::string to_string(const Vocabulary& voc);

}  // namespace hli
