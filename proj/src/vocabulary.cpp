// SPDX-License-Identifier: Apache-2.0

#include "hli/vocabulary.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hli/error.hpp"

namespace hli {

namespace {

std::optional<std::size_t> find_arity(const std::vector<SymbolDecl>& list, std::string_view name) {
  for (const auto& s : list) {
    if (s.name == name) return s.arity;
  }
  return std::nullopt;
}

std::string renamed_name(const SymbolRenaming& rho, const std::string& name) {
  const auto it = rho.find(name);
  return it == rho.end() ? name : it->second;
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

bool is_reserved_name(std::string_view name) {
  return name == "ALL" || name == "EX" || name == "INT" || name == "rat" || name == kEqPredicate ||
         name == kApproxPredicate;
}

void Vocabulary::check_new_name(const std::string& name) const {
  if (!is_identifier(name)) throw Error(ErrorKind::InvalidVocabulary, "\"" + name + "\" is not an identifier");
  if (is_reserved_name(name)) throw Error(ErrorKind::InvalidVocabulary, "\"" + name + "\" is reserved");
  if (declares(name)) throw Error(ErrorKind::InvalidVocabulary, "duplicate symbol \"" + name + "\"");
}

Vocabulary& Vocabulary::add_predicate(std::string name, std::size_t arity) {
  check_new_name(name);
  if (arity == 0) throw Error(ErrorKind::InvalidVocabulary, "predicate " + name + " must have arity >= 1");
  predicates_.push_back({std::move(name), arity});
  return *this;
}

Vocabulary& Vocabulary::add_function(std::string name, std::size_t arity) {
  check_new_name(name);
  if (arity == 0) throw Error(ErrorKind::InvalidVocabulary, "function " + name + " must have arity >= 1");
  functions_.push_back({std::move(name), arity});
  return *this;
}

Vocabulary& Vocabulary::add_constant(std::string name) {
  check_new_name(name);
  constants_.push_back(std::move(name));
  return *this;
}

std::optional<std::size_t> Vocabulary::predicate_arity(std::string_view name) const {
  return find_arity(predicates_, name);
}

std::optional<std::size_t> Vocabulary::function_arity(std::string_view name) const {
  return find_arity(functions_, name);
}

bool Vocabulary::has_constant(std::string_view name) const {
  return std::find(constants_.begin(), constants_.end(), name) != constants_.end();
}

bool Vocabulary::declares(std::string_view name) const {
  return predicate_arity(name) || function_arity(name) || has_constant(name);
}

bool Vocabulary::is_subvocabulary_of(const Vocabulary& other) const {
  if ((has_eq_ && !other.has_eq_) || (has_approx_ && !other.has_approx_)) return false;
  for (const auto& p : predicates_) {
    if (other.predicate_arity(p.name) != p.arity) return false;
  }
  for (const auto& f : functions_) {
    if (other.function_arity(f.name) != f.arity) return false;
  }
  return std::all_of(constants_.begin(), constants_.end(),
                     [&](const std::string& c) { return other.has_constant(c); });
}

Vocabulary Vocabulary::merged_with(const Vocabulary& other) const {
  Vocabulary out = *this;
  out.has_eq_ = has_eq_ || other.has_eq_;
  out.has_approx_ = has_approx_ || other.has_approx_;
  for (const auto& p : other.predicates_) {
    if (auto a = out.predicate_arity(p.name)) {
      if (*a != p.arity) throw Error(ErrorKind::InvalidVocabulary, "arity conflict for predicate " + p.name);
      continue;
    }
    out.add_predicate(p.name, p.arity);
  }
  for (const auto& f : other.functions_) {
    if (auto a = out.function_arity(f.name)) {
      if (*a != f.arity) throw Error(ErrorKind::InvalidVocabulary, "arity conflict for function " + f.name);
      continue;
    }
    out.add_function(f.name, f.arity);
  }
  for (const auto& c : other.constants_) {
    if (!out.has_constant(c)) out.add_constant(c);
  }
  return out;
}

Vocabulary Vocabulary::renamed(const SymbolRenaming& rho) const {
  Vocabulary out;
  out.has_eq_ = has_eq_;
  out.has_approx_ = has_approx_;
  try {
    for (const auto& p : predicates_) out.add_predicate(renamed_name(rho, p.name), p.arity);
    for (const auto& f : functions_) out.add_function(renamed_name(rho, f.name), f.arity);
    for (const auto& c : constants_) out.add_constant(renamed_name(rho, c));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidRenaming, e.message());
  }
  return out;
}

Vocabulary parse_vocabulary_spec(std::string_view text) {
  Vocabulary voc;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    const auto pos = item.find_first_of("/:");
    if (pos == std::string::npos) {
      voc.add_constant(item);
      continue;
    }
    const std::string name = item.substr(0, pos);
    const std::string digits = item.substr(pos + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(ErrorKind::InvalidVocabulary, "bad arity in \"" + item + "\"");
    }
    const std::size_t arity = std::stoul(digits);
    if (item[pos] == '/') {
      voc.add_predicate(name, arity);
    } else {
      voc.add_function(name, arity);
    }
  }
  return voc;
}

std::string to_string(const Vocabulary& voc) {
  std::ostringstream out;
  const char* sep = "";
  for (const auto& p : voc.predicates()) {
    out << sep << p.name << '/' << p.arity;
    sep = ",";
  }
  for (const auto& f : voc.functions()) {
    out << sep << f.name << ':' << f.arity;
    sep = ",";
  }
  for (const auto& c : voc.constants()) {
    out << sep << c;
    sep = ",";
  }
  return out.str();
}

}  // namespace hli
