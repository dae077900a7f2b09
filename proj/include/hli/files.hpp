// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hli/formula.hpp"
#include "hli/proof.hpp"
#include "hli/satisfaction.hpp"

namespace hli {

/// Parses sentences one after another. Symbols of `voc` keep their meaning;
/// other predicates and functions are declared on first use and other bare
/// names become constants. The vocabulary grows as it goes.
class SentenceReader {
 public:
  explicit SentenceReader(Vocabulary voc = {}) : voc_(std::move(voc)) {}

  /// Throws ParseError. `where` prefixes the message.
  Formula read(std::string_view text, const std::string& where = {});
  const Vocabulary& vocabulary() const { return voc_; }

 private:
  Vocabulary voc_;
};

/// {"sentences": [formula, ...], "rel": [[i, j], ...]} with 0-based indices.
/// Throws Error{FormatError} on bad shape or indices.
ApproximationSystem approximation_system_from_json(const nlohmann::json& j, SentenceReader& reader);
ApproximationSystem load_approximation_system(const std::filesystem::path& path, SentenceReader& reader);

/// A JSON array of formula strings, or an object with a "sentences" array.
std::vector<Formula> pool_from_json(const nlohmann::json& j, SentenceReader& reader);
std::vector<Formula> load_pool(const std::filesystem::path& path, SentenceReader& reader);

/// A JSON array of lines, or {"vocabulary": "P/1,c", "lines": [...]}. A line
/// is {"formula": text, "just": text, "subst": {"phi", "psi", "v", "x", "y"}}
/// with "subst" optional. Without a vocabulary, bare names in proofs are
/// variables.
ProofScript proof_script_from_json(const nlohmann::json& j);
ProofScript load_proof_script(const std::filesystem::path& path);

}  // namespace hli
