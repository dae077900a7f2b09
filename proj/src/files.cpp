// SPDX-License-Identifier: Apache-2.0

#include "hli/files.hpp"

#include "hli/error.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"

namespace hli {

namespace {

using nlohmann::json;

std::string prefixed(const std::string& where, const std::string& message) {
  return where.empty() ? message : where + ": " + message;
}

template <class Load>
auto with_path(const std::filesystem::path& path, Load load) {
  const json j = read_json_file(path);
  try {
    return load(j);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.message());
  }
}

const json& sentence_array(const json& j) {
  if (j.is_array()) return j;
  if (j.is_object() && j.contains("sentences") && j["sentences"].is_array()) return j["sentences"];
  throw Error(ErrorKind::FormatError, "expected an array of sentences or an object with \"sentences\"");
}

std::string text_field(const json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw Error(ErrorKind::FormatError, where + ": \"" + key + "\" must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

Formula SentenceReader::read(std::string_view text, const std::string& where) {
  try {
    auto parsed = parse_formula_inferring(text, FreeNames::AsConstants, voc_);
    voc_ = std::move(parsed.vocabulary);
    return std::move(parsed.formula);
  } catch (const Error& e) {
    throw Error(e.kind(), prefixed(where, e.message()));
  }
}

ApproximationSystem approximation_system_from_json(const json& j, SentenceReader& reader) {
  if (!j.is_object()) throw Error(ErrorKind::FormatError, "approximation system must be a JSON object");
  ApproximationSystem sys;
  const json& sentences = sentence_array(j);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::string where = "sentences[" + std::to_string(i) + "]";
    if (!sentences[i].is_string()) throw Error(ErrorKind::FormatError, where + " must be a string");
    sys.sentences.push_back(reader.read(sentences[i].get<std::string>(), where));
  }
  if (j.contains("rel")) {
    const json& rel = j["rel"];
    if (!rel.is_array()) throw Error(ErrorKind::FormatError, "\"rel\" must be an array of index pairs");
    for (const auto& edge : rel) {
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_unsigned() || !edge[1].is_number_unsigned()) {
        throw Error(ErrorKind::FormatError, "\"rel\" entries must be [i, j] with non-negative integers");
      }
      const auto i = edge[0].get<std::size_t>();
      const auto k = edge[1].get<std::size_t>();
      if (i >= sys.sentences.size() || k >= sys.sentences.size()) {
        throw Error(ErrorKind::FormatError, "\"rel\" entry [" + std::to_string(i) + ", " + std::to_string(k) +
                                                "] is out of range");
      }
      sys.rel.emplace(i, k);
    }
  }
  return sys;
}

ApproximationSystem load_approximation_system(const std::filesystem::path& path, SentenceReader& reader) {
  return with_path(path, [&](const json& j) { return approximation_system_from_json(j, reader); });
}

std::vector<Formula> pool_from_json(const json& j, SentenceReader& reader) {
  std::vector<Formula> pool;
  const json& sentences = sentence_array(j);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::string where = "pool[" + std::to_string(i) + "]";
    if (!sentences[i].is_string()) throw Error(ErrorKind::FormatError, where + " must be a string");
    pool.push_back(reader.read(sentences[i].get<std::string>(), where));
  }
  return pool;
}

std::vector<Formula> load_pool(const std::filesystem::path& path, SentenceReader& reader) {
  return with_path(path, [&](const json& j) { return pool_from_json(j, reader); });
}

ProofScript proof_script_from_json(const json& j) {
  const json* lines = &j;
  Vocabulary voc;
  const bool fixed = j.is_object();
  if (fixed) {
    if (!j.contains("lines") || !j["lines"].is_array()) {
      throw Error(ErrorKind::FormatError, "proof object needs a \"lines\" array");
    }
    lines = &j["lines"];
    if (j.contains("vocabulary")) {
      if (!j["vocabulary"].is_string()) throw Error(ErrorKind::FormatError, "\"vocabulary\" must be a string");
      voc = parse_vocabulary_spec(j["vocabulary"].get<std::string>());
    }
  } else if (!j.is_array()) {
    throw Error(ErrorKind::FormatError, "proof must be an array of lines or an object with \"lines\"");
  }

  // Every formula in a proof shares one vocabulary: declared up front, or
  // grown from first uses with bare names read as variables.
  auto parse = [&](const std::string& text, const std::string& where) {
    try {
      auto parsed = parse_formula_inferring(text, FreeNames::AsVariables, voc);
      voc = std::move(parsed.vocabulary);
      return std::move(parsed.formula);
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.message());
    }
  };

  ProofScript script;
  for (std::size_t i = 0; i < lines->size(); ++i) {
    const json& line = (*lines)[i];
    const std::string where = "line " + std::to_string(i + 1);
    if (!line.is_object()) throw Error(ErrorKind::FormatError, where + " must be an object");
    Formula phi = parse(text_field(line, "formula", where), where);
    Justification just;
    try {
      just = parse_justification(text_field(line, "just", where));
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.message());
    }
    if (line.contains("subst")) {
      const json& s = line["subst"];
      if (!s.is_object()) throw Error(ErrorKind::FormatError, where + ": \"subst\" must be an object");
      AxiomParts parts;
      for (const char* key : {"phi", "v"}) {
        if (s.contains(key)) parts.phi = parse(text_field(s, key, where), where + " subst." + key);
      }
      if (s.contains("psi")) parts.psi = parse(text_field(s, "psi", where), where + " subst.psi");
      if (s.contains("x")) parts.x = text_field(s, "x", where);
      if (s.contains("y")) parts.y = text_field(s, "y", where);
      just.witness = std::move(parts);
    }
    script.lines.push_back({std::move(phi), std::move(just)});
  }
  return script;
}

ProofScript load_proof_script(const std::filesystem::path& path) {
  return with_path(path, [](const json& j) { return proof_script_from_json(j); });
}

}  // namespace hli
