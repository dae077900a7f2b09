// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include <json.hpp>

#include "hli/model.hpp"

namespace hli {

// Model file format (JSON), rationals always as "p/q" strings:
//
//   { "universe":   ["a", "b"],
//     "measure":    {"a": "1/2", "b": "1/2"},
//     "predicates": {"P": {"arity": 1, "table": {"a": "1", "b": "0"}}},
//     "functions":  {"f": {"arity": 1, "table": {"a": "b", "b": "a"}}},
//     "constants":  {"c": "a"} }
//
// Table keys are comma-joined element names; tables must be total.

/// Throws FormatError, MeasureNotNormalized, TableIncomplete or ValueOutOfRange.
WeakProbModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const WeakProbModel& model);

/// Reads and validates a model file. Errors name the file.
WeakProbModel load_model(const std::filesystem::path& path);

/// Reads a JSON document, mapping I/O and syntax failures to FormatError.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace hli
