// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hli {

/// One finding of a validator. `model` is the inline model file contents so
/// that a finding can be replayed.
struct Finding {
  std::string kind;      // "violation" or "witness"
  std::string property;  // axiom, law or clause id, e.g. "mu3", "law21"
  std::optional<nlohmann::json> model;
  std::string instantiation;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

/// Outcome of a property check over many samples. Witnesses are informative
/// findings (e.g. strict inequalities) and never make the report fail.
struct Report {
  std::size_t checked = 0;
  std::vector<Finding> violations;
  std::vector<Finding> witnesses;

  bool ok() const { return violations.empty(); }
  void merge(Report other);
};

/// Line-oriented record: {kind, axiom, model, instantiation, lhs, rhs, detail}.
nlohmann::json to_json(const Finding& f);

}  // namespace hli
