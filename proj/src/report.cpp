// SPDX-License-Identifier: Apache-2.0

#include "hli/report.hpp"

namespace hli {

void Report::merge(Report other) {
  checked += other.checked;
  for (auto& f : other.violations) violations.push_back(std::move(f));
  for (auto& f : other.witnesses) witnesses.push_back(std::move(f));
}

nlohmann::json to_json(const Finding& f) {
  nlohmann::json j;
  j["kind"] = f.kind;
  j["axiom"] = f.property;
  j["model"] = f.model ? *f.model : nlohmann::json(nullptr);
  j["instantiation"] = f.instantiation;
  j["lhs"] = f.lhs;
  j["rhs"] = f.rhs;
  if (!f.detail.empty()) j["detail"] = f.detail;
  return j;
}

}  // namespace hli
