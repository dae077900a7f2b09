// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hli/rational.hpp"

namespace hli {

/// Thresholds and their pairing for deciding Qφ = Qψ through level sets.
/// Unset levels mean: the distinct values of both matrix functions that lie
/// strictly between 0 and 1. Unset pairs mean the diagonal (i, i).
struct LevelConfig {
  std::optional<std::vector<Rational01>> levels;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
};

/// Throws Error{InvalidLevelConfig} unless the levels are strictly ascending
/// inside (0,1) and every pair indexes into them. Pairs without explicit
/// levels are checked once the levels are known.
void validate(const LevelConfig& cfg);

}  // namespace hli
