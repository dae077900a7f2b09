// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns 0 when the
/// property holds, 1 when it fails or a countermodel is found, and 2 on bad
/// usage or input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hli
