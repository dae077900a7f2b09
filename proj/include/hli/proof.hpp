// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hli/axioms.hpp"
#include "hli/formula.hpp"

namespace hli {

/// How a proof line was obtained. Line references are 1-based.
///   axiom:muK     instance of a schema (optional witness fixes the parts)
///   premise       taken as given
///   mp:i,j        line j is (line i → this line)
///   gen:i,x       this line is ∀x (line i)
///   int-intro:i,x this line is ∫(line i)dx
///   int-mono:i,x  line i is φ → ψ and this line is ∫φ dx → ∫ψ dx
struct Justification {
  enum class Kind { Axiom, Premise, ModusPonens, Generalization, IntegralIntro, IntegralMono };
  Kind kind = Kind::Premise;
  AxiomId axiom = AxiomId::Mu1;
  std::optional<AxiomParts> witness;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string var;
};

/// Parses the textual forms above. Throws Error{FormatError}.
Justification parse_justification(std::string_view text);
std::string to_string(const Justification& just);

struct ProofLine {
  Formula formula;
  Justification just;
};

struct ProofScript {
  std::vector<ProofLine> lines;
};

struct ProofCheck {
  std::size_t lines_checked = 0;
  /// 1-based index of the first line that does not follow.
  std::optional<std::size_t> invalid_line;
  std::string reason;

  bool ok() const { return !invalid_line.has_value(); }
};

/// Verifies each line in order and stops at the first one that fails.
ProofCheck check_proof(const ProofScript& script);

}  // namespace hli
