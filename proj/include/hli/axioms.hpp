// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hli/evaluator.hpp"
#include "hli/formula.hpp"
#include "hli/generate.hpp"
#include "hli/report.hpp"

namespace hli {

/// The five integral axiom schemata:
///   mu1  ∫v dx ≡ v                       x not free in v
///   mu2  ∫¬φ dx ≡ ¬∫φ dx
///   mu3  ∫(φ → ψ)dx → (∫φ dx → ∫ψ dx)    implication direction only
///   mu4  ∫(φ ⊻ ψ)dx ≡ ((∫φ dx → ∫(φ & ψ)dx) → ∫ψ dx)
///   mu5  ∫(∫φ dx)dy ≡ ∫(∫φ dy)dx
enum class AxiomId { Mu1, Mu2, Mu3, Mu4, Mu5 };

std::string_view to_string(AxiomId id);
/// "mu1" … "mu5"; throws Error{InvalidArgument}.
AxiomId parse_axiom_id(std::string_view text);

/// Schema variables. mu1 reads its v from phi.
struct AxiomParts {
  std::optional<Formula> phi;
  std::optional<Formula> psi;
  std::string x = "x";
  std::string y = "y";
};

struct AxiomSides {
  Formula lhs;
  Formula rhs;
};

/// The two sides of the schema under parts. Throws Error{InvalidArgument} if
/// a needed part is missing or x occurs free in mu1's v.
AxiomSides axiom_sides(AxiomId id, const AxiomParts& parts);

/// lhs ≡ rhs written as (lhs → rhs) ∧ (rhs → lhs); for mu3, lhs → rhs.
Formula instantiate_axiom(AxiomId id, const AxiomParts& parts);

/// Whether phi is an instance of the schema. Besides the form produced by
/// instantiate_axiom, the ≡ schemata also accept either implication
/// direction. With a witness the instance must be the one it determines.
bool matches_axiom(AxiomId id, const Formula& phi, const std::optional<AxiomParts>& witness = std::nullopt);

/// mu1: P/1 and a constant c. mu2–mu4: P/1, Q/1. mu5: R/2.
Vocabulary default_axiom_vocabulary(AxiomId id);

/// Evaluates schema instances built from atoms and small generated formulas
/// on every model of spec (spec.vocabulary empty: the default vocabulary),
/// under every valuation of their free variables. mu1, mu2, mu4 and mu5 need
/// equal sides; mu3 needs lhs ≤ rhs, and instances where the sides differ
/// are kept as witnesses that the equality reading fails.
Report validate_axiom(AxiomId id, const ModelGenSpec& spec, std::size_t instances = 16,
                      const EvalOptions& opts = {});

}  // namespace hli
