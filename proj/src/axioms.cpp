// SPDX-License-Identifier: Apache-2.0

#include "hli/axioms.hpp"

#include "hli/error.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"

namespace hli {

namespace {

const Formula& need(const std::optional<Formula>& part, const char* name, AxiomId id) {
  if (!part) throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " needs " + name);
  return *part;
}

/// Reads the schema variables off the left side of a candidate instance.
std::optional<AxiomParts> extract_parts(AxiomId id, const Formula& lhs) {
  const auto* outer = lhs.as<Quantified>();
  if (!outer || outer->quantifier != Quantifier::Integral) return std::nullopt;
  AxiomParts parts;
  parts.x = outer->var;
  const Formula& body = outer->body;
  switch (id) {
    case AxiomId::Mu1:
      parts.phi = body;
      return parts;
    case AxiomId::Mu2:
      if (const auto* n = body.as<Negation>()) {
        parts.phi = n->body;
        return parts;
      }
      return std::nullopt;
    case AxiomId::Mu3:
    case AxiomId::Mu4: {
      const auto* b = body.as<Binary>();
      const Connective want = id == AxiomId::Mu3 ? Connective::Implies : Connective::StrongOr;
      if (!b || b->op != want) return std::nullopt;
      parts.phi = b->lhs;
      parts.psi = b->rhs;
      return parts;
    }
    case AxiomId::Mu5: {
      const auto* inner = body.as<Quantified>();
      if (!inner || inner->quantifier != Quantifier::Integral) return std::nullopt;
      parts.y = outer->var;
      parts.x = inner->var;
      parts.phi = inner->body;
      return parts;
    }
  }
  return std::nullopt;
}

/// Accepted shapes of an instance with the given sides.
bool is_instance_of(AxiomId id, const Formula& phi, const AxiomSides& sides) {
  if (id == AxiomId::Mu3) return phi == implies(sides.lhs, sides.rhs);
  return phi == equivalence(sides.lhs, sides.rhs) || phi == implies(sides.lhs, sides.rhs) ||
         phi == implies(sides.rhs, sides.lhs);
}

/// Candidate left sides of phi read as an instance.
std::vector<Formula> candidate_lhs(const Formula& phi) {
  std::vector<Formula> out;
  const auto* b = phi.as<Binary>();
  if (!b) return out;
  if (b->op == Connective::Implies) {
    out.push_back(b->lhs);
    out.push_back(b->rhs);
  } else if (b->op == Connective::WeakAnd) {
    if (const auto* first = b->lhs.as<Binary>(); first && first->op == Connective::Implies) out.push_back(first->lhs);
  }
  return out;
}

std::vector<Formula> atoms_over(const Vocabulary& voc, const std::vector<Term>& terms) {
  std::vector<Formula> out;
  for (const auto& p : voc.predicates()) {
    const std::size_t cells = table_size(terms.size(), p.arity);
    for (std::size_t i = 0; i < cells; ++i) {
      std::vector<Term> args;
      for (Element k : tuple_at(i, p.arity, terms.size())) args.push_back(terms[k]);
      out.push_back(atom(p.name, std::move(args)));
    }
  }
  return out;
}

std::vector<AxiomParts> build_instances(AxiomId id, const Vocabulary& voc, const std::vector<Rational01>& grid,
                                        std::size_t count, std::uint64_t seed) {
  std::vector<std::string> vars = id == AxiomId::Mu1 ? std::vector<std::string>{"y"}
                                                     : std::vector<std::string>{"x", "y"};
  std::vector<Term> terms;
  for (const auto& v : vars) terms.push_back(Term::variable(v));
  for (const auto& c : voc.constants()) terms.push_back(Term::constant(c));

  std::vector<Formula> singles;
  if (id == AxiomId::Mu1) {
    singles.push_back(truth_constant(Rational01(1, 3)));
    for (const auto& r : grid) singles.push_back(truth_constant(r));
  }
  for (auto& a : atoms_over(voc, terms)) singles.push_back(std::move(a));
  GeneratorOptions options;
  options.max_depth = 2;
  options.free_variables = vars;
  options.bound_variables = {"z"};
  FormulaGenerator gen(voc, options, seed);
  const std::size_t fixed = singles.size();
  while (singles.size() < fixed + count) singles.push_back(gen.formula());

  std::vector<AxiomParts> out;
  if (id != AxiomId::Mu3 && id != AxiomId::Mu4) {
    for (std::size_t i = 0; i < singles.size() && out.size() < count; ++i) {
      AxiomParts p;
      p.phi = singles[i];
      out.push_back(std::move(p));
    }
    return out;
  }
  // Pairs: the first singles against each other, then seeded random pairs.
  for (std::size_t i = 0; i < fixed && out.size() < count / 2; ++i) {
    for (std::size_t j = 0; j < fixed && out.size() < count / 2; ++j) {
      AxiomParts p;
      p.phi = singles[i];
      p.psi = singles[j];
      out.push_back(std::move(p));
    }
  }
  auto& rng = gen.rng();
  while (out.size() < count) {
    AxiomParts p;
    p.phi = singles[rng() % singles.size()];
    p.psi = singles[rng() % singles.size()];
    out.push_back(std::move(p));
  }
  return out;
}

std::string describe_valuation(const Valuation& v, const WeakProbModel& model) {
  std::string out;
  for (const auto& [x, e] : v) out += (out.empty() ? " with " : ", ") + x + " = " + model.element_name(e);
  return out;
}

}  // namespace

std::string_view to_string(AxiomId id) {
  switch (id) {
    case AxiomId::Mu1: return "mu1";
    case AxiomId::Mu2: return "mu2";
    case AxiomId::Mu3: return "mu3";
    case AxiomId::Mu4: return "mu4";
    case AxiomId::Mu5: return "mu5";
  }
  return "mu?";
}

AxiomId parse_axiom_id(std::string_view text) {
  for (AxiomId id : {AxiomId::Mu1, AxiomId::Mu2, AxiomId::Mu3, AxiomId::Mu4, AxiomId::Mu5}) {
    if (text == to_string(id)) return id;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown axiom \"" + std::string(text) + "\" (expected mu1..mu5)");
}

AxiomSides axiom_sides(AxiomId id, const AxiomParts& parts) {
  const std::string& x = parts.x;
  switch (id) {
    case AxiomId::Mu1: {
      const Formula& v = need(parts.phi, "v", id);
      if (free_vars(v).contains(x)) {
        throw Error(ErrorKind::InvalidArgument, "mu1: " + x + " occurs free in " + print_formula(v));
      }
      return {integral(x, v), v};
    }
    case AxiomId::Mu2: {
      const Formula& phi = need(parts.phi, "phi", id);
      return {integral(x, negation(phi)), negation(integral(x, phi))};
    }
    case AxiomId::Mu3: {
      const Formula& phi = need(parts.phi, "phi", id);
      const Formula& psi = need(parts.psi, "psi", id);
      return {integral(x, implies(phi, psi)), implies(integral(x, phi), integral(x, psi))};
    }
    case AxiomId::Mu4: {
      const Formula& phi = need(parts.phi, "phi", id);
      const Formula& psi = need(parts.psi, "psi", id);
      return {integral(x, strong_or(phi, psi)),
              implies(implies(integral(x, phi), integral(x, strong_and(phi, psi))), integral(x, psi))};
    }
    case AxiomId::Mu5: {
      const Formula& phi = need(parts.phi, "phi", id);
      return {integral(parts.y, integral(x, phi)), integral(x, integral(parts.y, phi))};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown axiom");
}

Formula instantiate_axiom(AxiomId id, const AxiomParts& parts) {
  const AxiomSides sides = axiom_sides(id, parts);
  if (id == AxiomId::Mu3) return implies(sides.lhs, sides.rhs);
  return equivalence(sides.lhs, sides.rhs);
}

bool matches_axiom(AxiomId id, const Formula& phi, const std::optional<AxiomParts>& witness) {
  if (witness) {
    try {
      return is_instance_of(id, phi, axiom_sides(id, *witness));
    } catch (const Error&) {
      return false;
    }
  }
  for (const auto& lhs : candidate_lhs(phi)) {
    const auto parts = extract_parts(id, lhs);
    if (!parts) continue;
    try {
      if (is_instance_of(id, phi, axiom_sides(id, *parts))) return true;
    } catch (const Error&) {
      // side condition failed for this reading; try the next one
    }
  }
  return false;
}

Vocabulary default_axiom_vocabulary(AxiomId id) {
  Vocabulary voc;
  switch (id) {
    case AxiomId::Mu1:
      voc.add_predicate("P", 1).add_constant("c");
      break;
    case AxiomId::Mu5:
      voc.add_predicate("R", 2);
      break;
    default:
      voc.add_predicate("P", 1).add_predicate("Q", 1);
      break;
  }
  return voc;
}

Report validate_axiom(AxiomId id, const ModelGenSpec& spec, std::size_t instances, const EvalOptions& opts) {
  constexpr std::size_t kMaxWitnesses = 8;
  ModelGenSpec gen = spec;
  if (gen.vocabulary.empty()) gen.vocabulary = default_axiom_vocabulary(id);

  struct Instance {
    std::string text;
    Formula lhs;
    Formula rhs;
    std::vector<std::string> free;
  };
  std::vector<Instance> built;
  for (const auto& parts : build_instances(id, gen.vocabulary, gen.value_grid, instances, gen.seed)) {
    AxiomSides sides = axiom_sides(id, parts);
    const Formula whole = instantiate_axiom(id, parts);
    const auto free = free_vars(whole);
    built.push_back({print_formula(whole), std::move(sides.lhs), std::move(sides.rhs), {free.begin(), free.end()}});
  }

  Report report;
  for_each_model(gen, [&](const WeakProbModel& model) {
    const std::size_t n = model.size();
    for (const auto& inst : built) {
      const std::size_t valuations = table_size(n, inst.free.size());
      for (std::size_t code = 0; code < valuations; ++code) {
        Valuation v;
        const Tuple t = tuple_at(code, inst.free.size(), n);
        for (std::size_t k = 0; k < t.size(); ++k) v.emplace(inst.free[k], t[k]);
        const Rational01 lhs = eval(inst.lhs, model, v, opts);
        const Rational01 rhs = eval(inst.rhs, model, v, opts);
        ++report.checked;
        const bool violated = id == AxiomId::Mu3 ? lhs > rhs : lhs != rhs;
        if (violated) {
          report.violations.push_back(Finding{"violation", std::string(to_string(id)), model_to_json(model),
                                              inst.text + describe_valuation(v, model), lhs.str(), rhs.str(), {}});
        } else if (lhs != rhs && report.witnesses.size() < kMaxWitnesses) {
          report.witnesses.push_back(Finding{"witness", std::string(to_string(id)), model_to_json(model),
                                             inst.text + describe_valuation(v, model), lhs.str(), rhs.str(),
                                             "sides differ: only the implication direction holds"});
        }
      }
    }
    return true;
  });
  return report;
}

}  // namespace hli
