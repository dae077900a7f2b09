// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hli/axioms.hpp"
#include "hli/error.hpp"
#include "hli/evaluator.hpp"
#include "hli/files.hpp"
#include "hli/generate.hpp"
#include "hli/integral.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"
#include "hli/proof.hpp"
#include "hli/satisfaction.hpp"
#include "hli/structure.hpp"
#include "hli/validation.hpp"
#include "../support.hpp"

using namespace hli;
using namespace hli::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> check;
};

Outcome fail(std::string note) { return {false, std::move(note)}; }

Outcome example_model() {
  const WeakProbModel m = load_model(data_path("example2.json"));
  const Vocabulary voc = m.vocabulary();
  const Formula some = parse_formula("EX x. Phi(x)", voc);
  const Formula all = parse_formula("ALL x. Phi(x)", voc);
  if (!hsat(some, m)) return fail("EX x. Phi(x) not H-satisfied");
  if (hsat(all, m)) return fail("ALL x. Phi(x) H-satisfied");
  const Rational01 v = eval_closed(all, m);
  if (v != q("1/2")) return fail("ALL x. Phi(x) = " + v.str());
  return {true, "EX = 1, ALL = 1/2"};
}

Outcome connectives() {
  const WeakProbModel m = unary_model(qs({"1"}), {{"A", qs({"9/10"})}, {"B", qs({"1"})}}, {{"c", 0}});
  const Vocabulary voc = m.vocabulary();
  if (!hsat(parse_formula("A(c) \\/ B(c)", voc), m)) return fail("disjunction not H-satisfied");
  if (hsat(parse_formula("A(c) & B(c)", voc), m)) return fail("strong conjunction H-satisfied");
  if (hsat(parse_formula("A(c) /\\ B(c)", voc), m)) return fail("weak conjunction H-satisfied");
  return {true, "or holds, & and /\\ evaluate to 9/10"};
}

Outcome integral_laws() {
  const auto grid = default_grid();
  const IntegralLawSamples samples = exhaustive_integral_samples(2, grid);
  Report total;
  std::size_t models = 0;
  for (const auto& mu : enumerate_measures(2, grid)) {
    total.merge(check_semantic_integral_laws(WeakProbModel(element_names(2), mu), samples));
    ++models;
  }
  if (samples.pairs.size() != 625) return fail("expected 625 pairs, got " + std::to_string(samples.pairs.size()));
  if (!total.ok()) return fail(std::to_string(total.violations.size()) + " violations, first " +
                               total.violations.front().property + ": " + total.violations.front().instantiation);
  return {true, std::to_string(models) + " measures, " + std::to_string(total.checked) + " checks, 0 violations"};
}

Outcome axioms() {
  ModelGenSpec spec;
  spec.universe_size = 2;
  std::string note;
  for (AxiomId id : {AxiomId::Mu1, AxiomId::Mu2, AxiomId::Mu3, AxiomId::Mu4, AxiomId::Mu5}) {
    const Report r = validate_axiom(id, spec);
    if (!r.ok()) return fail(std::string(to_string(id)) + ": " + std::to_string(r.violations.size()) + " violations");
    if (id == AxiomId::Mu3 && r.witnesses.empty()) return fail("mu3: no instance where the sides differ");
    note += std::string(to_string(id)) + " " + std::to_string(r.checked) + " ";
  }
  return {true, note + "checks, 0 violations, mu3 witnessed"};
}

Outcome fubini() {
  std::mt19937_64 rng(2024);
  ModelGenSpec spec;
  spec.universe_size = 3;
  const auto grid = default_grid();
  for (int i = 0; i < 1000; ++i) {
    const WeakProbModel m = random_model(spec, rng);
    std::vector<Rational01> h;
    for (int k = 0; k < 9; ++k) h.push_back(grid[rng() % grid.size()]);
    const FuzzySubset hf(3, 2, h);
    mpq_class direct = 0;
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = 0; y < 3; ++y) direct += h[x * 3 + y].value() * m.measure(x).value() * m.measure(y).value();
    }
    const Rational01 dx_dy = integral_expectation(integrate_first(hf, m), m);
    const Rational01 dy_dx = integral_expectation(integrate_second(hf, m), m);
    if (dx_dy.value() != direct || dy_dx.value() != direct || integral_product(hf, m).value() != direct) {
      return fail("sample " + std::to_string(i) + ": " + dx_dy.str() + " / " + dy_dx.str() + " vs " +
                  Rational01(direct).str());
    }
  }
  return {true, "1000 samples equal the product-measure sum"};
}

Outcome integral_agreement() {
  const auto grid = default_grid();
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::vector<Rational01>> functions{{}};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::vector<Rational01>> next;
      for (const auto& f : functions) {
        for (const auto& r : grid) {
          next.push_back(f);
          next.back().push_back(r);
        }
      }
      functions = std::move(next);
    }
    for (const auto& mu : enumerate_measures(n, grid)) {
      const WeakProbModel m(element_names(n), mu);
      for (const auto& values : functions) {
        const FuzzySubset f(n, 1, values);
        const Rational01 e = integral_expectation(f, m);
        if (e.value() != oracle::expectation(values, mu) || integral_layercake(f, m) != e ||
            integral_dissection(f, m) != e) {
          return fail("mismatch at |M| = " + std::to_string(n));
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " (model, function) pairs, 0 mismatches"};
}

/// Diagonal plus edges φ ⊲ φ ∨ ψ, closed transitively. Edges of this form
/// are monotone on every model.
ApproximationSystem random_valid_system(FormulaGenerator& gen, std::size_t base) {
  std::vector<Formula> sentences;
  for (std::size_t i = 0; i < base; ++i) sentences.push_back(gen.sentence());
  ApproximationSystem sys = ApproximationSystem::diagonal(sentences);
  for (std::size_t i = 0; i < base; ++i) {
    const Formula weaker = weak_or(sentences[i], sentences[gen.rng()() % base]);
    if (sys.index_of(weaker)) continue;
    sys.sentences.push_back(weaker);
    sys.rel.emplace(i, sys.sentences.size() - 1);
  }
  return transitive_closure(std::move(sys));
}

Outcome strength_chain() {
  Vocabulary voc;
  voc.add_predicate("P", 1).add_predicate("Q", 1).add_constant("c");
  ModelGenSpec spec;
  spec.vocabulary = voc;
  spec.universe_size = 2;
  spec.value_grid = qs({"0", "1/2", "1"});
  GeneratorOptions opts;
  opts.max_depth = 2;
  FormulaGenerator gen(voc, opts, 77);
  std::size_t satisfied = 0;
  for (int i = 0; i < 500; ++i) {
    const WeakProbModel m = random_model(spec, gen.rng());
    const ApproximationSystem sys = random_valid_system(gen, 4);
    if (!validate_approximation_system(sys, {m}).ok()) return fail("triple " + std::to_string(i) + ": system invalid");
    if (!validate_approximation_system(ApproximationSystem::diagonal(sys.sentences), {m}).ok()) {
      return fail("triple " + std::to_string(i) + ": diagonal system rejected");
    }
    const Formula& phi = sys.sentences[gen.rng()() % sys.sentences.size()];
    if (hsat(phi, m)) {
      ++satisfied;
      if (!hasat(phi, m, sys)) return fail("triple " + std::to_string(i) + ": H-SAT but not HA-SAT");
    }
  }
  return {true, "500 triples (" + std::to_string(satisfied) + " H-satisfied), 0 violations"};
}

Outcome qeq_semantics() {
  Vocabulary voc;
  voc.add_predicate("P", 1).add_predicate("R", 2).add_constant("c");
  ModelGenSpec spec;
  spec.vocabulary = voc;
  spec.universe_size = 3;
  GeneratorOptions opts;
  opts.max_depth = 3;
  opts.free_variables = {"x"};
  FormulaGenerator gen(voc, opts, 101);
  const Quantifier kinds[] = {Quantifier::Integral, Quantifier::Forall, Quantifier::Exists};
  for (int i = 0; i < 200; ++i) {
    const WeakProbModel m = random_model(spec, gen.rng());
    Formula body = gen.formula();
    for (const auto& v : free_vars(body)) {
      if (v != "x") body = forall(v, body);
    }
    const QuantExpr expr{kinds[i % 3], "x", body};
    if (!hsat_qeq(expr, expr, m)) return fail("not reflexive on " + print_formula(Formula(expr)));
  }

  std::mt19937_64 rng(5);
  const LevelConfig half{qs({"1/2"}), std::nullopt};
  for (int i = 0; i < 200; ++i) {
    const WeakProbModel m = random_model(ModelGenSpec{{}, 3}, rng);
    std::vector<Rational01> f, g;
    for (int k = 0; k < 3; ++k) {
      const bool in_f = rng() % 2;
      f.push_back(in_f ? Rational01::one() : Rational01::zero());
      g.push_back(in_f && rng() % 2 ? Rational01::one() : Rational01::zero());
    }
    const FuzzySubset ff(3, 1, f), gf(3, 1, g);
    if (hsat_qeq_dirac(ff, gf, m) != qeq_level_condition(ff, gf, m, half)) {
      return fail("Dirac and level-set checks disagree");
    }
  }

  const FuzzySubset f(2, 1, qs({"1", "1"}));
  const FuzzySubset g(2, 1, qs({"1", "0"}));
  if (!hsat_qeq_dirac(f, g, WeakProbModel({"a", "b"}, qs({"1", "0"})))) return fail("measure-zero difference rejected");
  if (hsat_qeq_dirac(f, g, WeakProbModel({"a", "b"}, qs({"1/2", "1/2"})))) {
    return fail("measure-1/2 difference accepted");
  }
  return {true, "reflexive on 200, Dirac = level sets on 200 crisp pairs, null/half witnesses"};
}

Outcome invariance() {
  Vocabulary voc;
  voc.add_predicate("P", 1).add_predicate("R", 2).add_function("f", 1).add_constant("c");
  ModelGenSpec spec;
  spec.vocabulary = voc;
  spec.universe_size = 3;
  GeneratorOptions opts;
  opts.max_depth = 4;
  FormulaGenerator gen(voc, opts, 31);
  Report total;
  for (int i = 0; i < 200; ++i) {
    const WeakProbModel m = random_model(spec, gen.rng());
    total.merge(check_invariance(m, gen.sentence(), gen.rng()));
  }
  if (!total.ok()) return fail(std::to_string(total.violations.size()) + " violations, first " +
                               total.violations.front().property);
  return {true, "200 pairs, " + std::to_string(total.checked) + " checks, 0 violations"};
}

Outcome round_trip() {
  Vocabulary voc;
  voc.add_predicate("P", 1).add_predicate("R", 2).add_function("f", 1).add_function("g", 2).add_constant("c");
  voc.set_has_eq(true).set_has_approx(true);
  GeneratorOptions opts;
  opts.max_depth = 6;
  opts.free_variables = {"u", "v"};
  opts.allow_qeq = true;
  FormulaGenerator gen(voc, opts, 1);
  std::size_t deepest = 0;
  for (int i = 0; i < 10000; ++i) {
    const Formula phi = gen.formula();
    deepest = std::max(deepest, depth(phi));
    const std::string text = print_formula(phi);
    try {
      if (!(parse_formula(text, voc) == phi)) return fail("changed: " + text);
    } catch (const Error& e) {
      return fail(text + ": " + e.what());
    }
  }
  return {true, "10000 formulas, max depth " + std::to_string(deepest) + ", 0 failures"};
}

Outcome proof_corpus() {
  std::size_t valid = 0, rejected = 0;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("proofs"))) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::set<AxiomId> axioms;
  std::set<Justification::Kind> rules;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    const ProofScript script = load_proof_script(path);
    const ProofCheck check = check_proof(script);
    if (name.starts_with("valid_")) {
      if (!check.ok()) return fail(name + " rejected at line " + std::to_string(*check.invalid_line));
      for (const auto& line : script.lines) {
        rules.insert(line.just.kind);
        if (line.just.kind == Justification::Kind::Axiom) axioms.insert(line.just.axiom);
      }
      ++valid;
    } else {
      const auto expected = read_json_file(path).at("corrupted_line").get<std::size_t>();
      if (check.ok()) return fail(name + " accepted");
      if (*check.invalid_line != expected) {
        return fail(name + " rejected at line " + std::to_string(*check.invalid_line) + ", corrupted line " +
                    std::to_string(expected));
      }
      ++rejected;
    }
  }
  if (valid != 20 || rejected != 20) return fail("corpus has " + std::to_string(valid) + "/" + std::to_string(rejected));
  if (axioms.size() != 5) return fail("valid scripts cover " + std::to_string(axioms.size()) + " schemata");
  // Premise, axiom and the four rules.
  if (rules.size() != 6) return fail("valid scripts cover " + std::to_string(rules.size()) + " justification kinds");
  return {true, "20 accepted, 20 rejected at the corrupted line"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "existential vs universal H-satisfaction on three named elements", 1, example_model},
      {2, "connectives at 9/10 and 1", 1, connectives},
      {3, "semantic integral laws, exhaustive |M| = 2", 60, integral_laws},
      {4, "integral axioms, exhaustive |M| = 2", 120, axioms},
      {5, "iterated integrals vs product measure, 1000 samples |M| = 3", 10, fubini},
      {6, "expectation = layer-cake = dissection, |M| <= 4", 60, integral_agreement},
      {7, "H-SAT implies HA-SAT, 500 triples; diagonal systems valid", 30, strength_chain},
      {8, "quantifier equality semantics", 10, qeq_semantics},
      {9, "renaming, reduct and isomorphism invariance, 200 pairs", 10, invariance},
      {10, "parse/print round trip, 10000 formulas", 10, round_trip},
      {11, "proof checker corpus", 5, proof_corpus},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      out.ok = false;
      out.note += " (over time)";
    }
    if (!out.ok) ++failures;
    std::printf("[%s] criterion %d: %s: %s (%.3f s, limit %.0f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.title,
                out.note.c_str(), seconds, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
