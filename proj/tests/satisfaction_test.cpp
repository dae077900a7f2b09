// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hli/error.hpp"
#include "hli/evaluator.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"
#include "hli/satisfaction.hpp"
#include "support.hpp"

using namespace hli;
using namespace hli::testing;

namespace {

Vocabulary phi_psi() {
  Vocabulary voc;
  voc.add_predicate("A", 1).add_predicate("B", 1).add_constant("c");
  return voc;
}

/// One element; A(c) and B(c) take the given values.
WeakProbModel point(const char* a, const char* b) {
  return unary_model(qs({"1"}), {{"A", qs({a})}, {"B", qs({b})}}, {{"c", 0}});
}

bool has_property(const Report& r, const std::string& property) {
  for (const auto& f : r.violations) {
    if (f.property == property) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("H-satisfaction of connectives at 9/10 and 1") {
  const WeakProbModel m = point("9/10", "1");
  const Vocabulary voc = phi_psi();
  CHECK(hsat(parse_formula("A(c) \\/ B(c)", voc), m));
  CHECK_FALSE(hsat(parse_formula("A(c) & B(c)", voc), m));
  CHECK_FALSE(hsat(parse_formula("A(c) /\\ B(c)", voc), m));
}

TEST_CASE("H-satisfaction of quantifiers and negations") {
  const WeakProbModel m = load_model(data_path("example2.json"));
  CHECK(hsat(parse_formula("EX x. Phi(x)", m.vocabulary()), m));
  CHECK_FALSE(hsat(parse_formula("ALL x. Phi(x)", m.vocabulary()), m));
  const WeakProbModel zero = point("0", "1/2");
  CHECK(hsat(parse_formula("~A(c)", phi_psi()), zero));
  CHECK_FALSE(hsat(parse_formula("~B(c)", phi_psi()), zero));
  CHECK_THROWS_AS(hsat(parse_formula("A(x)", phi_psi()), zero), Error);
}

TEST_CASE("crisp quantifier equality") {
  const FuzzySubset f(2, 1, qs({"1", "1"}));
  const FuzzySubset g(2, 1, qs({"1", "0"}));
  CHECK(hsat_qeq_dirac(f, f, unary_model(qs({"1/2", "1/2"}), {})));
  CHECK(hsat_qeq_dirac(f, g, unary_model(qs({"1", "0"}), {})));
  CHECK_FALSE(hsat_qeq_dirac(f, g, unary_model(qs({"1/2", "1/2"}), {})));
  CHECK_THROWS_AS(hsat_qeq_dirac(g, f, unary_model(qs({"1/2", "1/2"}), {})), Error);
  CHECK_THROWS_AS(hsat_qeq_dirac(FuzzySubset(2, 1, qs({"1/2", "1"})), g, unary_model(qs({"1/2", "1/2"}), {})),
                  Error);
}

TEST_CASE("quantifier equality through level sets") {
  const FuzzySubset f(2, 1, qs({"3/4", "1/4"}));
  const FuzzySubset g(2, 1, qs({"3/4", "0"}));
  const WeakProbModel null_b = unary_model(qs({"1", "0"}), {});
  const WeakProbModel uniform = unary_model(qs({"1/2", "1/2"}), {});
  LevelConfig eighth{qs({"1/8"}), std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}}};
  CHECK(qeq_level_condition(f, g, null_b, eighth));
  CHECK_FALSE(qeq_level_condition(f, g, uniform, eighth));
  // At 1/2 both level sets are {a}, so the difference is empty whatever μ is.
  LevelConfig half{qs({"1/2"}), std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}}};
  CHECK(qeq_level_condition(f, g, uniform, half));
  CHECK(qeq_level_condition(f, f, uniform, {}));
  CHECK_THROWS_AS(qeq_level_condition(g, f, uniform, eighth), Error);
  CHECK_THROWS_AS(validate(LevelConfig{qs({"1/2", "1/4"}), std::nullopt}), Error);

  Vocabulary voc;
  voc.add_predicate("F", 1).add_predicate("G", 1).set_has_eq(true);
  const WeakProbModel m = load_model(data_path("qeq_model.json"));
  const Formula equality = parse_formula("INT F(x) dx = INT G(y) dy", voc);
  const auto* qe = equality.as<QuantifierEquality>();
  REQUIRE(qe);
  CHECK(hsat_qeq(qe->lhs, qe->rhs, m, eighth));
  CHECK(hsat_qeq(qe->lhs, qe->lhs, m, eighth));
}

TEST_CASE("approximation systems") {
  const Vocabulary voc = phi_psi();
  const Formula a = parse_formula("A(c)", voc);
  const Formula ab = parse_formula("A(c) \\/ B(c)", voc);
  const std::vector<WeakProbModel> models{point("0", "1"), point("1", "0"), point("1/2", "1/4")};

  CHECK(validate_approximation_system(ApproximationSystem::diagonal({a, ab}), models).ok());

  ApproximationSystem up = ApproximationSystem::diagonal({a, ab});
  up.rel.emplace(0, 1);
  CHECK(validate_approximation_system(up, models).ok());

  ApproximationSystem down{{a, ab}, {{1, 0}}};
  const Report r = validate_approximation_system(down, models);
  CHECK(has_property(r, "monotonicity"));

  Vocabulary wider = voc;
  wider.add_predicate("Z", 1);
  ApproximationSystem foreign{{a, parse_formula("Z(c)", wider)}, {{0, 1}}};
  CHECK(has_property(validate_approximation_system(foreign, models), "language"));

  ApproximationSystem chain{{a, ab, parse_formula("B(c)", voc)}, {{0, 1}, {1, 2}}};
  CHECK(has_property(validate_approximation_system(chain, models), "transitivity"));
}

TEST_CASE("approximate satisfaction") {
  const Vocabulary voc = phi_psi();
  const Formula a = parse_formula("A(c)", voc);
  const Formula b = parse_formula("B(c)", voc);
  const WeakProbModel m = point("1/2", "1");
  CHECK(hasat(a, m, ApproximationSystem{{a, b}, {}}));
  CHECK(hasat(a, m, ApproximationSystem{{a, b}, {{0, 1}}}));
  CHECK_FALSE(hasat(b, m, ApproximationSystem{{a, b}, {{1, 0}}}));
  for (const auto& phi : {a, b}) {
    CHECK(hasat(phi, m, ApproximationSystem::diagonal({a, b})) == hsat(phi, m));
  }
  CHECK_THROWS_AS(hasat(parse_formula("~A(c)", voc), m, ApproximationSystem::diagonal({a})), Error);
}

TEST_CASE("weak negation clauses") {
  const Vocabulary voc = phi_psi();
  const Formula a = parse_formula("A(c)", voc);
  const std::vector<Formula> pool{a};
  const ApproximationSystem sys = ApproximationSystem::diagonal({a, negation(a)});
  const WeakNegation neg;
  CHECK(check_weak_negation(neg, pool, sys, {point("1", "0"), point("0", "1")}).ok());
  const Report half = check_weak_negation(neg, pool, sys, {point("1/2", "0")});
  CHECK(has_property(half, "2a"));
  CHECK_FALSE(has_property(half, "2b"));
}

TEST_CASE("elementary substructure on a pool") {
  const WeakProbModel m = unary_model(qs({"1"}), {{"P", qs({"1"})}});
  const WeakProbModel n = unary_model(qs({"1/2", "1/2"}), {{"P", qs({"1", "0"})}});
  const Vocabulary voc = expand_by_element_constants(n, m.universe()).vocabulary();
  const Formula pa = parse_formula("P(a)", voc);
  const Formula all = parse_formula("ALL x. P(x)", voc);
  CHECK(check_elementary_substructure(n, n, {pa, all}, ApproximationSystem::diagonal({pa, all})));
  CHECK(check_elementary_substructure(m, n, {}, ApproximationSystem{}));
  CHECK(check_elementary_substructure(m, n, {pa}, ApproximationSystem::diagonal({pa})));
  CHECK_FALSE(check_elementary_substructure(m, n, {all}, ApproximationSystem::diagonal({all})));
  const WeakProbModel other = WeakProbModel({"z"}, qs({"1"}), {{"P", PredicateTable{1, qs({"1"})}}});
  CHECK_THROWS_AS(check_elementary_substructure(other, n, {}, ApproximationSystem{}), Error);
}

TEST_CASE("theory of a model") {
  const Vocabulary voc = phi_psi();
  const Formula a = parse_formula("A(c)", voc);
  const Formula b = parse_formula("B(c)", voc);
  const auto th = theory_of(point("1", "1/2"), {a, b}, ApproximationSystem::diagonal({a, b}));
  CHECK(th == std::vector<Formula>{a});
}
