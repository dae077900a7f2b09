// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hli/error.hpp"
#include "hli/formula.hpp"
#include "hli/parser.hpp"

using namespace hli;

namespace {

Formula P(const Term& t) { return atom("P", {t}); }
Term var(const char* n) { return Term::variable(n); }

}  // namespace

TEST_CASE("free variables") {
  CHECK(free_vars(P(var("x"))) == std::set<std::string>{"x"});
  CHECK(free_vars(integral("x", P(var("x")))).empty());
  CHECK(free_vars(forall("x", atom("R", {var("x"), var("y")}))) == std::set<std::string>{"y"});
  CHECK(is_sentence(truth_constant(Rational01(1, 2))));
}

TEST_CASE("substitution") {
  const Term c = Term::constant("c");
  CHECK(substitute(P(var("x")), "x", c) == P(c));
  CHECK(substitute(forall("x", P(var("x"))), "x", c) == forall("x", P(var("x"))));
  const Formula captured = forall("y", atom("R", {var("x"), var("y")}));
  try {
    substitute(captured, "x", Term::apply("f", {var("y")}));
    FAIL("expected a capture error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CaptureError);
  }
}

TEST_CASE("congruence axioms") {
  Vocabulary empty;
  empty.set_has_approx(true);
  CHECK(congruence_axioms(empty, CongruenceRelation::Approx).empty());

  Vocabulary fv;
  fv.add_function("f", 1).set_has_approx(true);
  const auto f_axioms = congruence_axioms(fv, CongruenceRelation::Approx);
  REQUIRE(f_axioms.size() == 1);
  const auto* imp = f_axioms[0].as<Binary>();
  REQUIRE(imp);
  CHECK(imp->op == Connective::Implies);
  CHECK(imp->lhs.as<Atom>()->predicate == "approx");
  CHECK(imp->rhs.as<Atom>()->predicate == "approx");
  CHECK(imp->rhs.as<Atom>()->args[0].kind() == Term::Kind::Apply);

  Vocabulary pv;
  pv.add_predicate("P", 1).set_has_approx(true);
  const auto p_axioms = congruence_axioms(pv, CongruenceRelation::Approx);
  REQUIRE(p_axioms.size() == 1);
  const auto* pimp = p_axioms[0].as<Binary>();
  REQUIRE(pimp);
  CHECK(pimp->op == Connective::Implies);
  CHECK(pimp->lhs.as<Atom>()->predicate == "approx");
  CHECK(pimp->rhs.as<Binary>()->op == Connective::WeakAnd);
}

TEST_CASE("well-formedness against a vocabulary") {
  Vocabulary voc;
  voc.add_predicate("P", 1);
  CHECK(is_well_formed(P(var("x")), voc));
  CHECK_FALSE(is_well_formed(atom("Q", {var("x")}), voc));
  CHECK_FALSE(is_well_formed(atom("P", {var("x"), var("y")}), voc));
  CHECK(depth(integral("x", negation(P(var("x"))))) == 2);
}
