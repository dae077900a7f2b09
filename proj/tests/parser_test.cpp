// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hli/error.hpp"
#include "hli/generate.hpp"
#include "hli/parser.hpp"

using namespace hli;

namespace {

Vocabulary pq() {
  Vocabulary voc;
  voc.add_predicate("P", 1).add_predicate("Q", 1).add_constant("c");
  return voc;
}

ErrorKind parse_error_kind(const char* text, const Vocabulary& voc) {
  try {
    parse_formula(text, voc);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("parse integrals and quantifier equalities") {
  Vocabulary voc = pq();
  const Formula px = atom("P", {Term::variable("x")});
  CHECK(parse_formula("INT P(x) dx", voc) == integral("x", px));

  voc.set_has_eq(true);
  const Formula eq = parse_formula("INT P(x) dx = INT Q(y) dy", voc);
  const auto* qeq = eq.as<QuantifierEquality>();
  REQUIRE(qeq);
  CHECK(Formula(qeq->lhs) == integral("x", px));
  CHECK(Formula(qeq->rhs) == integral("y", atom("Q", {Term::variable("y")})));
}

TEST_CASE("parse errors") {
  Vocabulary voc = pq();
  CHECK(parse_error_kind("P(x) + Q(x)", voc) == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("R(x)", voc) == ErrorKind::UnknownSymbol);
  CHECK(parse_error_kind("P(x, x)", voc) == ErrorKind::ArityMismatch);
  CHECK(parse_error_kind("INT P(x) dx = INT Q(y) dy", voc) == ErrorKind::FlagMissing);
  CHECK(parse_error_kind("rat(3/2)", voc) == ErrorKind::ValueOutOfRange);
}

TEST_CASE("canonical printing") {
  const Formula px = atom("P", {Term::variable("x")});
  CHECK(print_formula(negation(px)) == "~P(x)");
  CHECK(print_formula(implies(truth_constant(Rational01(1, 2)), atom("P", {Term::constant("c")}))) ==
        "rat(1/2) -> P(c)");
  CHECK(print_formula(forall("x", px)) == "ALL x. P(x)");
}

TEST_CASE("implication is right-associative, lattice and strong operators left-associative") {
  const Vocabulary voc = pq();
  const Formula a = parse_formula("P(c) -> Q(c) -> P(c)", voc);
  CHECK(a.as<Binary>()->rhs.as<Binary>() != nullptr);
  const Formula b = parse_formula("P(c) & Q(c) & P(c)", voc);
  CHECK(b.as<Binary>()->lhs.as<Binary>() != nullptr);
}

TEST_CASE("round trip on generated formulas") {
  Vocabulary voc;
  voc.add_predicate("P", 1).add_predicate("R", 2).add_function("f", 1).add_constant("c");
  voc.set_has_eq(true).set_has_approx(true);
  GeneratorOptions opts;
  opts.max_depth = 5;
  opts.free_variables = {"u", "v"};
  FormulaGenerator gen(voc, opts, 7);
  for (int i = 0; i < 2000; ++i) {
    const Formula phi = gen.formula();
    const std::string text = print_formula(phi);
    INFO(text);
    CHECK(parse_formula(text, voc) == phi);
  }
}
