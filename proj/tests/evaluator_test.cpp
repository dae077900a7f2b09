// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hli/error.hpp"
#include "hli/evaluator.hpp"
#include "hli/generate.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"
#include "support.hpp"

using namespace hli;
using namespace hli::testing;

TEST_CASE("Lukasiewicz connectives") {
  CHECK(truth::implication(q("7/10"), q("3/10")) == q("3/5"));
  CHECK(truth::implication(q("3/10"), q("7/10")) == q("1"));
  CHECK(truth::strong_and(q("9/10"), q("1/2")) == q("2/5"));
  CHECK(truth::strong_and(q("1/4"), q("1/2")) == q("0"));
  CHECK(truth::strong_or(q("3/4"), q("1/2")) == q("1"));
  CHECK(truth::weak_and(q("1/3"), q("1/2")) == q("1/3"));
  CHECK(truth::weak_or(q("1/3"), q("1/2")) == q("1/2"));
  CHECK(truth::negation(q("1/3")) == q("2/3"));
}

TEST_CASE("three named elements with values 1/2, 4/5, 1") {
  const WeakProbModel m = load_model(data_path("example2.json"));
  const Vocabulary voc = m.vocabulary();
  CHECK(eval_closed(parse_formula("EX x. Phi(x)", voc), m) == q("1"));
  CHECK(eval_closed(parse_formula("ALL x. Phi(x)", voc), m) == q("1/2"));
  EvalOptions named;
  named.domain = QuantifierDomain::NamedConstants;
  CHECK(eval_closed(parse_formula("ALL x. Phi(x)", voc), m, named) == q("1/2"));
}

TEST_CASE("closed evaluation") {
  const WeakProbModel m = load_model(data_path("two_uniform.json"));
  const Vocabulary voc = m.vocabulary();
  CHECK(eval_closed(parse_formula("rat(1/2)", voc), m) == q("1/2"));
  CHECK(eval_closed(parse_formula("INT P(x) dx", voc), m) == q("1/2"));
  try {
    eval_closed(parse_formula("P(x)", voc), m);
    FAIL("expected NotASentence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASentence);
  }
  CHECK(eval(parse_formula("P(x)", voc), m, {{"x", 1}}) == q("0"));
  CHECK_THROWS_AS(eval(parse_formula("P(x)", voc), m), Error);
}

TEST_CASE("property: evaluator agrees with the reference evaluator") {
  Vocabulary voc;
  voc.add_predicate("P", 1).add_predicate("R", 2).add_function("f", 1).add_constant("c");
  ModelGenSpec spec;
  spec.vocabulary = voc;
  spec.universe_size = 3;
  GeneratorOptions opts;
  opts.max_depth = 4;
  FormulaGenerator gen(voc, opts, 3);
  for (int i = 0; i < 300; ++i) {
    const WeakProbModel m = random_model(spec, gen.rng());
    const Formula phi = gen.sentence();
    INFO(print_formula(phi));
    CHECK(eval_closed(phi, m).value() == oracle::value(phi, m));
  }
}

TEST_CASE("property: quantifier and integral dualities") {
  Vocabulary voc;
  voc.add_predicate("P", 1).add_predicate("R", 2);
  ModelGenSpec spec;
  spec.vocabulary = voc;
  spec.universe_size = 3;
  GeneratorOptions opts;
  opts.max_depth = 3;
  opts.free_variables = {"x"};
  FormulaGenerator gen(voc, opts, 5);
  for (int i = 0; i < 300; ++i) {
    const WeakProbModel m = random_model(spec, gen.rng());
    Formula phi = gen.formula();
    for (const auto& v : free_vars(phi)) {
      if (v != "x") phi = forall(v, phi);
    }
    CHECK(eval_closed(negation(forall("x", phi)), m) == eval_closed(exists("x", negation(phi)), m));
    CHECK(eval_closed(integral("x", negation(phi)), m) == truth::negation(eval_closed(integral("x", phi), m)));
  }
}
