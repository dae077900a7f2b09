// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hli/error.hpp"
#include "hli/evaluator.hpp"
#include "hli/generate.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"
#include "hli/structure.hpp"
#include "support.hpp"

using namespace hli;
using namespace hli::testing;

namespace {

WeakProbModel with_approx(const std::vector<Rational01>& approx, const std::vector<Element>& f) {
  std::map<std::string, PredicateTable> preds{{"approx", PredicateTable{2, approx}}};
  std::map<std::string, FunctionTable> funcs{{"f", FunctionTable{1, f}}};
  return WeakProbModel({"a", "b"}, qs({"1/2", "1/2"}), preds, funcs);
}

}  // namespace

TEST_CASE("semantic integral laws on the uniform two-element model") {
  const WeakProbModel m = unary_model(qs({"1/2", "1/2"}), {});
  const Report r = check_semantic_integral_laws(m, exhaustive_integral_samples(2, default_grid()));
  CHECK(r.ok());
  CHECK(r.checked > 0);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("negation law with the top function") {
  const WeakProbModel m = unary_model(qs({"1/3", "2/3"}), {});
  const FuzzySubset one = FuzzySubset::constant(2, 1, q("1"));
  IntegralLawSamples s;
  s.pairs.push_back({one, one});
  const Report r = check_semantic_integral_laws(m, s);
  CHECK(r.ok());
}

TEST_CASE("similarity Lipschitz condition") {
  // Crisp identity as similarity: any function passes.
  CHECK(check_similarity_lipschitz(with_approx(qs({"1", "0", "0", "1"}), {1, 0})).ok());
  // Everything similar: the right-hand side is 1 as well.
  CHECK(check_similarity_lipschitz(with_approx(qs({"1", "1", "1", "1"}), {1, 0})).ok());
  // a ≈ b = 1 but f(a) ≈ f(b) = a ≈ c = 0.
  std::map<std::string, PredicateTable> preds{
      {"approx", PredicateTable{2, qs({"1", "1", "0", "1", "1", "0", "0", "0", "1"})}}};
  std::map<std::string, FunctionTable> funcs{{"f", FunctionTable{1, {0, 2, 2}}}};
  const WeakProbModel bad({"a", "b", "c"}, qs({"1/3", "1/3", "1/3"}), preds, funcs);
  CHECK_FALSE(check_similarity_lipschitz(bad).ok());
}

TEST_CASE("isomorphism, reduct and renaming") {
  const WeakProbModel m = load_model(data_path("example2.json"));
  CHECK(isomorphic(m, m));
  const WeakProbModel swapped = relabel_universe(m, {2, 0, 1});
  CHECK(isomorphic(m, swapped));
  CHECK_FALSE(isomorphic(m, unary_model(qs({"1/3", "1/3", "1/3"}), {{"Phi", qs({"1", "1", "1"})}})));

  const Formula phi = parse_formula("ALL x. Phi(x) -> Phi(c2)", m.vocabulary());
  Vocabulary sub;
  sub.add_predicate("Phi", 1).add_constant("c2");
  CHECK(eval_closed(phi, reduct(m, sub)) == eval_closed(phi, m));
  CHECK(eval_closed(phi, swapped) == eval_closed(phi, m));

  const SymbolRenaming rho{{"Phi", "Psi"}};
  CHECK(eval_closed(rename_symbols(phi, rho), rename(m, rho)) == eval_closed(phi, m));

  Vocabulary foreign;
  foreign.add_predicate("Q", 1);
  CHECK_THROWS_AS(reduct(m, foreign), Error);
}
