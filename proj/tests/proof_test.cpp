// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "hli/axioms.hpp"
#include "hli/error.hpp"
#include "hli/evaluator.hpp"
#include "hli/files.hpp"
#include "hli/generate.hpp"
#include "hli/model_io.hpp"
#include "hli/parser.hpp"
#include "hli/proof.hpp"
#include "support.hpp"

using namespace hli;
using namespace hli::testing;

namespace {

ProofScript script(std::initializer_list<std::pair<const char*, const char*>> lines) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [formula, just] : lines) j.push_back({{"formula", formula}, {"just", just}});
  return proof_script_from_json(j);
}

}  // namespace

TEST_CASE("axiom instances evaluate as the schemata say") {
  const WeakProbModel m = load_model(data_path("two_uniform.json"));
  const Vocabulary voc = m.vocabulary();
  CHECK(eval_closed(parse_formula("INT ~P(x) dx", voc), m) ==
        truth::negation(eval_closed(parse_formula("INT P(x) dx", voc), m)));
  CHECK(eval_closed(parse_formula("INT rat(1/3) dx", voc), m) == q("1/3"));

  std::map<std::string, PredicateTable> preds{{"R", PredicateTable{2, qs({"1", "1/4", "0", "1/2"})}}};
  const WeakProbModel r({"a", "b"}, qs({"1/3", "2/3"}), preds);
  const mpq_class direct = mpq_class(1) * 1 / 9 + mpq_class(1, 4) * 2 / 9 + mpq_class(0) + mpq_class(1, 2) * 4 / 9;
  CHECK(eval_closed(parse_formula("INT (INT R(x,y) dx) dy", r.vocabulary()), r).value() == direct);
  CHECK(eval_closed(parse_formula("INT (INT R(x,y) dy) dx", r.vocabulary()), r).value() == direct);
}

TEST_CASE("axiom instances are recognised") {
  AxiomParts parts;
  parts.phi = atom("P", {Term::variable("x")});
  parts.psi = atom("Q", {Term::variable("x")});
  parts.x = "x";
  parts.y = "y";
  for (AxiomId id : {AxiomId::Mu2, AxiomId::Mu3, AxiomId::Mu4}) {
    const Formula inst = instantiate_axiom(id, parts);
    CHECK(matches_axiom(id, inst));
    CHECK(matches_axiom(id, inst, parts));
    CHECK_FALSE(matches_axiom(id, negation(inst)));
  }
  CHECK(parse_axiom_id("mu3") == AxiomId::Mu3);
  CHECK(to_string(AxiomId::Mu5) == "mu5");
  CHECK_THROWS_AS(parse_axiom_id("mu6"), Error);
}

TEST_CASE("axiom validation on small models") {
  ModelGenSpec spec;
  spec.universe_size = 2;
  spec.value_grid = qs({"0", "1/2", "1"});
  spec.measure_grid = qs({"0", "1/2", "1"});
  for (AxiomId id : {AxiomId::Mu1, AxiomId::Mu2, AxiomId::Mu4, AxiomId::Mu5}) {
    CHECK(validate_axiom(id, spec, 6).ok());
  }
  const Report mu3 = validate_axiom(AxiomId::Mu3, spec, 6);
  CHECK(mu3.ok());
  CHECK_FALSE(mu3.witnesses.empty());
}

TEST_CASE("proof rules") {
  CHECK(check_proof(script({{"P(x)", "premise"}, {"INT P(x) dx", "int-intro:1,x"}})).ok());
  CHECK(check_proof(script({{"P(x) -> Q(x)", "premise"}, {"INT P(x) dx -> INT Q(x) dx", "int-mono:1,x"}})).ok());

  const ProofCheck mp_bad = check_proof(script({{"P(x)", "premise"}, {"Q(x)", "premise"}, {"Q(x)", "mp:1,2"}}));
  CHECK(mp_bad.invalid_line == 3);

  const ProofCheck forward = check_proof(script({{"P(x)", "premise"}, {"ALL x. P(x)", "gen:2,x"}}));
  CHECK(forward.invalid_line == 2);

  CHECK_THROWS_AS(parse_justification("mp:1"), Error);
  CHECK_THROWS_AS(parse_justification("cut:1,2"), Error);
  CHECK(to_string(parse_justification("int-mono:3,y")) == "int-mono:3,y");
}

TEST_CASE("proof corpus") {
  for (const auto& entry : std::filesystem::directory_iterator(data_path("proofs"))) {
    const std::string name = entry.path().filename().string();
    INFO(name);
    const nlohmann::json j = read_json_file(entry.path());
    const ProofCheck check = check_proof(load_proof_script(entry.path()));
    if (name.starts_with("valid_")) {
      CHECK(check.ok());
    } else {
      REQUIRE_FALSE(check.ok());
      CHECK(*check.invalid_line == j.at("corrupted_line").get<std::size_t>());
    }
  }
}

TEST_CASE("property: corrupting a derived line is caught at that line") {
  std::mt19937_64 rng(17);
  std::vector<std::filesystem::path> valid;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("proofs"))) {
    if (entry.path().filename().string().starts_with("valid_")) valid.push_back(entry.path());
  }
  std::sort(valid.begin(), valid.end());
  for (int trial = 0; trial < 200; ++trial) {
    ProofScript s = load_proof_script(valid[rng() % valid.size()]);
    std::vector<std::size_t> derived;
    for (std::size_t i = 0; i < s.lines.size(); ++i) {
      if (s.lines[i].just.kind != Justification::Kind::Premise) derived.push_back(i);
    }
    const std::size_t k = derived[rng() % derived.size()];
    switch (rng() % 3) {
      case 0: s.lines[k].formula = negation(s.lines[k].formula); break;
      case 1: s.lines[k].formula = weak_and(s.lines[k].formula, s.lines[k].formula); break;
      default: s.lines[k].formula = truth_constant(Rational01::one()); break;
    }
    const ProofCheck check = check_proof(s);
    REQUIRE_FALSE(check.ok());
    CHECK(*check.invalid_line == k + 1);
  }
}
