// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "hli/error.hpp"
#include "hli/generate.hpp"
#include "hli/integral.hpp"
#include "support.hpp"

using namespace hli;
using namespace hli::testing;

namespace {

WeakProbModel bare(const std::vector<Rational01>& mu) { return unary_model(mu, {}); }

FuzzySubset unary(std::initializer_list<const char*> values) {
  return FuzzySubset(values.size(), 1, qs(values));
}

}  // namespace

TEST_CASE("measure of sets and tuple sets") {
  const WeakProbModel m = bare(qs({"1/2", "1/2"}));
  CHECK(mu_set(m, std::set<Element>{0}) == q("1/2"));
  CHECK(mu_set(m, std::set<Tuple>{{0, 0}, {0, 1}}, 2) == q("1/2"));
  CHECK(mu_set(m, std::set<Element>{}) == q("0"));
}

TEST_CASE("expectation") {
  CHECK(integral_expectation(FuzzySubset::constant(2, 1, q("1/3")), bare(qs({"1/2", "1/2"}))) == q("1/3"));
  CHECK(integral_expectation(unary({"1", "0"}), bare(qs({"1/2", "1/2"}))) == q("1/2"));
  CHECK(integral_expectation(unary({"1/2", "1/3"}), bare(qs({"1/4", "3/4"}))) == q("3/8"));
}

TEST_CASE("dissection and layer-cake forms") {
  const WeakProbModel uniform = bare(qs({"1/2", "1/2"}));
  const WeakProbModel skew = bare(qs({"1/4", "3/4"}));
  CHECK(integral_dissection(FuzzySubset::constant(2, 1, q("2/5")), uniform) == q("2/5"));
  CHECK(integral_dissection(unary({"1", "0"}), uniform) == q("1/2"));
  CHECK(integral_layercake(unary({"1/2", "1/3"}), skew) == q("3/8"));
  CHECK(integral_layercake(FuzzySubset::constant(2, 1, q("3/7")), skew) == q("3/7"));
  CHECK(integral_layercake(unary({"0", "0"}), skew) == q("0"));
  CHECK(dissection_sum(unary({"1/2", "1/3"}), skew, Dissection(2, {{0, 1}})) == q("1/3"));
  CHECK_THROWS_AS(Dissection(2, {{0}}), Error);
  CHECK_THROWS_AS(integral_dissection(FuzzySubset::constant(9, 1, q("0")), bare(std::vector<Rational01>(9, Rational01(1, 9)))),
                  Error);
}

TEST_CASE("set partitions are counted by Bell numbers") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for_each_set_partition(n, [&](const auto&) {
      ++count;
      return true;
    });
    CHECK(count == bell[n]);
  }
}

TEST_CASE("level sets are strict") {
  CHECK(level_set(unary({"1/2", "1"}), q("1/2")) == std::set<Element>{1});
  CHECK(level_set(unary({"1/4", "1"}), q("0")) == std::set<Element>{0, 1});
  CHECK(level_set(unary({"1", "1"}), q("1")).empty());
}

TEST_CASE("iterated integrals of a product equal the product of integrals") {
  const WeakProbModel m = bare(qs({"1/6", "1/3", "1/2"}));
  const auto f = qs({"1/4", "1", "1/2"});
  const auto g = qs({"0", "3/4", "1/3"});
  std::vector<Rational01> h;
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) h.push_back(Rational01(f[x].value() * g[y].value()));
  }
  const FuzzySubset hf(3, 2, h);
  const mpq_class expected = oracle::expectation(f, m.measure()) * oracle::expectation(g, m.measure());
  CHECK(integral_expectation(integrate_first(hf, m), m).value() == expected);
  CHECK(integral_expectation(integrate_second(hf, m), m).value() == expected);
  CHECK(integral_product(hf, m).value() == expected);
}

TEST_CASE("property: the three integrals agree with the reference sum") {
  std::mt19937_64 rng(11);
  const auto grid = default_grid();
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    ModelGenSpec spec;
    spec.universe_size = n;
    const WeakProbModel m = random_model(spec, rng);
    std::vector<Rational01> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(grid[rng() % grid.size()]);
    const FuzzySubset f(n, 1, values);
    const Rational01 e = integral_expectation(f, m);
    CHECK(e.value() == oracle::expectation(values, m.measure()));
    CHECK(integral_layercake(f, m) == e);
    CHECK(integral_dissection(f, m) == e);
  }
}
