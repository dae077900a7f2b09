// SPDX-License-Identifier: Apache-2.0

#include "hli/generate.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "hli/error.hpp"

namespace hli {

namespace {

/// The symbol layout shared by exhaustive and random generation.
struct Layout {
  std::vector<std::pair<std::string, std::size_t>> predicates;
  std::vector<std::pair<std::string, std::size_t>> functions;
  std::vector<std::string> constants;

  explicit Layout(const Vocabulary& voc) {
    for (const auto& p : voc.predicates()) predicates.emplace_back(p.name, p.arity);
    if (voc.has_approx()) predicates.emplace_back(std::string(kApproxPredicate), 2);
    for (const auto& f : voc.functions()) functions.emplace_back(f.name, f.arity);
    constants = voc.constants();
  }
};

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

template <class Draw>
WeakProbModel assemble(const Layout& layout, std::size_t n, std::vector<Rational01> measure,
                       const std::vector<Rational01>& grid, Draw draw) {
  std::map<std::string, PredicateTable> predicates;
  for (const auto& [name, arity] : layout.predicates) {
    PredicateTable table{arity, {}};
    const std::size_t cells = table_size(n, arity);
    for (std::size_t i = 0; i < cells; ++i) table.values.push_back(grid[draw(grid.size())]);
    predicates.emplace(name, std::move(table));
  }
  std::map<std::string, FunctionTable> functions;
  for (const auto& [name, arity] : layout.functions) {
    FunctionTable table{arity, {}};
    const std::size_t cells = table_size(n, arity);
    for (std::size_t i = 0; i < cells; ++i) table.values.push_back(draw(n));
    functions.emplace(name, std::move(table));
  }
  std::map<std::string, Element> constants;
  for (const auto& c : layout.constants) constants.emplace(c, draw(n));
  return WeakProbModel(element_names(n), std::move(measure), std::move(predicates), std::move(functions),
                       std::move(constants));
}

bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radices) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radices[k]) return true;
    digits[k] = 0;
  }
  return false;
}

}  // namespace

std::vector<Rational01> default_grid() {
  return {Rational01::zero(), Rational01(1, 4), Rational01(1, 2), Rational01(3, 4), Rational01::one()};
}

std::vector<Rational01> parse_grid(std::string_view text) {
  std::vector<Rational01> out;
  std::istringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!item.empty()) out.push_back(Rational01::parse(item));
  }
  if (out.empty()) throw Error(ErrorKind::FormatError, "empty grid");
  return out;
}

void validate(const ModelGenSpec& spec) {
  if (spec.universe_size == 0) throw Error(ErrorKind::InvalidArgument, "universe size must be at least 1");
  if (spec.value_grid.empty()) throw Error(ErrorKind::InvalidArgument, "value grid is empty");
  if (spec.measure_grid.empty()) throw Error(ErrorKind::InvalidArgument, "measure grid is empty");
  if (std::all_of(spec.measure_grid.begin(), spec.measure_grid.end(), [](const Rational01& r) { return r.is_zero(); })) {
    throw Error(ErrorKind::InvalidArgument, "measure grid has no positive weight");
  }
}

std::vector<std::string> element_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  }
  return out;
}

std::vector<std::vector<Rational01>> enumerate_measures(std::size_t universe_size,
                                                        const std::vector<Rational01>& grid) {
  const std::size_t total = table_size(grid.size(), universe_size);
  std::set<std::vector<Rational01>> seen;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<mpq_class> weights;
    mpq_class sum = 0;
    std::size_t rest = code;
    for (std::size_t i = 0; i < universe_size; ++i) {
      weights.push_back(grid[rest % grid.size()].value());
      sum += weights.back();
      rest /= grid.size();
    }
    if (sum == 0) continue;
    std::vector<Rational01> measure;
    for (const auto& w : weights) measure.emplace_back(mpq_class(w / sum));
    seen.insert(std::move(measure));
  }
  return {seen.begin(), seen.end()};
}

std::size_t exhaustive_model_count(const ModelGenSpec& spec) {
  const Layout layout(spec.vocabulary);
  const std::size_t n = spec.universe_size;
  std::size_t count = enumerate_measures(n, spec.measure_grid).size();
  for (const auto& [name, arity] : layout.predicates) {
    count = saturating_mul(count, saturating_pow(spec.value_grid.size(), saturating_pow(n, arity)));
  }
  for (const auto& [name, arity] : layout.functions) {
    count = saturating_mul(count, saturating_pow(n, saturating_pow(n, arity)));
  }
  return saturating_mul(count, saturating_pow(n, layout.constants.size()));
}

void for_each_model(const ModelGenSpec& spec, const std::function<bool(const WeakProbModel&)>& visit) {
  validate(spec);
  const Layout layout(spec.vocabulary);
  const std::size_t n = spec.universe_size;

  if (spec.count) {
    std::mt19937_64 rng(spec.seed);
    for (std::size_t i = 0; i < *spec.count; ++i) {
      if (!visit(random_model(spec, rng))) return;
    }
    return;
  }

  const auto measures = enumerate_measures(n, spec.measure_grid);
  // Odometer over every table cell; the last digit turns fastest.
  std::vector<std::size_t> radices;
  for (const auto& [name, arity] : layout.predicates) radices.insert(radices.end(), table_size(n, arity), spec.value_grid.size());
  for (const auto& [name, arity] : layout.functions) radices.insert(radices.end(), table_size(n, arity), n);
  radices.insert(radices.end(), layout.constants.size(), n);
  std::vector<std::size_t> digits(radices.size(), 0);

  for (const auto& measure : measures) {
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      std::size_t next = 0;
      auto draw = [&](std::size_t) { return digits[next++]; };
      if (!visit(assemble(layout, n, measure, spec.value_grid, draw))) return;
      if (!advance(digits, radices)) break;
    }
  }
}

WeakProbModel random_model(const ModelGenSpec& spec, std::mt19937_64& rng) {
  validate(spec);
  const Layout layout(spec.vocabulary);
  const std::size_t n = spec.universe_size;
  auto draw = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  std::vector<mpq_class> weights(n);
  mpq_class sum = 0;
  while (sum == 0) {
    sum = 0;
    for (auto& w : weights) {
      w = spec.measure_grid[draw(spec.measure_grid.size())].value();
      sum += w;
    }
  }
  std::vector<Rational01> measure;
  for (const auto& w : weights) measure.emplace_back(mpq_class(w / sum));
  return assemble(layout, n, std::move(measure), spec.value_grid, draw);
}

FormulaGenerator::FormulaGenerator(Vocabulary voc, GeneratorOptions options, std::uint64_t seed)
    : voc_(std::move(voc)), options_(std::move(options)), rng_(seed) {
  auto usable = [&](const std::string& name) { return is_identifier(name) && !is_reserved_name(name) && !voc_.declares(name); };
  std::erase_if(options_.bound_variables, [&](const std::string& x) { return !usable(x); });
  std::erase_if(options_.free_variables, [&](const std::string& x) { return !usable(x); });
  if (options_.bound_variables.empty()) options_.bound_variables.push_back("x_");
}

std::size_t FormulaGenerator::pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

Formula FormulaGenerator::formula() {
  std::vector<std::string> scope = options_.free_variables;
  if (options_.allow_qeq && voc_.has_eq() && pick(6) == 0) return qeq(scope, options_.max_depth);
  return build(scope, pick(options_.max_depth + 1));
}

Formula FormulaGenerator::sentence() {
  std::vector<std::string> scope;
  if (options_.allow_qeq && voc_.has_eq() && pick(6) == 0) return qeq(scope, options_.max_depth);
  return build(scope, pick(options_.max_depth + 1));
}

Formula FormulaGenerator::qeq(std::vector<std::string>& scope, std::size_t depth) {
  auto side = [&]() {
    std::vector<Quantifier> kinds;
    if (options_.allow_forall) kinds.push_back(Quantifier::Forall);
    if (options_.allow_exists) kinds.push_back(Quantifier::Exists);
    if (options_.allow_integral || kinds.empty()) kinds.push_back(Quantifier::Integral);
    const std::string var = options_.bound_variables[pick(options_.bound_variables.size())];
    scope.push_back(var);
    Formula body = build(scope, depth == 0 ? 0 : pick(depth));
    scope.pop_back();
    return QuantExpr{kinds[pick(kinds.size())], var, std::move(body)};
  };
  QuantExpr lhs = side();
  QuantExpr rhs = side();
  return quantifier_equality(std::move(lhs), std::move(rhs));
}

Term FormulaGenerator::term(const std::vector<std::string>& scope, std::size_t depth) {
  const auto& constants = voc_.constants();
  const auto& functions = voc_.functions();
  const bool can_apply = depth < 2 && !functions.empty();
  const std::size_t leaves = scope.size() + constants.size();
  if (leaves == 0 || (can_apply && pick(4) == 0)) {
    const auto& f = functions[pick(functions.size())];
    std::vector<Term> args;
    for (std::size_t i = 0; i < f.arity; ++i) args.push_back(term(scope, depth + 1));
    return Term::apply(f.name, std::move(args));
  }
  const std::size_t k = pick(leaves);
  if (k < scope.size()) return Term::variable(scope[k]);
  return Term::constant(constants[k - scope.size()]);
}

Formula FormulaGenerator::atom(const std::vector<std::string>& scope) {
  const bool has_terms = !scope.empty() || !voc_.constants().empty();
  std::vector<std::pair<std::string, std::size_t>> preds;
  if (has_terms) {
    for (const auto& p : voc_.predicates()) preds.emplace_back(p.name, p.arity);
    if (voc_.has_approx()) preds.emplace_back(std::string(kApproxPredicate), 2);
    if (voc_.has_eq()) preds.emplace_back(std::string(kEqPredicate), 2);
  }
  const bool use_constant = preds.empty() || (options_.allow_truth_constants && pick(5) == 0);
  if (use_constant) {
    const unsigned long q = 1 + pick(options_.max_denominator);
    const long p = static_cast<long>(pick(q + 1));
    return truth_constant(Rational01(p, q));
  }
  const auto& [name, arity] = preds[pick(preds.size())];
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) args.push_back(term(scope, 0));
  return hli::atom(name, std::move(args));
}

Formula FormulaGenerator::build(std::vector<std::string>& scope, std::size_t depth) {
  if (depth == 0) return atom(scope);
  std::vector<int> choices{0, 1, 1, 1, 1, 1};  // negation, binary
  if (options_.allow_forall) choices.push_back(2);
  if (options_.allow_exists) choices.push_back(3);
  if (options_.allow_integral) {
    choices.push_back(4);
    choices.push_back(4);
  }
  const int choice = choices[pick(choices.size())];
  switch (choice) {
    case 0:
      return negation(build(scope, depth - 1));
    case 1: {
      static constexpr Connective kOps[] = {Connective::WeakAnd, Connective::WeakOr, Connective::StrongAnd,
                                            Connective::StrongOr, Connective::Implies};
      const Connective op = kOps[pick(5)];
      Formula lhs = build(scope, depth - 1);
      Formula rhs = build(scope, pick(depth));
      if (pick(2) == 0) std::swap(lhs, rhs);
      return binary(op, std::move(lhs), std::move(rhs));
    }
    default: {
      static constexpr Quantifier kQuants[] = {Quantifier::Forall, Quantifier::Exists, Quantifier::Integral};
      const Quantifier q = kQuants[choice - 2];
      const std::string var = options_.bound_variables[pick(options_.bound_variables.size())];
      scope.push_back(var);
      Formula body = build(scope, depth - 1);
      scope.pop_back();
      return Quantified{q, var, std::move(body)};
    }
  }
}

}  // namespace hli
