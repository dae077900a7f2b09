// SPDX-License-Identifier: Apache-2.0

#include "hli/integral.hpp"

#include <algorithm>

#include "hli/error.hpp"

namespace hli {

namespace {

void require_unary(const FuzzySubset& f, const WeakProbModel& model) {
  if (f.arity() != 1) throw Error(ErrorKind::ArityMismatch, "expected a unary fuzzy subset");
  if (f.universe_size() != model.size()) throw Error(ErrorKind::TableIncomplete, "fuzzy subset is over another universe");
}

mpq_class tuple_weight(const WeakProbModel& model, std::span<const Element> tuple) {
  mpq_class w(1);
  for (const Element e : tuple) w *= model.measure(e).value();
  return w;
}

}  // namespace

Rational01 mu_set(const WeakProbModel& model, const std::set<Tuple>& tuples, std::size_t arity) {
  mpq_class total(0);
  for (const auto& t : tuples) {
    if (t.size() != arity) throw Error(ErrorKind::ArityMismatch, "tuple of the wrong arity in mu_set");
    for (const Element e : t) {
      if (e >= model.size()) throw Error(ErrorKind::ValueOutOfRange, "tuple element outside the universe");
    }
    total += tuple_weight(model, t);
  }
  return Rational01(total);
}

Rational01 mu_set(const WeakProbModel& model, const std::set<Element>& elements) {
  mpq_class total(0);
  for (const Element e : elements) total += model.measure(e).value();
  return Rational01(total);
}

Rational01 integral_expectation(const FuzzySubset& f, const WeakProbModel& model) {
  require_unary(f, model);
  mpq_class total(0);
  for (Element m = 0; m < model.size(); ++m) total += f[m].value() * model.measure(m).value();
  return Rational01(total);
}

void for_each_set_partition(std::size_t n,
                            const std::function<bool(const std::vector<std::vector<Element>>&)>& visit) {
  if (n == 0) return;
  // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  for (;;) {
    const std::size_t blocks = prefix_max[n - 1] + 1;
    std::vector<std::vector<Element>> partition(blocks);
    for (std::size_t i = 0; i < n; ++i) partition[rgs[i]].push_back(i);
    if (!visit(partition)) return;

    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

Rational01 dissection_sum(const FuzzySubset& f, const WeakProbModel& model, const Dissection& d) {
  require_unary(f, model);
  mpq_class total(0);
  for (const auto& block : d.blocks()) {
    Rational01 inf = f[block.front()];
    mpq_class weight(0);
    for (const Element e : block) {
      inf = std::min(inf, f[e]);
      weight += model.measure(e).value();
    }
    total += inf.value() * weight;
  }
  return Rational01(total);
}

Rational01 integral_dissection(const FuzzySubset& f, const WeakProbModel& model, std::size_t max_universe) {
  require_unary(f, model);
  if (model.size() > max_universe) {
    throw Error(ErrorKind::UniverseTooLarge, "dissection oracle is limited to " + std::to_string(max_universe) +
                                                 " elements, got " + std::to_string(model.size()));
  }
  Rational01 best;
  for_each_set_partition(model.size(), [&](const std::vector<std::vector<Element>>& blocks) {
    best = std::max(best, dissection_sum(f, model, Dissection(model.size(), blocks)));
    return true;
  });
  return best;
}

Rational01 integral_layercake(const FuzzySubset& f, const WeakProbModel& model) {
  require_unary(f, model);
  std::vector<Rational01> levels = f.values();
  levels.push_back(Rational01::zero());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  mpq_class total(0);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    mpq_class mass(0);
    for (Element m = 0; m < model.size(); ++m) {
      if (f[m] >= levels[i]) mass += model.measure(m).value();
    }
    total += (levels[i].value() - levels[i - 1].value()) * mass;
  }
  return Rational01(total);
}

std::set<Element> level_set(const FuzzySubset& f, const Rational01& alpha) {
  std::set<Element> out;
  for (Element m = 0; m < f.values().size(); ++m) {
    if (f.values()[m] > alpha) out.insert(m);
  }
  return out;
}

FuzzySubset integrate_first(const FuzzySubset& h, const WeakProbModel& model) {
  if (h.arity() != 2) throw Error(ErrorKind::ArityMismatch, "expected a bivariate fuzzy subset");
  const std::size_t n = model.size();
  std::vector<Rational01> out;
  out.reserve(n);
  for (Element y = 0; y < n; ++y) {
    mpq_class total(0);
    for (Element x = 0; x < n; ++x) total += h.values()[x * n + y].value() * model.measure(x).value();
    out.emplace_back(total);
  }
  return FuzzySubset(n, 1, std::move(out));
}

FuzzySubset integrate_second(const FuzzySubset& h, const WeakProbModel& model) {
  if (h.arity() != 2) throw Error(ErrorKind::ArityMismatch, "expected a bivariate fuzzy subset");
  const std::size_t n = model.size();
  std::vector<Rational01> out;
  out.reserve(n);
  for (Element x = 0; x < n; ++x) {
    mpq_class total(0);
    for (Element y = 0; y < n; ++y) total += h.values()[x * n + y].value() * model.measure(y).value();
    out.emplace_back(total);
  }
  return FuzzySubset(n, 1, std::move(out));
}

Rational01 integral_product(const FuzzySubset& h, const WeakProbModel& model) {
  if (h.universe_size() != model.size()) throw Error(ErrorKind::TableIncomplete, "fuzzy subset is over another universe");
  mpq_class total(0);
  for (std::size_t i = 0; i < h.values().size(); ++i) {
    const Tuple t = tuple_at(i, h.arity(), model.size());
    total += h.values()[i].value() * tuple_weight(model, t);
  }
  return Rational01(total);
}

}  // namespace hli
