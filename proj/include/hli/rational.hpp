// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace hli {

/// Parses "p/q" or "p" (optionally signed) into a canonical rational.
/// Throws Error{FormatError} on anything else, including decimals.
mpq_class parse_rational(std::string_view text);

std::string rational_to_string(const mpq_class& value);

/// An exact rational in the closed unit interval, kept in canonical form.
/// This is the type of every truth value and every measure weight.
class Rational01 {
 public:
  Rational01() = default;

  /// Throws Error{ValueOutOfRange} when value is outside [0,1].
  explicit Rational01(const mpq_class& value);
  Rational01(long numerator, unsigned long denominator);

  static Rational01 zero() { return Rational01(); }
  static Rational01 one() { return Rational01(1, 1); }
  static Rational01 parse(std::string_view text);
  /// Nearest point of [0,1]; used where connectives saturate.
  static Rational01 clamped(const mpq_class& value);

  const mpq_class& value() const noexcept { return value_; }
  std::string str() const { return rational_to_string(value_); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_crisp() const { return is_zero() || is_one(); }

  friend bool operator==(const Rational01& a, const Rational01& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational01& a, const Rational01& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::size_t hash_value(const Rational01& r);

/// Łukasiewicz truth functions on [0,1].
namespace truth {

Rational01 negation(const Rational01& a);
Rational01 implication(const Rational01& a, const Rational01& b);
Rational01 weak_and(const Rational01& a, const Rational01& b);
Rational01 weak_or(const Rational01& a, const Rational01& b);
Rational01 strong_and(const Rational01& a, const Rational01& b);
Rational01 strong_or(const Rational01& a, const Rational01& b);

}  // namespace truth

}  // namespace hli

template <>
struct std::hash<hli::Rational01> {
  std::size_t operator()(const hli::Rational01& r) const { return hli::hash_value(r); }
};
