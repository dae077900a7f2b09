// SPDX-License-Identifier: Apache-2.0

#include "hli/rational.hpp"

#include <algorithm>
#include <cctype>

#include "hli/error.hpp"

namespace hli {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::FormatError, "not an exact rational \"p/q\": \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::FormatError, "zero denominator in \"" + std::string(text) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& value) { return value.get_str(); }

Rational01::Rational01(const mpq_class& value) : value_(value) {
  value_.canonicalize();
  if (sgn(value_) < 0 || value_ > 1) {
    throw Error(ErrorKind::ValueOutOfRange, rational_to_string(value_) + " is outside [0,1]");
  }
}

Rational01::Rational01(long numerator, unsigned long denominator) {
  if (denominator == 0) throw Error(ErrorKind::FormatError, "zero denominator");
  *this = Rational01(mpq_class(mpz_class(numerator), mpz_class(denominator)));
}

Rational01 Rational01::parse(std::string_view text) { return Rational01(parse_rational(text)); }

Rational01 Rational01::clamped(const mpq_class& value) {
  if (sgn(value) <= 0) return zero();
  if (value >= 1) return one();
  return Rational01(value);
}

std::size_t hash_value(const Rational01& r) {
  const std::size_t h1 = std::hash<std::string>{}(r.value().get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(r.value().get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

namespace truth {

Rational01 negation(const Rational01& a) { return Rational01(mpq_class(1 - a.value())); }

Rational01 implication(const Rational01& a, const Rational01& b) {
  return Rational01::clamped(mpq_class(1 - a.value() + b.value()));
}

Rational01 weak_and(const Rational01& a, const Rational01& b) { return std::min(a, b); }

Rational01 weak_or(const Rational01& a, const Rational01& b) { return std::max(a, b); }

Rational01 strong_and(const Rational01& a, const Rational01& b) {
  return Rational01::clamped(mpq_class(a.value() + b.value() - 1));
}

Rational01 strong_or(const Rational01& a, const Rational01& b) {
  return Rational01::clamped(mpq_class(a.value() + b.value()));
}

}  // namespace truth

}  // namespace hli
