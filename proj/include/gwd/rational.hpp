#pragma once

// Exact rational arithmetic used throughout the symbolic layer.  Spins and
// magnetic quantum numbers are half-integers, so a thin set of helpers for
// parsing and half-integer checks lives here as well.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace gwd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// True when 2q is an integer (spin-like values).
inline bool is_half_integer(const Rational& q) { return den(q) == 1 || den(q) == 2; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("expected an integer, got " + q.str());
  return num(q).convert_to<long>();
}

// Floor of a rational (towards -infinity).
inline BigInt floor_rational(const Rational& q) {
  BigInt n = num(q), d = den(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

// Parses "3", "-1/2", "3/2", "0.5", "-2.25".  Decimal strings must terminate
// (they are read as exact decimal fractions).  Returns nullopt on syntax error.
std::optional<Rational> parse_rational(const std::string& text);

// Throwing wrapper around parse_rational.
inline Rational rational_from_string(const std::string& text) {
  auto r = parse_rational(text);
  if (!r) throw std::domain_error("cannot parse rational number: '" + text + "'");
  return *r;
}

// n!! for n >= -1 (with (-1)!! = 0!! = 1).
inline BigInt double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial of n < -1");
  BigInt r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  BigInt r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace gwd
