#pragma once

// Exact arithmetic in the field extensions Q(sqrt(d1), sqrt(d2), ...).
// A RadicalSum is a finite sum  sum_i q_i * sqrt(d_i)  with rational q_i and
// distinct squarefree positive integers d_i (d = 1 is the rational part).
// This is closed under +, -, *, and (by repeated conjugation) under division,
// which is exactly what Clebsch-Gordan coefficients and the closed-form
// expectation values need.

#include <gwd/rational.hpp>

#include <map>
#include <string>

namespace gwd {

// Splits n = s^2 * d with d squarefree, returning {s, d}.  Complete as long
// as every prime factor of n is below the trial-division bound, which holds
// for all quantities arising here (factorial ratios and small spin products).
std::pair<BigInt, BigInt> extract_square(BigInt n);

class RadicalSum {
 public:
  RadicalSum() = default;
  RadicalSum(const Rational& q) {
    if (q != 0) terms_[1] = q;
  }
  RadicalSum(long v) : RadicalSum(Rational(v)) {}

  // q * sqrt(d) for d > 0 (d need not be squarefree; it is reduced).
  static RadicalSum sqrt_term(const Rational& q, const BigInt& d);

  // sqrt(q) for a nonnegative rational q.  Throws if q < 0.
  static RadicalSum sqrt_of(const Rational& q);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  // Rational value; throws if an irrational term is present.
  Rational rational_value() const;

  RadicalSum operator-() const;
  RadicalSum operator+(const RadicalSum& o) const;
  RadicalSum operator-(const RadicalSum& o) const;
  RadicalSum operator*(const RadicalSum& o) const;
  RadicalSum operator/(const RadicalSum& o) const;
  RadicalSum& operator+=(const RadicalSum& o) { return *this = *this + o; }
  RadicalSum& operator-=(const RadicalSum& o) { return *this = *this - o; }
  RadicalSum& operator*=(const RadicalSum& o) { return *this = *this * o; }
  RadicalSum& operator/=(const RadicalSum& o) { return *this = *this / o; }

  bool operator==(const RadicalSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const RadicalSum& o) const { return !(*this == o); }

  double value() const;
  std::string str() const;

  const std::map<BigInt, Rational>& terms() const { return terms_; }

 private:
  void add_term(const BigInt& d, const Rational& q);
  // radicand (squarefree) -> rational coefficient
  std::map<BigInt, Rational> terms_;
};

}  // namespace gwd
