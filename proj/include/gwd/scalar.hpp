#pragma once

// Scalar tower for the half-angle algebra.
//
// SymbolPoly: polynomial in one abstract symbol "nu" (an unspecified axis
// projection) with RadicalSum coefficients.  Degree 0 covers all concrete
// exact values.
//
// Scalar: either an exact SymbolPoly or a double.  Exact and floating values
// never mix silently: arithmetic combining a *symbolic* exact value with a
// float throws, and a non-symbolic exact value entering float arithmetic is
// converted explicitly through value().

#include <gwd/radical.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gwd {

class SymbolPoly {
 public:
  SymbolPoly() = default;
  SymbolPoly(const RadicalSum& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  SymbolPoly(const Rational& q) : SymbolPoly(RadicalSum(q)) {}

  static SymbolPoly symbol() {
    SymbolPoly p;
    p.c_ = {RadicalSum(), RadicalSum(Rational(1))};
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  RadicalSum constant() const {
    if (!is_constant()) throw std::domain_error("symbolic value where a constant was required");
    return c_.empty() ? RadicalSum() : c_[0];
  }
  const RadicalSum& coeff(size_t k) const {
    static const RadicalSum zero;
    return k < c_.size() ? c_[k] : zero;
  }

  SymbolPoly operator-() const;
  SymbolPoly operator+(const SymbolPoly& o) const;
  SymbolPoly operator-(const SymbolPoly& o) const;
  SymbolPoly operator*(const SymbolPoly& o) const;
  bool operator==(const SymbolPoly& o) const { return c_ == o.c_; }
  bool operator!=(const SymbolPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void trim();
  std::vector<RadicalSum> c_;  // c_[k] * nu^k
};

class Scalar {
 public:
  Scalar() : exact_(true) {}
  Scalar(int v) : exact_(true), poly_(Rational(v)) {}
  Scalar(long v) : exact_(true), poly_(Rational(v)) {}
  Scalar(const Rational& q) : exact_(true), poly_(q) {}
  Scalar(const RadicalSum& r) : exact_(true), poly_(r) {}
  Scalar(const SymbolPoly& p) : exact_(true), poly_(p) {}

  static Scalar floating(double v) {
    Scalar s;
    s.exact_ = false;
    s.num_ = v;
    return s;
  }
  static Scalar symbol() { return Scalar(SymbolPoly::symbol()); }
  static Scalar sqrt_rational(const Rational& q) { return Scalar(RadicalSum::sqrt_of(q)); }

  bool is_exact() const { return exact_; }
  bool is_symbolic() const { return exact_ && !poly_.is_constant(); }
  bool is_zero() const { return exact_ ? poly_.is_zero() : num_ == 0.0; }
  const SymbolPoly& poly() const {
    if (!exact_) throw std::domain_error("floating value where an exact one was required");
    return poly_;
  }
  RadicalSum radical() const { return poly().constant(); }
  Rational rational() const { return radical().rational_value(); }
  bool is_rational() const {
    return exact_ && poly_.is_constant() && poly_.constant().is_rational();
  }

  // Numeric value; throws for symbolic expressions.
  double value() const {
    if (!exact_) return num_;
    if (is_symbolic())
      throw std::domain_error("cannot evaluate symbolic expression numerically");
    return poly_.constant().value();
  }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Square root: exact for nonnegative rationals, numeric otherwise.
  Scalar sqrt() const;

  // Structural equality (exact vs exact compares polynomials, floats compare
  // bitwise-as-values, mixed compares numerically and exactly).
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Tolerant comparison used when floating data is in play.
  bool same(const Scalar& o, double tol) const;

  // If (*this - o) is an exact integer (or a float within tol of one),
  // returns it.
  std::optional<long> integer_difference(const Scalar& o, double tol) const;

  // Exact integer test (or float within tol of an integer).
  std::optional<long> as_integer(double tol = 0.0) const;

  std::string str() const;

 private:
  static SymbolPoly pow_symbol(int k);
  bool exact_;
  SymbolPoly poly_;
  double num_ = 0;
};

// Complex number over Scalar.
struct Complex {
  Scalar re, im;

  Complex() = default;
  Complex(const Scalar& r) : re(r) {}
  Complex(const Scalar& r, const Scalar& i) : re(r), im(i) {}
  Complex(int r) : re(r) {}

  static Complex i() { return Complex(Scalar(0), Scalar(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Complex conj() const { return {re, -im}; }
  Complex operator-() const { return {-re, -im}; }
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator*(const Scalar& s) const { return {re * s, im * s}; }
  Complex operator/(const Scalar& s) const { return {re / s, im / s}; }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }

  bool operator==(const Complex& o) const { return re == o.re && im == o.im; }

  std::string str() const;
};

}  // namespace gwd
