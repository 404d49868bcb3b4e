#pragma once

// Finite sums of monomials  coeff * cos^a(theta/2) * sin^b(theta/2)  with
// complex coefficients and arbitrary real (or symbolic) exponents a, b.
// This is the theta-dependent core of the angular wavefunctions: the ladder
// operators act term by term, and identities such as cos^2 + sin^2 = 1 are
// handled by a canonical decomposition rather than by rewriting heuristics.

#include <gwd/scalar.hpp>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace gwd {

inline constexpr double kTol = 1e-12;

// Polynomial in x = cos(theta) with Complex coefficients.
class CosPoly {
 public:
  CosPoly() = default;
  explicit CosPoly(const Complex& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  static CosPoly monomial(const Complex& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Complex& coeff(size_t k) const {
    static const Complex zero;
    return k < c_.size() ? c_[k] : zero;
  }
  void set_coeff(size_t k, const Complex& c);

  CosPoly operator+(const CosPoly& o) const;
  CosPoly operator-(const CosPoly& o) const;
  CosPoly operator*(const CosPoly& o) const;
  CosPoly operator*(const Complex& s) const;
  bool operator==(const CosPoly& o) const { return c_ == o.c_; }

  std::complex<double> evaluate(double x) const;

  // Exact division by (1 + s*x) for s = +-1; throws unless it divides evenly
  // (within tol when floating coefficients are involved).
  CosPoly divide_linear(int s, double tol = kTol) const;

  // p(x) mod (1 - x^2) as r0 + r1*x.
  void fold(Complex& r0, Complex& r1) const;

  // Exact quotient (p - (p mod (1-x^2))) / (1 - x^2).
  CosPoly divide_one_minus_x2() const;

  std::string str() const;

 private:
  void trim(double tol = 0.0);
  std::vector<Complex> c_;
};

// Legendre polynomial P_k(x), k <= 4, with exact rational coefficients.
CosPoly legendre_cos(int k);

struct HalfAngleTerm {
  Complex coeff;
  Scalar cos_pow;  // exponent of cos(theta/2)
  Scalar sin_pow;  // exponent of sin(theta/2)
};

// One equivalence class of monomials whose exponents differ by even integer
// totals: anchored at (alpha, beta), the class content is
//   cos^alpha sin^beta * [ even(x) + cos(theta/2)sin(theta/2) * odd(x) ].
struct MonomialClass {
  Scalar alpha, beta;
  CosPoly even;
  CosPoly odd;
};

class HalfAngleExpr {
 public:
  HalfAngleExpr() = default;

  static HalfAngleExpr monomial(const Complex& coeff, const Scalar& cos_pow,
                                const Scalar& sin_pow);

  const std::vector<HalfAngleTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const HalfAngleTerm& t, double tol = kTol);

  HalfAngleExpr operator+(const HalfAngleExpr& o) const;
  HalfAngleExpr operator-(const HalfAngleExpr& o) const;
  HalfAngleExpr scaled(const Complex& c) const;
  HalfAngleExpr conjugated() const;
  HalfAngleExpr times(const HalfAngleExpr& o, double tol = kTol) const;

  // Raw theta-part of the raising (dir=+1) / lowering (dir=-1) operator for a
  // state with azimuthal label m and body-frame label n.  No normalization.
  HalfAngleExpr apply_ladder(const Scalar& n, const Rational& m, int dir) const;

  std::complex<double> evaluate(double theta) const;

  std::vector<MonomialClass> decompose(double tol = kTol) const;
  bool is_zero(double tol = kTol) const;
  bool equivalent(const HalfAngleExpr& o, double tol = kTol) const;

  // Canonical compact form: merges everything reachable through
  // cos^2 + sin^2 = 1 and re-emits minimal-exponent monomials.
  HalfAngleExpr normalized(double tol = kTol) const;

  std::string str() const;

 private:
  std::vector<HalfAngleTerm> terms_;
};

// The weight polynomial w(cos theta) as a half-angle expression
// (x = cos^2(theta/2) - sin^2(theta/2)).
HalfAngleExpr weight_expression(const CosPoly& w);

// sin(theta) = 2 cos(theta/2) sin(theta/2) as an expression.
HalfAngleExpr sine_measure();

}  // namespace gwd
