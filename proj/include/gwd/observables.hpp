#pragma once

// Single-particle observables driven by the body-frame projection n:
// gyromagnetic ratio, orientation/alignment moments of the spin axis, and
// the comparison against the classical precessing-vector limit.

#include <gwd/scalar.hpp>

namespace gwd {

// g = 1 + n^2 / (s(s+1)) for a real body-frame projection n.
Scalar g_factor(const Rational& s, const Scalar& n);

// Same, parameterized by n^2 (which may be negative).
Scalar g_factor_from_nsq(const Rational& s, const Scalar& nsq);

struct ProjectionForG {
  Scalar n;        // |n| solving g = 1 + n^2/(s(s+1))
  bool imaginary;  // true when g < 1 forces n^2 < 0
};
ProjectionForG projection_for_g(const Rational& s, const Rational& g);

// <cos theta> between the spin axis and lab z for state (j, n, m).
Scalar expect_cos(const Rational& j, const Scalar& n, const Rational& m);

// <P_k(cos theta)> for k <= 4; zero for k > 2j.
Scalar expect_legendre(const Rational& j, const Scalar& n, const Rational& m, int k);

// Sum and mean of m^2 over the 2j+1 lattice projections (isotropy checks:
// the mean is j(j+1)/3, one third of the squared spin magnitude).
Rational projection_square_sum(const Rational& j);
Rational projection_square_mean(const Rational& j);

double legendre_value(int k, double x);

// Quantum moment against the classical precessing-vector value
// P_k(cos theta_n) P_k(cos theta_m).
struct LegendreComparison {
  Scalar quantum;
  double classical;
  double deviation;
};
LegendreComparison compare_classical(const Rational& j, const Scalar& n, const Rational& m,
                                     int k);

}  // namespace gwd
