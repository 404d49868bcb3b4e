#pragma once

// Decomposition of an integer-exponent half-angle expression into divergent
// channels plus a regular part:
//
//   f(theta) = sum_k (a_k + b_k cos)/sin^k  +  P(cos)  +  sin * Q(cos)
//
// The divergent channels integrate to zero under the regularization
// prescription (each family of poles is removed symmetrically), so the
// regularized integral over theta is the elementary integral of the regular
// part.  Exact while the coefficients are exact.

#include <gwd/halfangle.hpp>

#include <map>

namespace gwd {

struct SinChannel {
  Complex a, b;  // (a + b*cos)/sin^order
};

struct SinExpansion {
  // order -> channel, largest order first
  std::map<int, SinChannel, std::greater<int>> channels;
  CosPoly regular_even;  // P(cos)
  CosPoly regular_odd;   // enters as sin(theta) * Q(cos)

  std::complex<double> evaluate(double theta) const;
  bool has_divergence() const;
};

// Requires every monomial to carry integer exponents with matching parity
// (cos and sin exponents both even or both odd); this holds for every
// integrand assembled from label-matched products times the sin measure.
SinExpansion to_sin_expansion(const HalfAngleExpr& expr, double tol = kTol);

// Integral over [0, pi] of the regular part, as pi_coeff * pi + plain,
// from the classical even-power formulas
//   int cos^k = pi (k-1)!!/k!!   and   int sin cos^k = 2/(k+1)  (k even).
struct ThetaIntegral {
  Complex pi_coeff;
  Complex plain;
};
ThetaIntegral regular_integral(const SinExpansion& e);

}  // namespace gwd
