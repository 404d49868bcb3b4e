#pragma once

// Real-argument Gamma-function helpers with explicit sign tracking, plus the
// two-sided integral identity used to cross-check the root-mean-square
// coupling coefficients:
//
//   int_-inf^inf dx / [G(a+x) G(b-x) G(g+x) G(d-x)]
//     = G(a+b+g+d-3) / [G(a+b-1) G(b+g-1) G(g+d-1) G(d+a-1)],
//
// valid for a+b+g+d > 3 (poles in the denominator send the value to zero).

namespace gwd {

double sinpi(double x);
double cospi(double x);

struct SignedLogGamma {
  double log_abs;
  int sign;  // 0 marks a pole of Gamma
};

SignedLogGamma log_gamma_signed(double z);

// 1/Gamma(z): entire, zero at the poles of Gamma.
double rgamma(double z);

// Gamma(z) with sign; throws on a pole.
double gamma_fn(double z);

double c4_integral(double a, double b, double g, double d);

}  // namespace gwd
