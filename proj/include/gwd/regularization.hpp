#pragma once

// Regularized inner products.  The integrand conj(bra) * ket * w(cos) * sin
// splits into divergent 1/sin^k channels plus a regular part; the
// regularization removes each divergent channel symmetrically, leaving the
// elementary integral of the regular part.  The azimuthal integrations are
// taken over the continued phase ranges and contribute a factor 4 pi^2.
// Results are reported as  pi3 * |N|^2 pi^3  +  pi2 * |N|^2 pi^2.

#include <gwd/sin_expansion.hpp>
#include <gwd/wavefunctions.hpp>

namespace gwd {

struct RegularizedValue {
  Complex pi3;  // coefficient of |N|^2 pi^3
  Complex pi2;  // coefficient of |N|^2 pi^2
  bool continued = false;  // evaluated through the Gamma-function route

  std::complex<double> numeric() const;
  bool is_zero() const { return pi3.is_zero() && pi2.is_zero(); }
  RegularizedValue& operator+=(const RegularizedValue& o);
};

struct InnerProductBreakdown {
  bool zero_by_selection = false;  // phi or chi labels differ
  RegularizedValue aa, ab, ba, bb;  // bra branch x ket branch
  RegularizedValue total;
};

InnerProductBreakdown inner_product(const Wavefunction& bra, const Wavefunction& ket,
                                    const CosPoly& weight, double tol = kTol);
InnerProductBreakdown inner_product(const Wavefunction& bra, const Wavefunction& ket);

RegularizedValue norm_value(const Wavefunction& psi, double tol = kTol);

// Regularized theta-only integral of conj(f) * g * w * sin over [0, pi].
ThetaIntegral theta_inner(const HalfAngleExpr& f, const HalfAngleExpr& g,
                          const CosPoly& w, double tol = kTol);

struct ExpectationValue {
  bool exact = false;
  Scalar exact_value;  // set when exact
  double value = 0;    // always set
};

// <w(cos)> in the state psi, as the ratio of regularized integrals.
ExpectationValue expectation(const Wavefunction& psi, const CosPoly& weight,
                             double tol = kTol);

}  // namespace gwd
