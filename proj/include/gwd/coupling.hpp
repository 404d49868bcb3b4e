#pragma once

// Clebsch-Gordan machinery: exact coefficients, the continuation of the
// squared coefficient to real projections, the body-frame (internal)
// coefficients <j n, k 0 | j n> for real n, root-mean-square couplings over
// the conserved internal projection, and the large-j2 coupling limit that
// reproduces the rotation matrices d^j(theta).

#include <gwd/scalar.hpp>

#include <optional>
#include <string>

namespace gwd {

bool triangle_ok(const Rational& j1, const Rational& j2, const Rational& j3);

// Exact <j1 m1, j2 m2 | j3 (m1+m2)> in the Condon-Shortley convention.
// Returns 0 for any label pattern outside the coupling rules.
RadicalSum cg_exact(const Rational& j1, const Rational& m1, const Rational& j2,
                    const Rational& m2, const Rational& j3);

inline double cg_value(const Rational& j1, const Rational& m1, const Rational& j2,
                       const Rational& m2, const Rational& j3) {
  return cg_exact(j1, m1, j2, m2, j3).value();
}

// Squared coefficient continued to real projections (x1, x2); coincides with
// the exact square on the half-integer lattice and may be negative between
// lattice points (quasiprobability).
double cg_sq_continuous(const Rational& j1, double x1, const Rational& j2,
                        double x2, const Rational& j3);

// Signed continuation; requires a nonnegative Gamma product (throws outside
// that region).
double cg_continuous(const Rational& j1, double x1, const Rational& j2,
                     double x2, const Rational& j3);

// sqrt(j(j+1)).
Scalar spin_magnitude(const Rational& j);

// Body-frame coefficient <j n, k 0 | j n> continued to real n, for k <= 4
// (requires k <= 2j).  Exact for exact n.
Scalar internal_cg(const Rational& j, const Scalar& n, int k);

struct TripleProduct {
  bool exact = false;
  Scalar external;  // <j1 m1, j2 m2 | j3 m3>
  Scalar internal;  // <j1 n1, j2 n2 | j3 n3>, continued
  Scalar ratio;     // external * internal
  Scalar value;     // ratio / (2 j3 + 1): the coupling integral per 8 pi^2
};
TripleProduct triple_product(const Rational& j1, const Scalar& n1, const Rational& m1,
                             const Rational& j2, const Scalar& n2, const Rational& m2,
                             const Rational& j3);

// ---- rms internal couplings over the conserved body-frame projection ----

enum class RmsPattern {
  HalvesToOneStretched,  // <1 smax | 1/2 x, 1/2 smax - x>
  HalvesToOneZero,       // <1 0    | 1/2 x, 1/2 -x>
  HalvesToZero,          // <0 0    | 1/2 x, 1/2 -x>
  OnesToZero,            // <0 0    | 1  x, 1  -x>
};

struct PatternInfo {
  Rational j1, j2, j3;
  double n3;
  const char* token;
  double center;  // symmetry axis of the density in x
};
PatternInfo pattern_info(RmsPattern p);
std::optional<RmsPattern> parse_pattern(const std::string& token);

// Squared continued coefficient as a function of the split x of the
// conserved projection.
double quasiprob_density(RmsPattern p, double x);

struct RmsResult {
  double rms;
  double integral;
  double error_estimate;
  std::optional<double> closed_form;  // via the two-sided Gamma identity
};
RmsResult rms_pattern(RmsPattern p);

// General stretched coupling j1 + j2 -> j3 = j1+j2 at n3 = sqrt(j3(j3+1)).
RmsResult rms_stretched(const Rational& j1, const Rational& j2);

// Area under the quasiprobability curve: composite Simpson over the core
// window plus the exact oscillatory tails.
double quasiprob_area(RmsPattern p);

// ---- rotation matrices from the large-j2 coupling limit ----

// <j1 m1, j2 m2 | j2 + nu, m1 + m2> at real j2, m2 (log-Gamma evaluation).
double cg_large_j2(const Rational& j1, const Rational& m1, double j2, double m2,
                   const Rational& nu);

// d^j_{m nu}(theta) = lim_{j2->inf} <j m, j2 j2 cos(theta) | j2+nu, ...>,
// evaluated at j2 = base, base/2, base/4 and Richardson-extrapolated.
double asymptotic_rotation(const Rational& j, const Rational& m, const Rational& nu,
                           double theta, long j2 = 1000000);

}  // namespace gwd
