#include <doctest.h>

#include <gwd/observables.hpp>
#include <gwd/regularization.hpp>

#include <cmath>

using namespace gwd;

namespace {

Wavefunction make(const Rational& j, const Rational& n, const Rational& m) {
  return Wavefunction::build(j, Scalar(n), m);
}

HalfAngleExpr norm_integrand(const HalfAngleExpr& f, const CosPoly& w) {
  return f.conjugated().times(f).times(weight_expression(w)).times(sine_measure());
}

Complex rc(const Rational& a) { return Complex(Scalar(a)); }

}  // namespace

TEST_CASE("sin expansion separates divergent channels from the regular part") {
  // |second branch|^2 * sin for (j, n, m) = (1/2, 1, 1/2):
  //   (1 - cos)/sin^2  +  (1 - 2cos + sin^2)/2
  Wavefunction psi = make(Rational(1, 2), Rational(1), Rational(1, 2));
  SinExpansion e = to_sin_expansion(norm_integrand(psi.branch_b(), legendre_cos(0)));
  REQUIRE(e.channels.count(2) == 1);
  CHECK(e.channels.at(2).a == rc(1));
  CHECK(e.channels.at(2).b == rc(-1));
  CHECK(e.channels.size() == 1);
  // regular part: 1 - cos - cos^2/2, no odd piece
  CHECK(e.regular_even.coeff(0) == rc(1));
  CHECK(e.regular_even.coeff(1) == rc(-1));
  CHECK(e.regular_even.coeff(2) == rc(Rational(-1, 2)));
  CHECK(e.regular_even.degree() == 2);
  CHECK(e.regular_odd.is_zero());
}

TEST_CASE("deeper divergence produces stacked channels") {
  // |second branch|^2 * sin for (1, 3/2, 1):
  //   (36 - 36cos)/16sin^4 + (-3 - 15cos)/16sin^2 + (4 - 3c - 3c^2 - c^3)/4
  Wavefunction psi = make(Rational(1), Rational(3, 2), Rational(1));
  SinExpansion e = to_sin_expansion(norm_integrand(psi.branch_b(), legendre_cos(0)));
  REQUIRE(e.channels.count(4) == 1);
  REQUIRE(e.channels.count(2) == 1);
  CHECK(e.channels.at(4).a == rc(Rational(9, 4)));
  CHECK(e.channels.at(4).b == rc(Rational(-9, 4)));
  CHECK(e.channels.at(2).a == rc(Rational(-3, 16)));
  CHECK(e.channels.at(2).b == rc(Rational(-15, 16)));
  CHECK(e.regular_even.coeff(0) == rc(1));
  CHECK(e.regular_even.coeff(1) == rc(Rational(-3, 4)));
  CHECK(e.regular_even.coeff(2) == rc(Rational(-3, 4)));
  CHECK(e.regular_even.coeff(3) == rc(Rational(-1, 4)));
  CHECK(e.regular_odd.is_zero());

  // with the quadrupole weight the channels shift:
  //   (36 - 36cos)/16sin^4 + (-57 + 39cos)/16sin^2 + regular
  SinExpansion w = to_sin_expansion(norm_integrand(psi.branch_b(), legendre_cos(2)));
  CHECK(w.channels.at(4).a == rc(Rational(9, 4)));
  CHECK(w.channels.at(4).b == rc(Rational(-9, 4)));
  CHECK(w.channels.at(2).a == rc(Rational(-57, 16)));
  CHECK(w.channels.at(2).b == rc(Rational(39, 16)));
  // regular part (-7 + 57c + 60c^2 - 32c^3 - 36c^4 - 12c^5)/32
  CHECK(w.regular_even.coeff(0) == rc(Rational(-7, 32)));
  CHECK(w.regular_even.coeff(1) == rc(Rational(57, 32)));
  CHECK(w.regular_even.coeff(2) == rc(Rational(60, 32)));
  CHECK(w.regular_even.coeff(3) == rc(Rational(-1)));
  CHECK(w.regular_even.coeff(4) == rc(Rational(-36, 32)));
  CHECK(w.regular_even.coeff(5) == rc(Rational(-12, 32)));
  ThetaIntegral ti = regular_integral(w);
  CHECK(ti.pi_coeff == rc(Rational(19, 64)));
  CHECK(ti.plain.is_zero());
}

TEST_CASE("expansion rejects non-integer or parity-mixed monomials") {
  HalfAngleExpr half = HalfAngleExpr::monomial(Complex(Scalar(1)), Scalar(Rational(1, 2)),
                                               Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(to_sin_expansion(half), std::domain_error);
  HalfAngleExpr mixed = HalfAngleExpr::monomial(Complex(Scalar(1)), Scalar(1), Scalar(2));
  CHECK_THROWS_AS(to_sin_expansion(mixed), std::domain_error);
}

TEST_CASE("both branches of the half projection state carry equal norm") {
  // norms 3 pi^3 each, total 6 pi^3; the cross terms cancel between the
  // conjugate quarter phases but are individually nonzero.
  Wavefunction psi = make(Rational(1, 2), Rational(1), Rational(1, 2));
  InnerProductBreakdown ip = inner_product(psi, psi);
  CHECK(!ip.zero_by_selection);
  CHECK(ip.aa.pi3 == Complex(Scalar(3)));
  CHECK(ip.aa.pi2.is_zero());
  CHECK(ip.bb.pi3 == Complex(Scalar(3)));
  CHECK(ip.bb.pi2.is_zero());
  CHECK(ip.ab.pi2 == Complex(Scalar(0), Scalar(-8)));
  CHECK(ip.ba.pi2 == Complex(Scalar(0), Scalar(8)));
  CHECK(ip.ab.pi3.is_zero());
  CHECK(ip.ba.pi3.is_zero());
  CHECK(ip.total.pi3 == Complex(Scalar(6)));
  CHECK(ip.total.pi2.is_zero());
}

TEST_CASE("orientation-weighted products reproduce the worked ratios") {
  // (1/2, 1, 1/2): <cos> = (2pi^3 + 2pi^3) / (3pi^3 + 3pi^3) = 2/3
  Wavefunction psi = make(Rational(1, 2), Rational(1), Rational(1, 2));
  InnerProductBreakdown w = inner_product(psi, psi, legendre_cos(1));
  CHECK(w.aa.pi3 == Complex(Scalar(2)));
  CHECK(w.bb.pi3 == Complex(Scalar(2)));
  CHECK(w.total.pi3 == Complex(Scalar(4)));
  CHECK(w.total.pi2.is_zero());
  ExpectationValue ev = expectation(psi, legendre_cos(1));
  CHECK(ev.exact);
  CHECK(ev.exact_value == Scalar(Rational(2, 3)));
  CHECK(ev.value == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  // (1, 3/2, 1): norm branches 5/2 each, P2-weighted branches 19/16 each
  Wavefunction chi = make(Rational(1), Rational(3, 2), Rational(1));
  InnerProductBreakdown nn = inner_product(chi, chi);
  CHECK(nn.aa.pi3 == Complex(Scalar(Rational(5, 2))));
  CHECK(nn.bb.pi3 == Complex(Scalar(Rational(5, 2))));
  CHECK(nn.total.pi3 == Complex(Scalar(5)));
  InnerProductBreakdown p2 = inner_product(chi, chi, legendre_cos(2));
  CHECK(p2.aa.pi3 == Complex(Scalar(Rational(19, 16))));
  CHECK(p2.bb.pi3 == Complex(Scalar(Rational(19, 16))));
  CHECK(p2.total.pi3 == Complex(Scalar(Rational(19, 8))));
  ExpectationValue ev2 = expectation(chi, legendre_cos(2));
  CHECK(ev2.exact);
  CHECK(ev2.exact_value == Scalar(Rational(19, 40)));

  // first moment of the same state: m n / j(j+1) = 3/4
  ExpectationValue ev1 = expectation(chi, legendre_cos(1));
  CHECK(ev1.exact);
  CHECK(ev1.exact_value == Scalar(Rational(3, 4)));
}

TEST_CASE("selection rules and conjugate symmetry") {
  Wavefunction a = make(Rational(1, 2), Rational(1), Rational(1, 2));
  Wavefunction b = make(Rational(1, 2), Rational(1), Rational(-1, 2));
  CHECK(inner_product(a, b).zero_by_selection);  // different m
  Wavefunction c = make(Rational(1, 2), Rational(1, 2), Rational(1, 2));
  CHECK(inner_product(a, c).zero_by_selection);  // different n

  // swapping bra and ket conjugates the value
  Wavefunction d = make(Rational(3, 2), Rational(1), Rational(1, 2));
  InnerProductBreakdown fwd = inner_product(a, d, legendre_cos(1));
  InnerProductBreakdown rev = inner_product(d, a, legendre_cos(1));
  CHECK(fwd.total.pi3 == rev.total.pi3.conj());
  CHECK(fwd.total.pi2 == rev.total.pi2.conj());
}

TEST_CASE("states of different total spin are orthogonal on a common ladder") {
  // same (n, m) labels with n reachable by integer steps from both j's:
  // the regularized overlap vanishes identically.
  Wavefunction p = make(Rational(1, 2), Rational(1, 2), Rational(1, 2));
  Wavefunction q = make(Rational(3, 2), Rational(1, 2), Rational(1, 2));
  CHECK(inner_product(p, q).total.is_zero());
  Wavefunction r = make(Rational(5, 2), Rational(1, 2), Rational(1, 2));
  CHECK(inner_product(p, r).total.is_zero());
  CHECK(inner_product(q, r).total.is_zero());
}

TEST_CASE("cross-spin overlaps off the common ladder leave an imaginary residue") {
  // (1/2, 1, 1/2) against (3/2, 1, 1/2): n = 1 sits between the two ladders.
  // The pi^3 parts still cancel and the overlap has no real part, but a pure
  // imaginary pi^2 cross-branch term survives: <A1|B2> = -sqrt(3) i pi^2 and
  // <B1|A2> = +2 sqrt(3) i pi^2, so the overlap is conjugate-antisymmetric
  // under exchanging bra and ket rather than identically zero.
  Wavefunction a = make(Rational(1, 2), Rational(1), Rational(1, 2));
  Wavefunction d = make(Rational(3, 2), Rational(1), Rational(1, 2));
  InnerProductBreakdown ip = inner_product(a, d);
  Scalar rt3 = Scalar::sqrt_rational(Rational(3));
  CHECK(ip.aa.is_zero());
  CHECK(ip.bb.is_zero());
  CHECK(ip.ab.pi3.is_zero());
  CHECK(ip.ba.pi3.is_zero());
  CHECK(ip.ab.pi2 == Complex(Scalar(0), -rt3));
  CHECK(ip.ba.pi2 == Complex(Scalar(0), Scalar(2) * rt3));
  CHECK(ip.total.pi3.is_zero());
  CHECK(ip.total.pi2 == Complex(Scalar(0), rt3));
  InnerProductBreakdown rev = inner_product(d, a);
  CHECK(rev.total.pi2 == ip.total.pi2.conj());
}

TEST_CASE("edge states have exactly zero norm") {
  // (1/2, 1, 3/2): integrand (9/8) cos^{-4}(theta/2), whose expansion is all
  // divergent channels with an identically zero regular part.
  Wavefunction edge = make(Rational(1, 2), Rational(1), Rational(3, 2));
  SinExpansion e = to_sin_expansion(norm_integrand(edge.branch_b(), legendre_cos(0)));
  CHECK(e.channels.at(4).a == rc(9));
  CHECK(e.channels.at(4).b == rc(-9));
  CHECK(e.channels.at(2).a == rc(Rational(-9, 2)));
  CHECK(e.channels.at(2).b.is_zero());
  CHECK(e.regular_even.is_zero());
  CHECK(e.regular_odd.is_zero());
  RegularizedValue nv = norm_value(edge);
  CHECK(nv.is_zero());
  // a zero-norm state has no expectation values
  CHECK_THROWS_WITH_AS(expectation(edge, legendre_cos(1)), "zero-norm state",
                       std::domain_error);
}

TEST_CASE("the mirrored edge state is also null-normed") {
  Wavefunction low = make(Rational(1, 2), Rational(1), Rational(-3, 2));
  CHECK(norm_value(low).is_zero());
  Wavefunction up = make(Rational(1), Rational(1, 2), Rational(2));
  CHECK(norm_value(up).is_zero());
}

TEST_CASE("one full projection past the multiplet the two moment formulas split") {
  // (1/2, 3/2, 1/2): the norm integrand keeps a 1/sin channel with a nonzero
  // even coefficient, so the continuation in n has a pole there and the
  // subtraction leaves a scheme-dependent finite part.  The subtracted
  // integrals are still well defined and exactly computable:
  Wavefunction psi = make(Rational(1, 2), Rational(3, 2), Rational(1, 2));
  InnerProductBreakdown nn = inner_product(psi, psi);
  CHECK(nn.aa.pi3.is_zero());
  CHECK(nn.aa.pi2 == rc(-12));
  CHECK(nn.bb.pi2 == rc(-12));
  CHECK(nn.ab.pi2 == Complex(Scalar(0), Scalar(-12)));
  CHECK(nn.ba.pi2 == Complex(Scalar(0), Scalar(12)));
  CHECK(nn.total.pi3.is_zero());
  CHECK(nn.total.pi2 == rc(-24));

  InnerProductBreakdown w = inner_product(psi, psi, legendre_cos(1));
  CHECK(w.aa.pi2 == rc(Rational(-52, 3)));
  CHECK(w.bb.pi2 == rc(Rational(44, 3)));
  CHECK(w.total.pi2 == rc(Rational(-8, 3)));

  // ratio of the subtracted integrals: (-8/3) / (-24) = 1/9 ...
  ExpectationValue ev = expectation(psi, legendre_cos(1));
  CHECK(ev.exact);
  CHECK(ev.exact_value == Scalar(Rational(1, 9)));
  // ... while the closed-form moment, which is the limit of a ratio as n
  // approaches 3/2 and so divides out the pole, gives m n / j(j+1) = 1.
  CHECK(expect_legendre(Rational(1, 2), Scalar(Rational(3, 2)), Rational(1, 2), 1) ==
        Scalar(1));
}

TEST_CASE("irrational projections outside the exact family are refused") {
  // Products of like branches then carry irrational exponents, and the
  // integral neither terminates nor lands on a Gamma pole.
  Wavefunction psi = Wavefunction::build(Rational(1, 2), Scalar::sqrt_rational(Rational(2)),
                                         Rational(1, 2));
  CHECK_THROWS_AS(norm_value(psi), std::domain_error);
}

TEST_CASE("numeric view combines the two pi channels") {
  RegularizedValue v;
  v.pi3 = Complex(Scalar(2));
  v.pi2 = Complex(Scalar(0), Scalar(-8));
  std::complex<double> z = v.numeric();
  CHECK(z.real() == doctest::Approx(2 * M_PI * M_PI * M_PI).epsilon(1e-15));
  CHECK(z.imag() == doctest::Approx(-8 * M_PI * M_PI).epsilon(1e-15));
}
