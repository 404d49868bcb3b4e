#include <gwd/regularization.hpp>

#include <cmath>
#include <numbers>

namespace gwd {

namespace {

bool all_integer_exponents(const HalfAngleExpr& e, double tol) {
  for (auto& t : e.terms())
    if (!t.cos_pow.as_integer(tol) || !t.sin_pow.as_integer(tol)) return false;
  return true;
}

RegularizedValue from_theta(const ThetaIntegral& ti) {
  RegularizedValue v;
  v.pi3 = ti.pi_coeff * Scalar(4);
  v.pi2 = ti.plain * Scalar(4);
  return v;
}

// Inner product of two single monomials with non-integer exponents, through
// the Gamma-function continuation of  int_0^pi cos^A sin^B dtheta
//   = Gamma((B+1)/2) Gamma((A+1)/2) / (2 Gamma((A+B)/2 + 1)).
// The edge-state family lands exactly on the poles of the denominator Gamma,
// producing an exact zero for every weight monomial; anything else is
// unsupported and raises.
RegularizedValue continued_pair(const HalfAngleExpr& bra, const HalfAngleExpr& ket,
                                const CosPoly& weight, double tol) {
  RegularizedValue out;
  out.continued = true;
  if (bra.empty() || ket.empty()) return out;
  if (bra.terms().size() != 1 || ket.terms().size() != 1)
    throw std::domain_error(
        "analytic continuation implemented only for single-monomial branches");
  const auto& tb = bra.terms()[0];
  const auto& tk = ket.terms()[0];
  // Exponent sums of conj(bra)*ket*sin; each weight monomial x^k shifts the
  // total exponent sum by 2k.
  Scalar sum = tb.cos_pow + tb.sin_pow + tk.cos_pow + tk.sin_pow + Scalar(2);
  for (int k = 0; k <= weight.degree(); ++k) {
    if (weight.coeff(k).is_zero()) continue;
    Scalar pole_arg = (sum + Scalar(2 * k)) / Scalar(2) + Scalar(1);
    auto p = pole_arg.as_integer(tol);
    if (!p || *p > 0)
      throw std::domain_error(
          "analytic continuation required: integral does not reduce to a "
          "Gamma pole");
    // 1/Gamma(nonpositive integer) = 0: the continued integral vanishes.
  }
  return out;
}

RegularizedValue pair_value(const HalfAngleExpr& bra, const HalfAngleExpr& ket,
                            const CosPoly& weight, double tol) {
  if (bra.empty() || ket.empty()) return RegularizedValue{};
  HalfAngleExpr integrand = bra.conjugated()
                                .times(ket, tol)
                                .times(weight_expression(weight), tol)
                                .times(sine_measure(), tol);
  if (!all_integer_exponents(integrand, tol))
    return continued_pair(bra, ket, weight, tol);
  return from_theta(regular_integral(to_sin_expansion(integrand, tol)));
}

}  // namespace

std::complex<double> RegularizedValue::numeric() const {
  const double pi = std::numbers::pi;
  auto cv = [](const Complex& c) {
    return std::complex<double>(c.re.value(), c.im.value());
  };
  return cv(pi3) * (pi * pi * pi) + cv(pi2) * (pi * pi);
}

RegularizedValue& RegularizedValue::operator+=(const RegularizedValue& o) {
  pi3 += o.pi3;
  pi2 += o.pi2;
  continued = continued || o.continued;
  return *this;
}

ThetaIntegral theta_inner(const HalfAngleExpr& f, const HalfAngleExpr& g,
                          const CosPoly& w, double tol) {
  HalfAngleExpr integrand =
      f.conjugated().times(g, tol).times(weight_expression(w), tol).times(
          sine_measure(), tol);
  return regular_integral(to_sin_expansion(integrand, tol));
}

InnerProductBreakdown inner_product(const Wavefunction& bra, const Wavefunction& ket,
                                    const CosPoly& weight, double tol) {
  InnerProductBreakdown r;
  if (bra.state().m != ket.state().m || !bra.state().n.same(ket.state().n, tol)) {
    r.zero_by_selection = true;
    return r;
  }
  r.aa = pair_value(bra.branch_a(), ket.branch_a(), weight, tol);
  r.ab = pair_value(bra.branch_a(), ket.branch_b(), weight, tol);
  r.ba = pair_value(bra.branch_b(), ket.branch_a(), weight, tol);
  r.bb = pair_value(bra.branch_b(), ket.branch_b(), weight, tol);
  r.total = r.aa;
  r.total += r.ab;
  r.total += r.ba;
  r.total += r.bb;
  return r;
}

InnerProductBreakdown inner_product(const Wavefunction& bra, const Wavefunction& ket) {
  return inner_product(bra, ket, legendre_cos(0));
}

RegularizedValue norm_value(const Wavefunction& psi, double tol) {
  return inner_product(psi, psi, legendre_cos(0), tol).total;
}

ExpectationValue expectation(const Wavefunction& psi, const CosPoly& weight,
                             double tol) {
  InnerProductBreakdown nm = inner_product(psi, psi, legendre_cos(0), tol);
  InnerProductBreakdown wt = inner_product(psi, psi, weight, tol);
  if (nm.total.is_zero()) throw std::domain_error("zero-norm state");
  ExpectationValue ev;
  // The ratio is exact whenever numerator and denominator live in the same
  // single measure unit (all-pi^3 or all-pi^2) with real exact coefficients.
  bool pure_pi3 = nm.total.pi2.is_zero() && wt.total.pi2.is_zero() &&
                  nm.total.pi3.im.is_zero() && wt.total.pi3.im.is_zero();
  bool pure_pi2 = nm.total.pi3.is_zero() && wt.total.pi3.is_zero() &&
                  nm.total.pi2.im.is_zero() && wt.total.pi2.im.is_zero();
  if (pure_pi3 && nm.total.pi3.re.is_exact() && wt.total.pi3.re.is_exact()) {
    ev.exact = true;
    ev.exact_value = wt.total.pi3.re / nm.total.pi3.re;
    ev.value = ev.exact_value.value();
    return ev;
  }
  if (pure_pi2 && nm.total.pi2.re.is_exact() && wt.total.pi2.re.is_exact()) {
    ev.exact = true;
    ev.exact_value = wt.total.pi2.re / nm.total.pi2.re;
    ev.value = ev.exact_value.value();
    return ev;
  }
  std::complex<double> num = wt.total.numeric(), den = nm.total.numeric();
  ev.value = num.real() / den.real();
  return ev;
}

}  // namespace gwd
