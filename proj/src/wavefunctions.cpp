#include <gwd/wavefunctions.hpp>

#include <cmath>

namespace gwd {

namespace {

Complex quarter_phase(int sign) {
  // e^{+- i pi/4} = (sqrt2/2)(1 +- i), kept exact.
  Scalar h(RadicalSum::sqrt_term(Rational(1, 2), 2));
  return Complex(h, sign > 0 ? h : -h);
}

void check_labels(const Rational& j, const Rational& m) {
  if (j < 0 || !is_half_integer(j))
    throw std::domain_error("j must be a nonnegative half-integer");
  if (!is_integer(j - m))
    throw std::domain_error("m must differ from j by an integer");
  Rational am = m < 0 ? Rational(-m) : m;
  if (am > j + 1) throw std::domain_error("|m| may not exceed j + 1");
}

}  // namespace

Scalar Wavefunction::ladder_norm(const Rational& j, const Rational& m, int dir) {
  Rational arg = j * (j + 1) - m * (m + dir);
  if (arg < 0) throw std::domain_error("ladder step outside the multiplet");
  return Scalar::sqrt_rational(arg);
}

Wavefunction Wavefunction::build(const Rational& j, const Scalar& n,
                                 const Rational& m) {
  check_labels(j, m);
  Scalar js(j);
  HalfAngleExpr a =
      HalfAngleExpr::monomial(quarter_phase(+1), js + n, js - n);  // at m = +j
  HalfAngleExpr b =
      HalfAngleExpr::monomial(quarter_phase(-1), js - n, js + n);  // at m = -j

  Rational target = m;  // interior label both branches walk to
  if (target > j) target = j;
  if (target < -j) target = Rational(-j);
  Rational ma = j;  // current label of branch A
  while (ma > target) {
    a = a.apply_ladder(n, ma, -1).normalized();
    a = a.scaled(Complex(Scalar(1) / ladder_norm(j, ma, -1)));
    ma -= 1;
  }
  Rational mb = -j;
  while (mb < target) {
    b = b.apply_ladder(n, mb, +1).normalized();
    b = b.scaled(Complex(Scalar(1) / ladder_norm(j, mb, +1)));
    mb += 1;
  }
  if (m > j) {
    // Edge state above the multiplet: one raw raising step (the interior
    // normalization factor vanishes here).
    a = a.apply_ladder(n, j, +1).normalized();
    b = b.apply_ladder(n, j, +1).normalized();
  } else if (m < -j) {
    a = a.apply_ladder(n, -j, -1).normalized();
    b = b.apply_ladder(n, -j, -1).normalized();
  }
  return Wavefunction({j, n, m}, std::move(a), std::move(b));
}

bool Wavefunction::at_edge() const {
  Rational am = st_.m < 0 ? Rational(-st_.m) : st_.m;
  return am == st_.j + 1;
}

Wavefunction Wavefunction::ladder(int dir) const {
  if (is_null()) return *this;
  Rational mt = st_.m + dir;
  Rational amt = mt < 0 ? Rational(-mt) : mt;
  if (amt > st_.j + 1)
    throw std::domain_error("ladder step beyond the edge states");
  bool inward_from_edge = at_edge() && amt <= st_.j;
  bool onto_edge = amt == st_.j + 1;
  HalfAngleExpr a = a_.apply_ladder(st_.n, st_.m, dir).normalized();
  HalfAngleExpr b = b_.apply_ladder(st_.n, st_.m, dir).normalized();
  if (!inward_from_edge && !onto_edge) {
    Scalar nn = ladder_norm(st_.j, st_.m, dir);
    a = a.scaled(Complex(Scalar(1) / nn));
    b = b.scaled(Complex(Scalar(1) / nn));
  }
  // Inward steps from the edge annihilate the state; the raw application
  // above already came out zero, so the result is the null wavefunction.
  return Wavefunction({st_.j, st_.n, mt}, std::move(a), std::move(b));
}

Wavefunction Wavefunction::spin_inverted() const {
  return build(st_.j, -st_.n, st_.m);
}

std::complex<double> Wavefunction::evaluate_branch(int branch, double theta) const {
  return branch == 0 ? a_.evaluate(theta) : b_.evaluate(theta);
}

std::complex<double> Wavefunction::evaluate(double phi, double theta,
                                            double chi) const {
  std::complex<double> th = a_.evaluate(theta) + b_.evaluate(theta);
  std::complex<double> iunit(0, 1);
  return std::exp(iunit * (to_double(st_.m) * phi)) * th *
         std::exp(iunit * (st_.n.value() * chi));
}

}  // namespace gwd
