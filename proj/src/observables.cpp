#include <gwd/observables.hpp>
#include <gwd/coupling.hpp>

#include <cmath>
#include <stdexcept>

namespace gwd {

Scalar g_factor(const Rational& s, const Scalar& n) {
  if (s <= 0) throw std::domain_error("g-factor needs s > 0");
  return Scalar(1) + (n * n) / Scalar(s * (s + 1));
}

Scalar g_factor_from_nsq(const Rational& s, const Scalar& nsq) {
  if (s <= 0) throw std::domain_error("g-factor needs s > 0");
  return Scalar(1) + nsq / Scalar(s * (s + 1));
}

ProjectionForG projection_for_g(const Rational& s, const Rational& g) {
  if (s <= 0) throw std::domain_error("g-factor needs s > 0");
  Rational nsq = s * (s + 1) * (g - 1);
  ProjectionForG out;
  out.imaginary = nsq < 0;
  out.n = Scalar::sqrt_rational(out.imaginary ? -nsq : nsq);
  return out;
}

Scalar expect_cos(const Rational& j, const Scalar& n, const Rational& m) {
  return n * Scalar(m) / Scalar(j * (j + 1));
}

Scalar expect_legendre(const Rational& j, const Scalar& n, const Rational& m, int k) {
  if (k < 0 || k > 4) throw std::domain_error("moments implemented for k <= 4");
  if (Rational(k) > 2 * j) return Scalar(0);
  Scalar internal = internal_cg(j, n, k);
  Scalar external(cg_exact(j, m, Rational(k), 0, j));
  return internal * external;
}

Rational projection_square_sum(const Rational& j) {
  // sum_{m=-j..j} m^2 = j(j+1)(2j+1)/3
  return j * (j + 1) * (2 * j + 1) / 3;
}

Rational projection_square_mean(const Rational& j) { return j * (j + 1) / 3; }

double legendre_value(int k, double x) {
  switch (k) {
    case 0:
      return 1.0;
    case 1:
      return x;
    case 2:
      return (3 * x * x - 1) / 2;
    case 3:
      return x * (5 * x * x - 3) / 2;
    case 4:
      return ((35 * x * x - 30) * x * x + 3) / 8;
    default:
      throw std::domain_error("moments implemented for k <= 4");
  }
}

LegendreComparison compare_classical(const Rational& j, const Scalar& n, const Rational& m,
                                     int k) {
  LegendreComparison out;
  out.quantum = expect_legendre(j, n, m, k);
  double mag = std::sqrt(to_double(j * (j + 1)));
  out.classical = legendre_value(k, n.value() / mag) * legendre_value(k, to_double(m) / mag);
  out.deviation = std::abs(out.quantum.value() - out.classical);
  return out;
}

}  // namespace gwd
