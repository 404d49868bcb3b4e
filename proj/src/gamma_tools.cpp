#include <gwd/gamma_tools.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gwd {

namespace {
constexpr double kPi = std::numbers::pi;
}

double sinpi(double x) {
  // Reduce to |r| <= 1 before scaling by pi to keep full precision for
  // large arguments; hit the quarter-period lattice exactly.
  double r = x - 2.0 * std::round(x / 2.0);
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

double cospi(double x) {
  double r = std::abs(x - 2.0 * std::round(x / 2.0));
  if (r == 0.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0) return -1.0;
  return std::cos(kPi * r);
}

SignedLogGamma log_gamma_signed(double z) {
  if (z > 0) return {std::lgamma(z), 1};
  if (z == std::floor(z)) return {std::numeric_limits<double>::infinity(), 0};
  // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
  double s = sinpi(z);
  double log_abs = std::log(kPi) - std::log(std::abs(s)) - std::lgamma(1.0 - z);
  return {log_abs, s > 0 ? 1 : -1};
}

double rgamma(double z) {
  SignedLogGamma g = log_gamma_signed(z);
  if (g.sign == 0) return 0.0;
  return g.sign * std::exp(-g.log_abs);
}

double gamma_fn(double z) {
  SignedLogGamma g = log_gamma_signed(z);
  if (g.sign == 0) throw std::domain_error("Gamma evaluated at a pole");
  return g.sign * std::exp(g.log_abs);
}

double c4_integral(double a, double b, double g, double d) {
  double s = a + b + g + d;
  if (!(s > 3.0))
    throw std::domain_error("two-sided Gamma integral requires a+b+g+d > 3");
  return gamma_fn(s - 3.0) * rgamma(a + b - 1.0) * rgamma(b + g - 1.0) *
         rgamma(g + d - 1.0) * rgamma(d + a - 1.0);
}

}  // namespace gwd
