#include <gwd/sin_expansion.hpp>

#include <cmath>

namespace gwd {

namespace {

// Rational function  num(x) / ((1+x)^p (1-x)^q)  in x = cos(theta).
struct RatX {
  CosPoly num;
  long p = 0, q = 0;
  bool empty = true;
};

CosPoly one_plus_sx_power(int s, long k) {
  CosPoly r(Complex(Scalar(1)));
  CosPoly base;
  base.set_coeff(0, Complex(Scalar(1)));
  base.set_coeff(1, Complex(Scalar(s)));
  for (long i = 0; i < k; ++i) r = r * base;
  return r;
}

// Adds  coeff * u^{e1} v^{e2}  with u = (1+x)/2, v = (1-x)/2 to acc.
void ratx_add(RatX& acc, const Complex& coeff, long e1, long e2) {
  CosPoly term(coeff);
  long tp = 0, tq = 0;
  Rational scale = 1;
  if (e1 >= 0) {
    term = term * one_plus_sx_power(+1, e1);
    for (long i = 0; i < e1; ++i) scale /= 2;
  } else {
    tp = -e1;
    for (long i = 0; i < -e1; ++i) scale *= 2;
  }
  if (e2 >= 0) {
    term = term * one_plus_sx_power(-1, e2);
    for (long i = 0; i < e2; ++i) scale /= 2;
  } else {
    tq = -e2;
    for (long i = 0; i < -e2; ++i) scale *= 2;
  }
  term = term * Complex(Scalar(scale));
  if (acc.empty) {
    acc.num = term;
    acc.p = tp;
    acc.q = tq;
    acc.empty = false;
    return;
  }
  long np = std::max(acc.p, tp), nq = std::max(acc.q, tq);
  acc.num = acc.num * one_plus_sx_power(+1, np - acc.p) *
            one_plus_sx_power(-1, nq - acc.q);
  term = term * one_plus_sx_power(+1, np - tp) * one_plus_sx_power(-1, nq - tq);
  acc.num = acc.num + term;
  acc.p = np;
  acc.q = nq;
}

Complex eval_pm(const CosPoly& p, int s) {
  // p(s) for s = +-1, exactly.
  Complex v;
  Scalar sign(1);
  for (int k = 0; k <= p.degree(); ++k) {
    v += p.coeff(k) * sign;
    sign = sign * Scalar(s);
  }
  return v;
}

bool complex_small(const Complex& c, double tol) {
  if (c.re.is_exact() && c.im.is_exact()) return c.is_zero();
  return std::abs(c.re.value()) <= tol && std::abs(c.im.value()) <= tol;
}

// Expands acc = num/(1-x^2)^M into channels of 1/sin^(2k) plus a polynomial.
// parity_shift = 0 stores channels at even orders 2k; parity_shift = 1 means
// the whole object is multiplied by sin(theta), lowering each order by one.
void expand_ratx(RatX acc, int parity_shift, SinExpansion& out, double tol) {
  if (acc.empty) return;
  // Cancel factors shared with the denominator.
  while (acc.p > 0 && complex_small(eval_pm(acc.num, -1), tol)) {
    acc.num = acc.num.divide_linear(+1, tol);
    --acc.p;
  }
  while (acc.q > 0 && complex_small(eval_pm(acc.num, +1), tol)) {
    acc.num = acc.num.divide_linear(-1, tol);
    --acc.q;
  }
  long M = std::max(acc.p, acc.q);
  acc.num = acc.num * one_plus_sx_power(+1, M - acc.p) *
            one_plus_sx_power(-1, M - acc.q);
  // num/(1-x^2)^M: peel one channel per power of sin^2.
  for (long k = M; k >= 1; --k) {
    Complex r0, r1;
    acc.num.fold(r0, r1);
    int order = static_cast<int>(2 * k) - parity_shift;
    if (!complex_small(r0, 0) || !complex_small(r1, 0)) {
      auto& ch = out.channels[order];
      ch.a += r0;
      ch.b += r1;
    }
    CosPoly rem;
    rem.set_coeff(0, r0);
    rem.set_coeff(1, r1);
    acc.num = (acc.num - rem).divide_one_minus_x2();
  }
  if (parity_shift == 0)
    out.regular_even = out.regular_even + acc.num;
  else
    out.regular_odd = out.regular_odd + acc.num;
}

}  // namespace

SinExpansion to_sin_expansion(const HalfAngleExpr& expr, double tol) {
  RatX even_part, odd_part;
  for (auto& t : expr.terms()) {
    auto a = t.cos_pow.as_integer(tol);
    auto b = t.sin_pow.as_integer(tol);
    if (!a || !b)
      throw std::domain_error(
          "integrand has non-integer half-angle exponents; "
          "analytic continuation is required for this case");
    bool ae = (*a % 2 == 0), be = (*b % 2 == 0);
    if (ae && be) {
      ratx_add(even_part, t.coeff, *a / 2, *b / 2);
    } else if (!ae && !be) {
      // c^a s^b = (cs) c^{a-1} s^{b-1} = (sin/2) u^{(a-1)/2} v^{(b-1)/2}
      ratx_add(odd_part, t.coeff * Scalar(Rational(1, 2)), (*a - 1) / 2,
               (*b - 1) / 2);
    } else {
      throw std::domain_error("integrand monomial with mixed exponent parity");
    }
  }
  SinExpansion out;
  expand_ratx(std::move(even_part), 0, out, tol);
  expand_ratx(std::move(odd_part), 1, out, tol);
  return out;
}

std::complex<double> SinExpansion::evaluate(double theta) const {
  double x = std::cos(theta), s = std::sin(theta);
  auto cv = [](const Complex& c) {
    return std::complex<double>(c.re.value(), c.im.value());
  };
  std::complex<double> v = 0;
  for (auto& [order, ch] : channels)
    v += (cv(ch.a) + cv(ch.b) * x) / std::pow(s, order);
  v += regular_even.evaluate(x);
  v += s * regular_odd.evaluate(x);
  return v;
}

bool SinExpansion::has_divergence() const { return !channels.empty(); }

ThetaIntegral regular_integral(const SinExpansion& e) {
  ThetaIntegral r;
  for (int k = 0; k <= e.regular_even.degree(); k += 2) {
    Rational w(double_factorial(k - 1), double_factorial(k));
    r.pi_coeff += e.regular_even.coeff(k) * Scalar(w);
  }
  for (int k = 0; k <= e.regular_odd.degree(); k += 2)
    r.plain += e.regular_odd.coeff(k) * Scalar(Rational(2, k + 1));
  return r;
}

}  // namespace gwd
