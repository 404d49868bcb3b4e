#include <gwd/coupling.hpp>
#include <gwd/gamma_tools.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gwd {

namespace {

constexpr double kPi = std::numbers::pi;

long rational_long(const Rational& r) {
  if (!is_integer(r)) throw std::logic_error("expected an integer rational");
  return to_long(r);
}

Rational fact_r(const Rational& r) {
  long v = rational_long(r);
  if (v < 0) throw std::logic_error("factorial of a negative integer");
  return Rational(factorial(v));
}

// True when j - x is (numerically) an integer, i.e. x sits on the projection
// lattice of spin j; the lattice value is returned through `out`.
bool on_lattice(const Rational& j, double x, Rational& out) {
  double r = to_double(j) - x;
  double rr = std::round(r);
  if (std::abs(r - rr) < 1e-9) {
    out = j - Rational(static_cast<long long>(rr));
    return true;
  }
  return false;
}

}  // namespace

bool triangle_ok(const Rational& j1, const Rational& j2, const Rational& j3) {
  if (j1 < 0 || j2 < 0 || j3 < 0) return false;
  if (!is_integer(j1 + j2 + j3)) return false;
  if (j3 > j1 + j2) return false;
  Rational lo = j1 - j2;
  if (lo < 0) lo = -lo;
  return j3 >= lo;
}

RadicalSum cg_exact(const Rational& j1, const Rational& m1, const Rational& j2,
                    const Rational& m2, const Rational& j3) {
  RadicalSum zero;
  if (!triangle_ok(j1, j2, j3)) return zero;
  if (!is_integer(j1 - m1) || !is_integer(j2 - m2)) return zero;
  Rational m3 = m1 + m2;
  if (m1 > j1 || -m1 > j1 || m2 > j2 || -m2 > j2 || m3 > j3 || -m3 > j3) return zero;

  Rational delta = fact_r(j1 + j2 - j3) * fact_r(j1 - j2 + j3) * fact_r(j2 + j3 - j1) /
                   fact_r(j1 + j2 + j3 + 1);
  Rational fac = (2 * j3 + 1) * delta * fact_r(j1 + m1) * fact_r(j1 - m1) *
                 fact_r(j2 + m2) * fact_r(j2 - m2) * fact_r(j3 + m3) * fact_r(j3 - m3);

  long lo = 0;
  lo = std::max(lo, -rational_long(j3 - j2 + m1));
  lo = std::max(lo, -rational_long(j3 - j1 - m2));
  long hi = rational_long(j1 + j2 - j3);
  hi = std::min(hi, rational_long(j1 - m1));
  hi = std::min(hi, rational_long(j2 + m2));

  Rational sum = 0;
  for (long t = lo; t <= hi; ++t) {
    Rational den = fact_r(Rational(t)) * fact_r(j1 + j2 - j3 - t) * fact_r(j1 - m1 - t) *
                   fact_r(j2 + m2 - t) * fact_r(j3 - j2 + m1 + t) * fact_r(j3 - j1 - m2 + t);
    Rational term = Rational(1) / den;
    if (t % 2 != 0) term = -term;
    sum += term;
  }
  return RadicalSum::sqrt_of(fac) * RadicalSum(sum);
}

namespace {

struct ContTerm {
  double log_abs;
  int sign;
};

// Shared evaluation of the continued coefficient.  Returns the pieces of
//   cg^2 = (2 j3 + 1) * Delta * G * S^2
// where G is the signed product over Gamma(j_i +- x_i + 1) and S the t-sum
// with reciprocal-Gamma denominators (zero at poles).
struct ContParts {
  double delta_log;
  double g_log;
  int g_sign;      // 0 marks a pole in G
  double s_scale;  // log scale L
  double s_sum;    // sum of sign * exp(log - L); S = s_sum * exp(s_scale)
  bool all_terms_zero;
};

ContParts continued_parts(const Rational& j1, double x1, const Rational& j2, double x2,
                          const Rational& j3) {
  ContParts out{};
  double x3 = x1 + x2;
  double dj1 = to_double(j1), dj2 = to_double(j2), dj3 = to_double(j3);

  out.delta_log = std::lgamma(rational_long(j1 + j2 - j3) + 1.0) +
                  std::lgamma(rational_long(j1 - j2 + j3) + 1.0) +
                  std::lgamma(rational_long(j2 + j3 - j1) + 1.0) -
                  std::lgamma(rational_long(j1 + j2 + j3) + 2.0);

  out.g_log = 0.0;
  out.g_sign = 1;
  int g_poles = 0;
  const double gargs[6] = {dj1 + x1 + 1, dj1 - x1 + 1, dj2 + x2 + 1,
                           dj2 - x2 + 1, dj3 + x3 + 1, dj3 - x3 + 1};
  for (double a : gargs) {
    SignedLogGamma lg = log_gamma_signed(a);
    if (lg.sign == 0) {
      ++g_poles;
    } else {
      out.g_log += lg.log_abs;
      out.g_sign *= lg.sign;
    }
  }
  if (g_poles > 0) out.g_sign = 0;

  long T = rational_long(j1 + j2 - j3);
  std::vector<ContTerm> terms;
  for (long t = 0; t <= T; ++t) {
    double log_den = std::lgamma(t + 1.0) + std::lgamma(T - t + 1.0);
    int sign = (t % 2 == 0) ? 1 : -1;
    bool zero = false;
    const double dargs[4] = {dj1 - x1 - t + 1, dj2 + x2 - t + 1,
                             dj3 - dj2 + x1 + t + 1, dj3 - dj1 - x2 + t + 1};
    for (double a : dargs) {
      SignedLogGamma lg = log_gamma_signed(a);
      if (lg.sign == 0) {
        zero = true;
        break;
      }
      log_den += lg.log_abs;
      sign *= lg.sign;
    }
    if (zero) continue;
    terms.push_back({-log_den, sign});
  }

  out.all_terms_zero = terms.empty();
  if (terms.empty()) {
    out.s_scale = 0.0;
    out.s_sum = 0.0;
    return out;
  }
  double L = terms[0].log_abs;
  for (const ContTerm& t : terms) L = std::max(L, t.log_abs);
  double s = 0.0;
  for (const ContTerm& t : terms) s += t.sign * std::exp(t.log_abs - L);
  out.s_scale = L;
  out.s_sum = s;
  return out;
}

}  // namespace

double cg_sq_continuous(const Rational& j1, double x1, const Rational& j2, double x2,
                        const Rational& j3) {
  if (!triangle_ok(j1, j2, j3)) return 0.0;
  Rational r1, r2;
  if (on_lattice(j1, x1, r1) && on_lattice(j2, x2, r2)) {
    double v = cg_exact(j1, r1, j2, r2, j3).value();
    return v * v;
  }
  ContParts p = continued_parts(j1, x1, j2, x2, j3);
  if (p.g_sign == 0) {
    // A pole of the Gamma product can only arise on a one-sided lattice
    // point beyond the spin range, where every sum term carries a stronger
    // reciprocal-Gamma zero; the limit is 0.
    if (!p.all_terms_zero) throw std::logic_error("unbalanced Gamma pole in continued coefficient");
    return 0.0;
  }
  if (p.s_sum == 0.0) return 0.0;
  double log_abs = std::log(2.0 * to_double(j3) + 1.0) + p.delta_log + p.g_log +
                   2.0 * (p.s_scale + std::log(std::abs(p.s_sum)));
  return p.g_sign * std::exp(log_abs);
}

double cg_continuous(const Rational& j1, double x1, const Rational& j2, double x2,
                     const Rational& j3) {
  if (!triangle_ok(j1, j2, j3)) return 0.0;
  Rational r1, r2;
  if (on_lattice(j1, x1, r1) && on_lattice(j2, x2, r2))
    return cg_exact(j1, r1, j2, r2, j3).value();
  ContParts p = continued_parts(j1, x1, j2, x2, j3);
  if (p.g_sign == 0) {
    if (!p.all_terms_zero) throw std::logic_error("unbalanced Gamma pole in continued coefficient");
    return 0.0;
  }
  if (p.g_sign < 0)
    throw std::domain_error("continued coefficient is imaginary here (negative Gamma product)");
  if (p.s_sum == 0.0) return 0.0;
  double log_abs = 0.5 * (std::log(2.0 * to_double(j3) + 1.0) + p.delta_log + p.g_log) +
                   p.s_scale + std::log(std::abs(p.s_sum));
  double sign = (p.s_sum > 0) ? 1.0 : -1.0;
  return sign * std::exp(log_abs);
}

Scalar spin_magnitude(const Rational& j) { return Scalar::sqrt_rational(j * (j + 1)); }

Scalar internal_cg(const Rational& j, const Scalar& n, int k) {
  if (k < 0 || k > 4) throw std::domain_error("body-frame coefficient implemented for k <= 4");
  if (Rational(k) > 2 * j) throw std::domain_error("body-frame coefficient requires k <= 2j");
  if (k == 0) return Scalar(1);

  const Rational half(1, 2);
  Rational jj = j * (j + 1);
  Scalar c1 = n / Scalar::sqrt_rational(jj);  // cos(theta_n) = n / sqrt(j(j+1))
  Scalar c2 = (n * n) / Scalar(jj);

  switch (k) {
    case 1:
      return c1;
    case 2: {
      Rational pre2 = jj / ((j - half) * (j + 3 * half));
      Scalar p2 = (Scalar(3) * c2 - Scalar(1)) / Scalar(2);
      return Scalar::sqrt_rational(pre2) * p2;
    }
    case 3: {
      Rational den = (j - 1) * (j - half) * (j + 3 * half) * (j + 2);
      Scalar pre = Scalar(jj) / Scalar::sqrt_rational(den);
      Scalar p3 = c1 * (Scalar(5) * c2 - Scalar(3)) / Scalar(2);
      Scalar bracket = p3 + c1 / Scalar(2 * jj);
      return pre * bracket;
    }
    default: {  // k == 4
      Rational den = (j - 3 * half) * (j - 1) * (j - half) * (j + 3 * half) * (j + 2) *
                     (j + 5 * half);
      Scalar pre = Scalar::sqrt_rational(jj * jj * jj / den);
      Scalar p4 = (Scalar(35) * c2 * c2 - Scalar(30) * c2 + Scalar(3)) / Scalar(8);
      Scalar bracket = p4 + (Scalar(25) * c2 - Scalar(6)) / Scalar(8 * jj);
      return pre * bracket;
    }
  }
}

TripleProduct triple_product(const Rational& j1, const Scalar& n1, const Rational& m1,
                             const Rational& j2, const Scalar& n2, const Rational& m2,
                             const Rational& j3) {
  TripleProduct out;
  out.external = Scalar(cg_exact(j1, m1, j2, m2, j3));

  Scalar internal;
  bool have_internal = false;
  // Body-frame factor: when one constituent carries no internal projection and
  // the composite keeps the spin of the other, the coefficient is the
  // single-system <j n, k 0 | j n> family.
  if (n2.is_zero() && j3 == j1 && is_integer(j2) && j2 <= 4 && Rational(2) * j1 >= j2) {
    internal = internal_cg(j1, n1, static_cast<int>(to_long(j2)));
    have_internal = true;
  } else if (n1.is_zero() && j3 == j2 && is_integer(j1) && j1 <= 4 && Rational(2) * j2 >= j1) {
    internal = internal_cg(j2, n2, static_cast<int>(to_long(j1)));
    if (to_long(j1) % 2 != 0) internal = Scalar(0) - internal;  // exchange phase (-1)^(j1+j2-j3)
    have_internal = true;
  }
  if (!have_internal && n1.is_exact() && n2.is_exact() && n1.is_rational() && n2.is_rational()) {
    Rational rn1 = n1.rational(), rn2 = n2.rational();
    if (is_integer(j1 - rn1) && is_integer(j2 - rn2)) {
      internal = Scalar(cg_exact(j1, rn1, j2, rn2, j3));
      have_internal = true;
    }
  }
  if (!have_internal)
    internal = Scalar::floating(cg_continuous(j1, n1.value(), j2, n2.value(), j3));

  out.internal = internal;
  out.ratio = out.external * internal;
  out.value = out.ratio / Scalar(2 * j3 + 1);
  out.exact = out.external.is_exact() && internal.is_exact();
  return out;
}

// ---------------------------------------------------------------------------
// rms couplings: adaptive core quadrature plus exact oscillatory tails.
// ---------------------------------------------------------------------------

PatternInfo pattern_info(RmsPattern p) {
  const Rational half(1, 2);
  switch (p) {
    case RmsPattern::HalvesToOneStretched:
      return {half, half, 1, std::sqrt(2.0), "stretched-halves", std::sqrt(2.0) / 2.0};
    case RmsPattern::HalvesToOneZero:
      return {half, half, 1, 0.0, "vector-halves", 0.0};
    case RmsPattern::HalvesToZero:
      return {half, half, 0, 0.0, "scalar-halves", 0.0};
    default:
      return {1, 1, 0, 0.0, "scalar-ones", 0.0};
  }
}

std::optional<RmsPattern> parse_pattern(const std::string& token) {
  std::string t;
  for (char c : token) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "vector-halves" || t == "a") return RmsPattern::HalvesToOneZero;
  if (t == "stretched-halves" || t == "b") return RmsPattern::HalvesToOneStretched;
  if (t == "scalar-halves" || t == "c") return RmsPattern::HalvesToZero;
  if (t == "scalar-ones" || t == "d") return RmsPattern::OnesToZero;
  return std::nullopt;
}

double quasiprob_density(RmsPattern p, double x) {
  PatternInfo info = pattern_info(p);
  return cg_sq_continuous(info.j1, x, info.j2, info.n3 - x, info.j3);
}

namespace {

using Poly = std::vector<double>;  // coefficient of x^k at index k

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_flip(const Poly& a) {  // a(-x)
  Poly out = a;
  for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

// Polynomial whose reciprocal (times the half-period trig factor over pi)
// equals 1/[Gamma(j+1+x) Gamma(j+1-x)]:
//   integer j:      x * prod_{r=1..j} (r^2 - x^2)
//   half-integer j: prod_{r=1/2,3/2,..,j} (r^2 - x^2)
Poly gamma_pair_poly(const Rational& j) {
  Poly out{1.0};
  if (is_integer(j)) {
    out = Poly{0.0, 1.0};  // x
    for (long r = 1; r <= to_long(j); ++r)
      out = poly_mul(out, Poly{static_cast<double>(r) * r, 0.0, -1.0});
  } else {
    for (Rational r(1, 2); r <= j; r += 1) {
      double rv = to_double(r);
      out = poly_mul(out, Poly{rv * rv, 0.0, -1.0});
    }
  }
  return out;
}

Poly poly_shift_reflect(const Poly& p, double n3) {  // q(x) = p(n3 - x)
  Poly out(p.size(), 0.0);
  // (n3 - x)^k expanded by repeated multiplication
  Poly pw{1.0};
  for (size_t k = 0; k < p.size(); ++k) {
    for (size_t i = 0; i < pw.size(); ++i) out[i] += p[k] * pw[i];
    pw = poly_mul(pw, Poly{n3, -1.0});
  }
  return out;
}

struct TailSpec {
  Poly num, den;          // B(x) = num/den, valid for |x| beyond every root of den
  double r0, r1, r2;      // density = (r0 + r1 cos 2 pi x + r2 sin 2 pi x) B(x)
  double max_pole;
};

TailSpec make_tail(const Rational& j1, const Rational& j2, double n3, const Poly& q) {
  TailSpec spec;
  Poly p1 = gamma_pair_poly(j1);
  Poly p2 = poly_shift_reflect(gamma_pair_poly(j2), n3);
  spec.num = q;
  spec.den = poly_mul(p1, p2);
  for (double& c : spec.den) c *= kPi * kPi;
  spec.max_pole = std::max(to_double(j1), std::abs(n3) + to_double(j2));

  double s = sinpi(n3), c = cospi(n3);
  bool sin1 = is_integer(j1), sin2 = is_integer(j2);
  if (sin1 && sin2) {  // sin(pi x) sin(pi(n3-x)) = [cos(2 pi x - pi n3) - cos(pi n3)]/2
    spec.r0 = -c / 2;
    spec.r1 = c / 2;
    spec.r2 = s / 2;
  } else if (!sin1 && !sin2) {  // cos cos
    spec.r0 = c / 2;
    spec.r1 = c / 2;
    spec.r2 = s / 2;
  } else if (sin1) {  // sin cos
    spec.r0 = s / 2;
    spec.r1 = -s / 2;
    spec.r2 = c / 2;
  } else {  // cos sin
    spec.r0 = s / 2;
    spec.r1 = s / 2;
    spec.r2 = -c / 2;
  }
  return spec;
}

// Coefficients c[k] of num/den = sum_k c[k] x^{-k} for large x.
std::vector<double> inverse_power_series(const Poly& num, const Poly& den, int kmax) {
  int dn = static_cast<int>(num.size()) - 1;
  while (dn > 0 && num[dn] == 0.0) --dn;
  int dd = static_cast<int>(den.size()) - 1;
  while (dd > 0 && den[dd] == 0.0) --dd;
  int gap = dd - dn;
  std::vector<double> c(kmax + 1, 0.0);
  if (gap > kmax) return c;
  int terms = kmax - gap;
  std::vector<double> nr(terms + 1, 0.0), dr(terms + 1, 0.0), a(terms + 1, 0.0);
  for (int i = 0; i <= terms; ++i) {
    if (dn - i >= 0) nr[i] = num[dn - i];
    if (dd - i >= 0) dr[i] = den[dd - i];
  }
  for (int i = 0; i <= terms; ++i) {
    double v = nr[i];
    for (int j = 0; j < i; ++j) v -= a[j] * dr[i - j];
    a[i] = v / dr[0];
  }
  for (int i = 0; i <= terms; ++i) c[gap + i] = a[i];
  return c;
}

struct OscMoments {
  std::vector<double> C, S;  // integrals over [X, inf) of cos/sin(2 pi x) x^{-k}
};

// Downward recursion at integer X (all boundary trig terms vanish/simplify).
OscMoments osc_moments(long big_x, int kmax) {
  int ktop = kmax + 26;
  OscMoments m;
  m.C.assign(ktop + 2, 0.0);
  m.S.assign(ktop + 2, 0.0);
  for (int k = ktop; k >= 1; --k) {
    m.S[k] = std::pow(static_cast<double>(big_x), -k) / (2 * kPi) - k / (2 * kPi) * m.C[k + 1];
    m.C[k] = k / (2 * kPi) * m.S[k + 1];
  }
  return m;
}

// Integral of the tail representation over [X, inf) and (-inf, -X].
double tail_integral(const TailSpec& spec, long big_x, int kmax) {
  OscMoments m = osc_moments(big_x, kmax);
  double X = static_cast<double>(big_x);

  auto side = [&](const Poly& num, const Poly& den, double r0, double r1, double r2) {
    std::vector<double> c = inverse_power_series(num, den, kmax);
    double total = 0.0;
    for (int k = 2; k <= kmax; ++k) {
      if (c[k] == 0.0) continue;
      total += r0 * c[k] * std::pow(X, 1.0 - k) / (k - 1.0);
      total += r1 * c[k] * m.C[k];
      total += r2 * c[k] * m.S[k];
    }
    return total;
  };

  double right = side(spec.num, spec.den, spec.r0, spec.r1, spec.r2);
  // x -> -x: cos even, sin odd
  double left = side(poly_flip(spec.num), poly_flip(spec.den), spec.r0, spec.r1, -spec.r2);
  return right + left;
}

double tail_series_remainder(const TailSpec& spec, long big_x, int kmax) {
  // crude bound: geometric ratio of the series at k = kmax
  double ratio = spec.max_pole / static_cast<double>(big_x);
  std::vector<double> c = inverse_power_series(spec.num, spec.den, kmax);
  double last = std::abs(c[kmax]) * std::pow(static_cast<double>(big_x), 1.0 - kmax);
  return 2.0 * last * ratio / std::max(1e-30, 1.0 - ratio);
}

// --- Gauss-Kronrod 7/15 adaptive quadrature ---

const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

template <typename F>
void gk15(const F& f, double a, double b, double& result, double& err) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    double fa = f(c - h * kXgk[i]);
    double fb = f(c + h * kXgk[i]);
    res_k += kWgk[i] * (fa + fb);
    if (i % 2 == 1) res_g += kWg[i / 2] * (fa + fb);
  }
  result = res_k * h;
  err = std::abs(res_k - res_g) * h;
}

template <typename F>
double adaptive_quad(const F& f, double a, double b, double tol, double& err_out, int depth = 0) {
  double r, e;
  gk15(f, a, b, r, e);
  if (e < tol || depth >= 48) {
    err_out += e;
    return r;
  }
  double c = 0.5 * (a + b);
  return adaptive_quad(f, a, c, tol / 2, err_out, depth + 1) +
         adaptive_quad(f, c, b, tol / 2, err_out, depth + 1);
}

struct RmsSetup {
  Rational j1, j2, j3;
  double n3;
  Poly q;
  std::optional<double> closed;
};

// Constant prefactor of the single-term (j3 = j1 + j2) continued square:
//   cg^2(x) = pref / [G(j1+1+x)G(j1+1-x)G(j2+1+n3-x)G(j2+1-n3+x)]
double top_coupling_prefactor(const Rational& j1, const Rational& j2, double n3) {
  Rational j3 = j1 + j2;
  double lg = std::lgamma(rational_long(2 * j1) + 1.0) +
              std::lgamma(rational_long(2 * j2) + 1.0) -
              std::lgamma(rational_long(2 * j3) + 1.0) +
              std::lgamma(to_double(j3) + 1.0 + n3) + std::lgamma(to_double(j3) + 1.0 - n3);
  return std::exp(lg);
}

RmsSetup rms_setup(RmsPattern p) {
  PatternInfo info = pattern_info(p);
  RmsSetup s;
  s.j1 = info.j1;
  s.j2 = info.j2;
  s.j3 = info.j3;
  s.n3 = info.n3;
  switch (p) {
    case RmsPattern::HalvesToOneStretched: {
      double pref = top_coupling_prefactor(s.j1, s.j2, s.n3);
      s.q = Poly{pref};
      s.closed = pref * c4_integral(1.5, 1.5, 1.5 - std::sqrt(2.0), 1.5 + std::sqrt(2.0));
      break;
    }
    case RmsPattern::HalvesToOneZero: {
      double pref = top_coupling_prefactor(s.j1, s.j2, 0.0);  // = 1/2
      s.q = Poly{pref};
      s.closed = pref * c4_integral(1.5, 1.5, 1.5, 1.5);
      break;
    }
    case RmsPattern::HalvesToZero: {
      s.q = Poly{0.0, 0.0, 2.0};  // 2 x^2
      // 2x^2/[G(3/2+x)G(3/2-x)]^2 split by x = (x+1/2) - 1/2 twice:
      s.closed = -2.0 * c4_integral(1.5, 1.5, 0.5, 0.5) + c4_integral(1.5, 1.5, 0.5, 1.5) +
                 c4_integral(1.5, 1.5, 1.5, 0.5) - 0.5 * c4_integral(1.5, 1.5, 1.5, 1.5);
      break;
    }
    default: {  // OnesToZero
      s.q = Poly{1.0 / 3.0, 0.0, -2.0, 0.0, 3.0};  // (1 - 3x^2)^2 / 3
      s.closed = std::nullopt;
      break;
    }
  }
  return s;
}

RmsResult rms_from_setup(const RmsSetup& s) {
  TailSpec spec = make_tail(s.j1, s.j2, s.n3, s.q);
  long X = std::lround(std::ceil(std::max({8.0, spec.max_pole + 4.0, 1.6 * spec.max_pole})));
  const int kmax = 64;

  auto density = [&](double x) { return cg_sq_continuous(s.j1, x, s.j2, s.n3 - x, s.j3); };
  double core_err = 0.0;
  double core = adaptive_quad(density, -static_cast<double>(X), static_cast<double>(X), 1e-13,
                              core_err);
  double tails = tail_integral(spec, X, kmax);

  RmsResult out;
  out.integral = core + tails;
  out.error_estimate = core_err + tail_series_remainder(spec, X, kmax);
  out.rms = std::sqrt(std::max(0.0, out.integral));
  out.closed_form = s.closed;
  return out;
}

}  // namespace

RmsResult rms_pattern(RmsPattern p) { return rms_from_setup(rms_setup(p)); }

RmsResult rms_stretched(const Rational& j1, const Rational& j2) {
  if (j1 < 0 || j2 < 0 || !is_integer(2 * j1) || !is_integer(2 * j2))
    throw std::domain_error("spins must be nonnegative half-integers");
  Rational j3 = j1 + j2;
  double n3 = std::sqrt(to_double(j3 * (j3 + 1)));
  RmsSetup s;
  s.j1 = j1;
  s.j2 = j2;
  s.j3 = j3;
  s.n3 = n3;
  double pref = top_coupling_prefactor(j1, j2, n3);
  s.q = Poly{pref};
  double dj1 = to_double(j1), dj2 = to_double(j2);
  s.closed = pref * c4_integral(dj1 + 1, dj1 + 1, dj2 + 1 - n3, dj2 + 1 + n3);
  return rms_from_setup(s);
}

double quasiprob_area(RmsPattern p) { return rms_pattern(p).integral; }

// ---------------------------------------------------------------------------
// rotation matrices from the large-j2 coupling limit
// ---------------------------------------------------------------------------

double cg_large_j2(const Rational& j1, const Rational& m1, double j2, double m2,
                   const Rational& nu) {
  if (!is_integer(j1 - m1) || !is_integer(j1 - nu))
    throw std::domain_error("labels must be on the projection lattice");
  if (m1 > j1 || -m1 > j1 || nu > j1 || -nu > j1)
    throw std::domain_error("projection out of range");
  double dj1 = to_double(j1), dm1 = to_double(m1), dnu = to_double(nu);
  double j3 = j2 + dnu, m3 = m2 + dm1;

  long A = rational_long(j1 - nu);  // j1 + j2 - j3
  double delta_log = std::lgamma(A + 1.0) + std::lgamma(rational_long(j1 + nu) + 1.0) +
                     std::lgamma(2 * j2 + dnu - dj1 + 1.0) - std::lgamma(dj1 + j2 + j3 + 2.0);
  double pref = 0.5 * (std::log(2 * j3 + 1) + delta_log + std::lgamma(dj1 + dm1 + 1) +
                       std::lgamma(dj1 - dm1 + 1) + std::lgamma(j2 + m2 + 1) +
                       std::lgamma(j2 - m2 + 1) + std::lgamma(j3 + m3 + 1) +
                       std::lgamma(j3 - m3 + 1));

  long lo = std::max(0L, -rational_long(nu + m1));
  long hi = std::min(A, rational_long(j1 - m1));
  double sum = 0.0;
  for (long t = lo; t <= hi; ++t) {
    double log_den = std::lgamma(t + 1.0) + std::lgamma(A - t + 1.0) +
                     std::lgamma(rational_long(j1 - m1) - t + 1.0) +
                     std::lgamma(j2 + m2 - t + 1.0) +
                     std::lgamma(rational_long(nu + m1) + t + 1.0) +
                     std::lgamma(j2 + dnu - dj1 - m2 + t + 1.0);
    double term = std::exp(pref - log_den);
    sum += (t % 2 == 0) ? term : -term;
  }
  return sum;
}

double asymptotic_rotation(const Rational& j, const Rational& m, const Rational& nu,
                           double theta, long j2) {
  if (m > j || -m > j || nu > j || -nu > j)
    throw std::domain_error("projection out of range");
  if (theta < 1e-12) return (m == nu) ? 1.0 : 0.0;
  if (theta > kPi - 1e-12) {
    if (m != -nu) return 0.0;
    return (rational_long(j - nu) % 2 == 0) ? 1.0 : -1.0;
  }
  double ct = std::cos(theta);
  std::array<double, 3> h{}, v{};
  long jj = j2;
  for (int i = 0; i < 3; ++i) {
    double dj2 = static_cast<double>(jj);
    h[i] = 1.0 / dj2;
    v[i] = cg_large_j2(j, m, dj2, dj2 * ct, nu);
    jj /= 2;
  }
  // Neville extrapolation to h = 0
  for (int k = 1; k < 3; ++k)
    for (int i = 0; i < 3 - k; ++i)
      v[i] = (h[i + k] * v[i] - h[i] * v[i + 1]) / (h[i + k] - h[i]);
  // The coupling limit carries (-1)^{j-nu} relative to the rotation matrix
  // element d^j_{m nu}; strip it so the endpoints and interior agree.
  double sign = (rational_long(j - nu) % 2 == 0) ? 1.0 : -1.0;
  return sign * v[0];
}

}  // namespace gwd
