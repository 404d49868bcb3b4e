#include <gwd/halfangle.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gwd {

namespace {

std::complex<double> cval(const Complex& c) { return {c.re.value(), c.im.value()}; }

// Zero-test of a coefficient: structural for exact values, tolerance for
// floating ones.
bool complex_small(const Complex& c, double tol) {
  if (c.re.is_exact() && c.im.is_exact()) return c.is_zero();
  return std::abs(c.re.value()) <= tol && std::abs(c.im.value()) <= tol;
}

bool odd_parity(long v) { return (v & 1L) != 0; }

Rational binomial(long n, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

// ((1 + s*x)/2)^k as an exact polynomial.
CosPoly half_shift_power(int s, long k) {
  CosPoly p(Complex(Scalar(1)));
  CosPoly base;
  base.set_coeff(0, Complex(Scalar(Rational(1, 2))));
  base.set_coeff(1, Complex(Scalar(Rational(s, 2))));
  for (long i = 0; i < k; ++i) p = p * base;
  return p;
}

}  // namespace

CosPoly CosPoly::monomial(const Complex& c, int k) {
  CosPoly p;
  p.set_coeff(k, c);
  return p;
}

void CosPoly::set_coeff(size_t k, const Complex& c) {
  if (k >= c_.size()) c_.resize(k + 1);
  c_[k] = c;
  trim();
}

void CosPoly::trim(double tol) {
  while (!c_.empty() && complex_small(c_.back(), tol) && c_.back().is_zero())
    c_.pop_back();
}

CosPoly CosPoly::operator+(const CosPoly& o) const {
  CosPoly r = *this;
  if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
  r.trim();
  return r;
}

CosPoly CosPoly::operator-(const CosPoly& o) const { return *this + o * Complex(Scalar(-1)); }

CosPoly CosPoly::operator*(const CosPoly& o) const {
  CosPoly r;
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.resize(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

CosPoly CosPoly::operator*(const Complex& s) const {
  CosPoly r = *this;
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

std::complex<double> CosPoly::evaluate(double x) const {
  std::complex<double> v = 0;
  for (size_t k = c_.size(); k-- > 0;) v = v * x + cval(c_[k]);
  return v;
}

CosPoly CosPoly::divide_linear(int s, double tol) const {
  if (c_.empty()) return CosPoly();
  // Synthetic division by (x - r0) with r0 = -s, then flip sign for s = -1
  // because (1 - x) = -(x - 1).
  Scalar r0(-s);
  std::vector<Complex> b(c_.size() > 0 ? c_.size() - 1 : 0);
  Complex carry;  // running remainder accumulator
  for (size_t k = c_.size(); k-- > 0;) {
    if (k == c_.size() - 1) {
      carry = c_[k];
    } else {
      carry = c_[k] + carry * r0;
    }
    if (k > 0)
      b[k - 1] = carry;
  }
  if (!complex_small(carry, tol))
    throw std::domain_error("polynomial not divisible by (1 " +
                            std::string(s > 0 ? "+" : "-") + " x)");
  CosPoly q;
  q.c_ = std::move(b);
  if (s < 0)
    for (auto& c : q.c_) c = -c;
  q.trim();
  return q;
}

void CosPoly::fold(Complex& r0, Complex& r1) const {
  r0 = Complex();
  r1 = Complex();
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k % 2 == 0)
      r0 += c_[k];
    else
      r1 += c_[k];
  }
}

CosPoly CosPoly::divide_one_minus_x2() const {
  // Assumes (p mod (1 - x^2)) has been removed: p_k = q_k - q_{k-2}.
  if (c_.size() < 3) return CosPoly();
  std::vector<Complex> q(c_.size() - 2);
  for (size_t k = c_.size(); k-- > 2;) {
    Complex above = (k < q.size()) ? q[k] : Complex();
    q[k - 2] = above - c_[k];
  }
  CosPoly r;
  r.c_ = std::move(q);
  r.trim();
  return r;
}

std::string CosPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].str() << ")";
    if (k == 1) os << "*x";
    if (k > 1) os << "*x^" << k;
  }
  return os.str();
}

CosPoly legendre_cos(int k) {
  auto c = [](long n, long d) { return Complex(Scalar(Rational(n, d))); };
  CosPoly p;
  switch (k) {
    case 0:
      p.set_coeff(0, c(1, 1));
      break;
    case 1:
      p.set_coeff(1, c(1, 1));
      break;
    case 2:
      p.set_coeff(0, c(-1, 2));
      p.set_coeff(2, c(3, 2));
      break;
    case 3:
      p.set_coeff(1, c(-3, 2));
      p.set_coeff(3, c(5, 2));
      break;
    case 4:
      p.set_coeff(0, c(3, 8));
      p.set_coeff(2, c(-30, 8));
      p.set_coeff(4, c(35, 8));
      break;
    default:
      throw std::domain_error("Legendre weight implemented for k <= 4");
  }
  return p;
}

HalfAngleExpr HalfAngleExpr::monomial(const Complex& coeff, const Scalar& cos_pow,
                                      const Scalar& sin_pow) {
  HalfAngleExpr e;
  e.add({coeff, cos_pow, sin_pow});
  return e;
}

void HalfAngleExpr::add(const HalfAngleTerm& t, double tol) {
  if (t.coeff.is_zero()) return;
  for (auto& u : terms_) {
    if (u.cos_pow.same(t.cos_pow, tol) && u.sin_pow.same(t.sin_pow, tol)) {
      u.coeff += t.coeff;
      if (u.coeff.is_zero()) {
        u = terms_.back();
        terms_.pop_back();
      }
      return;
    }
  }
  terms_.push_back(t);
}

HalfAngleExpr HalfAngleExpr::operator+(const HalfAngleExpr& o) const {
  HalfAngleExpr r = *this;
  for (auto& t : o.terms_) r.add(t);
  return r;
}

HalfAngleExpr HalfAngleExpr::operator-(const HalfAngleExpr& o) const {
  return *this + o.scaled(Complex(Scalar(-1)));
}

HalfAngleExpr HalfAngleExpr::scaled(const Complex& c) const {
  HalfAngleExpr r;
  for (auto& t : terms_) r.add({t.coeff * c, t.cos_pow, t.sin_pow});
  return r;
}

HalfAngleExpr HalfAngleExpr::conjugated() const {
  HalfAngleExpr r;
  for (auto& t : terms_) r.add({t.coeff.conj(), t.cos_pow, t.sin_pow});
  return r;
}

HalfAngleExpr HalfAngleExpr::times(const HalfAngleExpr& o, double tol) const {
  HalfAngleExpr r;
  for (auto& t : terms_)
    for (auto& u : o.terms_)
      r.add({t.coeff * u.coeff, t.cos_pow + u.cos_pow, t.sin_pow + u.sin_pow}, tol);
  return r;
}

HalfAngleExpr HalfAngleExpr::apply_ladder(const Scalar& n, const Rational& m,
                                          int dir) const {
  // Acting on cos^a sin^b (as the theta part of a state with labels m, n):
  //   (1/2) [ n cos^{a-1} sin^{b-1}
  //           + (-m + dir*b) cos^{a+1} sin^{b-1}
  //           + ( m - dir*a) cos^{a-1} sin^{b+1} ]
  Scalar ms(m);
  Scalar d(dir);
  Scalar half(Rational(1, 2));
  HalfAngleExpr r;
  for (auto& t : terms_) {
    const Scalar& a = t.cos_pow;
    const Scalar& b = t.sin_pow;
    r.add({t.coeff * (n * half), a - Scalar(1), b - Scalar(1)});
    r.add({t.coeff * ((-ms + d * b) * half), a + Scalar(1), b - Scalar(1)});
    r.add({t.coeff * ((ms - d * a) * half), a - Scalar(1), b + Scalar(1)});
  }
  return r;
}

std::complex<double> HalfAngleExpr::evaluate(double theta) const {
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  std::complex<double> v = 0;
  for (auto& t : terms_)
    v += cval(t.coeff) * std::pow(c, t.cos_pow.value()) * std::pow(s, t.sin_pow.value());
  return v;
}

std::vector<MonomialClass> HalfAngleExpr::decompose(double tol) const {
  struct Member {
    const HalfAngleTerm* t;
    long da, db;
  };
  struct Working {
    Scalar a0, b0;
    std::vector<Member> members;
  };
  std::vector<Working> classes;
  for (auto& t : terms_) {
    bool placed = false;
    for (auto& w : classes) {
      auto da = t.cos_pow.integer_difference(w.a0, tol);
      auto db = t.sin_pow.integer_difference(w.b0, tol);
      if (da && db && !odd_parity(*da + *db)) {
        w.members.push_back({&t, *da, *db});
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({t.cos_pow, t.sin_pow, {{&t, 0, 0}}});
  }

  std::vector<MonomialClass> out;
  for (auto& w : classes) {
    long min_da = w.members[0].da, min_db = w.members[0].db;
    for (auto& m : w.members) {
      min_da = std::min(min_da, m.da);
      min_db = std::min(min_db, m.db);
    }
    // All members share the parity of (da + db); if the offsets from the
    // anchor come out odd, shift the sin anchor down by one so every offset
    // pair is (even, even) or (odd, odd).
    if (odd_parity((w.members[0].da - min_da) + (w.members[0].db - min_db))) --min_db;
    MonomialClass mc{w.a0 + Scalar(min_da), w.b0 + Scalar(min_db), CosPoly(), CosPoly()};
    for (auto& m : w.members) {
      long Da = m.da - min_da, Db = m.db - min_db;
      CosPoly contrib = half_shift_power(+1, Da / 2) * half_shift_power(-1, Db / 2);
      if (!odd_parity(Da) && !odd_parity(Db)) {
        mc.even = mc.even + contrib * m.t->coeff;
      } else if (odd_parity(Da) && odd_parity(Db)) {
        mc.odd = mc.odd + contrib * m.t->coeff;
      } else {
        throw std::logic_error("exponent parity mix inside a monomial class");
      }
    }
    out.push_back(std::move(mc));
  }
  return out;
}

bool HalfAngleExpr::is_zero(double tol) const {
  for (auto& mc : decompose(tol)) {
    for (int k = 0; k <= mc.even.degree(); ++k)
      if (!complex_small(mc.even.coeff(k), tol)) return false;
    for (int k = 0; k <= mc.odd.degree(); ++k)
      if (!complex_small(mc.odd.coeff(k), tol)) return false;
  }
  return true;
}

bool HalfAngleExpr::equivalent(const HalfAngleExpr& o, double tol) const {
  return (*this - o).is_zero(tol);
}

namespace {

void emit_poly(HalfAngleExpr& out, const CosPoly& p, const Scalar& base_a,
               const Scalar& base_b, double tol) {
  // x^k = (cos^2 - sin^2)^k expanded binomially.
  for (int k = 0; k <= p.degree(); ++k) {
    const Complex& pk = p.coeff(k);
    if (complex_small(pk, tol)) continue;
    for (long r = 0; r <= k; ++r) {
      Rational sign = (k - r) % 2 ? Rational(-1) : Rational(1);
      Complex c = pk * Scalar(binomial(k, r) * sign);
      out.add({c, base_a + Scalar(2 * r), base_b + Scalar(2 * (k - r))}, tol);
    }
  }
}

}  // namespace

HalfAngleExpr HalfAngleExpr::normalized(double tol) const {
  HalfAngleExpr out;
  for (auto& mc : decompose(tol)) {
    emit_poly(out, mc.even, mc.alpha, mc.beta, tol);
    emit_poly(out, mc.odd, mc.alpha + Scalar(1), mc.beta + Scalar(1), tol);
  }
  return out;
}

std::string HalfAngleExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.str() << ")*c^(" << t.cos_pow.str() << ")*s^("
       << t.sin_pow.str() << ")";
  }
  return os.str();
}

HalfAngleExpr weight_expression(const CosPoly& w) {
  HalfAngleExpr out;
  emit_poly(out, w, Scalar(0), Scalar(0), kTol);
  return out;
}

HalfAngleExpr sine_measure() {
  return HalfAngleExpr::monomial(Complex(Scalar(2)), Scalar(1), Scalar(1));
}

}  // namespace gwd
