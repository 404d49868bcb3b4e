#include <gwd/radical.hpp>

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <sstream>

namespace gwd {

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) return std::nullopt;
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!is_int(a) || !is_int(b)) return std::nullopt;
    BigInt d(b);
    if (d == 0) return std::nullopt;
    return Rational(BigInt(a), d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string a = s.substr(0, dot), b = s.substr(dot + 1);
    if (a.empty() || a == "+" || a == "-") a += "0";
    if (!is_int(a) || b.empty()) return std::nullopt;
    for (char c : b)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    BigInt scale = 1;
    for (size_t i = 0; i < b.size(); ++i) scale *= 10;
    BigInt whole(a);
    BigInt frac(b);
    bool neg = (s[0] == '-');
    BigInt total = (neg ? -whole : whole) * scale + frac;
    return Rational(neg ? -total : total, scale);
  }
  if (!is_int(s)) return std::nullopt;
  return Rational(BigInt(s));
}

std::pair<BigInt, BigInt> extract_square(BigInt n) {
  if (n <= 0) throw std::domain_error("extract_square needs a positive integer");
  BigInt s = 1, d = 1;
  for (BigInt p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) d *= p;
  }
  // Whatever remains has only large prime factors; it may still be a square.
  if (n > 1) {
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n)
      s *= r;
    else
      d *= n;
  }
  return {s, d};
}

void RadicalSum::add_term(const BigInt& d, const Rational& q) {
  if (q == 0) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_[d] = q;
  } else {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

RadicalSum RadicalSum::sqrt_term(const Rational& q, const BigInt& d) {
  if (d <= 0) throw std::domain_error("radicand must be positive");
  auto [s, sf] = extract_square(d);
  RadicalSum r;
  r.add_term(sf, q * s);
  return r;
}

RadicalSum RadicalSum::sqrt_of(const Rational& q) {
  if (q < 0) throw std::domain_error("square root of a negative rational");
  if (q == 0) return RadicalSum();
  // sqrt(a/b) = sqrt(a*b)/b
  BigInt m = num(q) * den(q);
  auto [s, d] = extract_square(m);
  return sqrt_term(Rational(s, den(q)), d);
}

Rational RadicalSum::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::domain_error("irrational value: " + str());
  return terms_.begin()->second;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum r;
  for (auto& [d, q] : terms_) r.terms_[d] = -q;
  return r;
}

RadicalSum RadicalSum::operator+(const RadicalSum& o) const {
  RadicalSum r = *this;
  for (auto& [d, q] : o.terms_) r.add_term(d, q);
  return r;
}

RadicalSum RadicalSum::operator-(const RadicalSum& o) const {
  RadicalSum r = *this;
  for (auto& [d, q] : o.terms_) r.add_term(d, -q);
  return r;
}

RadicalSum RadicalSum::operator*(const RadicalSum& o) const {
  RadicalSum r;
  for (auto& [d1, q1] : terms_) {
    for (auto& [d2, q2] : o.terms_) {
      // sqrt(d1)*sqrt(d2) = g*sqrt(a*b) with g = gcd, a = d1/g, b = d2/g
      // where a*b is squarefree because d1, d2 are.
      BigInt g = boost::multiprecision::gcd(d1, d2);
      r.add_term((d1 / g) * (d2 / g), q1 * q2 * g);
    }
  }
  return r;
}

RadicalSum RadicalSum::operator/(const RadicalSum& o) const {
  if (o.terms_.empty()) throw std::domain_error("division by zero");
  RadicalSum numr = *this;
  RadicalSum denr = o;
  // Rationalize: while the denominator has an irrational part, pick a prime p
  // appearing in some radicand, split den = A + sqrt(p)*B, and multiply both
  // sides by A - sqrt(p)*B.  The new denominator A^2 - p*B^2 no longer
  // involves sqrt(p), so the loop terminates.
  while (!denr.is_rational()) {
    BigInt p = 0;
    for (auto& [d, q] : denr.terms_) {
      if (d == 1) continue;
      for (BigInt c = 2; c * c <= d && p == 0; c == 2 ? c = 3 : c += 2)
        if (d % c == 0) p = c;
      if (p == 0) p = d;  // d itself prime
      break;
    }
    RadicalSum a, b;  // denr = a + sqrt(p)*b
    for (auto& [d, q] : denr.terms_) {
      if (d % p == 0)
        b.add_term(d / p, q);
      else
        a.add_term(d, q);
    }
    RadicalSum sqrtp = sqrt_term(1, p);
    RadicalSum conj = a - sqrtp * b;
    numr = numr * conj;
    denr = denr * conj;
  }
  Rational dv = denr.rational_value();
  if (dv == 0) throw std::domain_error("division by zero after rationalization");
  RadicalSum r;
  for (auto& [d, q] : numr.terms_) r.add_term(d, q / dv);
  return r;
}

double RadicalSum::value() const {
  double v = 0;
  for (auto& [d, q] : terms_) v += to_double(q) * std::sqrt(d.convert_to<double>());
  return v;
}

std::string RadicalSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, q] : terms_) {
    Rational aq = q < 0 ? Rational(-q) : q;
    if (!first)
      os << (q < 0 ? " - " : " + ");
    else if (q < 0)
      os << "-";
    first = false;
    if (d == 1) {
      os << to_string(aq);
    } else {
      if (aq != 1) os << to_string(aq) << "*";
      os << "sqrt(" << d.str() << ")";
    }
  }
  return os.str();
}

}  // namespace gwd
