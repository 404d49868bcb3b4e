#include <gwd/scalar.hpp>

#include <cmath>
#include <sstream>

namespace gwd {

void SymbolPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SymbolPoly SymbolPoly::operator-() const {
  SymbolPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

SymbolPoly SymbolPoly::operator+(const SymbolPoly& o) const {
  SymbolPoly r = *this;
  if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
  r.trim();
  return r;
}

SymbolPoly SymbolPoly::operator-(const SymbolPoly& o) const { return *this + (-o); }

SymbolPoly SymbolPoly::operator*(const SymbolPoly& o) const {
  SymbolPoly r;
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.resize(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

std::string SymbolPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k].str();
    } else {
      os << "(" << c_[k].str() << ")*nu";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

[[noreturn]] void mixed_error() {
  throw std::domain_error(
      "arithmetic mixing a symbolic exact value with floating-point data");
}

}  // namespace

Scalar Scalar::operator-() const {
  if (exact_) return Scalar(-poly_);
  return floating(-num_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(poly_ + o.poly_);
  if (is_symbolic() || o.is_symbolic()) mixed_error();
  return floating(value() + o.value());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(poly_ * o.poly_);
  if (is_symbolic() || o.is_symbolic()) mixed_error();
  return floating(value() * o.value());
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (exact_ && o.exact_) {
    if (o.poly_.is_zero()) throw std::domain_error("division by zero");
    if (!o.poly_.is_constant())
      throw std::domain_error("division by a symbolic expression");
    RadicalSum d = o.poly_.constant();
    if (poly_.is_constant()) return Scalar(poly_.constant() / d);
    // Divide each coefficient of the polynomial.
    SymbolPoly r;
    for (int k = poly_.degree(); k >= 0; --k)
      r = r + SymbolPoly(poly_.coeff(k) / d) * pow_symbol(k);
    return Scalar(r);
  }
  if (is_symbolic() || o.is_symbolic()) mixed_error();
  double dv = o.value();
  if (dv == 0.0) throw std::domain_error("division by zero");
  return floating(value() / dv);
}

SymbolPoly Scalar::pow_symbol(int k) {
  SymbolPoly p(Rational(1));
  for (int i = 0; i < k; ++i) p = p * SymbolPoly::symbol();
  return p;
}

Scalar Scalar::sqrt() const {
  if (exact_) {
    if (is_symbolic()) throw std::domain_error("square root of a symbolic expression");
    RadicalSum r = poly_.constant();
    if (r.is_rational()) {
      Rational q = r.rational_value();
      if (q < 0) throw std::domain_error("square root of a negative value");
      return Scalar(RadicalSum::sqrt_of(q));
    }
    double v = r.value();
    if (v < 0) throw std::domain_error("square root of a negative value");
    return floating(std::sqrt(v));
  }
  if (num_ < 0) throw std::domain_error("square root of a negative value");
  return floating(std::sqrt(num_));
}

bool Scalar::operator==(const Scalar& o) const {
  if (exact_ && o.exact_) return poly_ == o.poly_;
  if (is_symbolic() || o.is_symbolic()) return false;
  return value() == o.value();
}

bool Scalar::same(const Scalar& o, double tol) const {
  if (exact_ && o.exact_) return poly_ == o.poly_;
  if (is_symbolic() || o.is_symbolic()) return false;
  return std::abs(value() - o.value()) <= tol;
}

std::optional<long> Scalar::integer_difference(const Scalar& o, double tol) const {
  if (exact_ && o.exact_) {
    SymbolPoly d = poly_ - o.poly_;
    if (!d.is_constant()) return std::nullopt;
    RadicalSum c = d.constant();
    if (!c.is_rational()) return std::nullopt;
    Rational q = c.rational_value();
    if (!is_integer(q)) return std::nullopt;
    return to_long(q);
  }
  if (is_symbolic() || o.is_symbolic()) return std::nullopt;
  double d = value() - o.value();
  double r = std::round(d);
  if (std::abs(d - r) > tol) return std::nullopt;
  return static_cast<long>(r);
}

std::optional<long> Scalar::as_integer(double tol) const {
  return integer_difference(Scalar(0), tol);
}

std::string Scalar::str() const {
  if (exact_) return poly_.str();
  std::ostringstream os;
  os.precision(17);
  os << num_;
  return os.str();
}

std::string Complex::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return "(" + im.str() + ")*i";
  return "(" + re.str() + ") + (" + im.str() + ")*i";
}

}  // namespace gwd
