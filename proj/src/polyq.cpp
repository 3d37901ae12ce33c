#include "esum/polyq.hpp"

#include <stdexcept>

namespace esum {

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  size_t n = std::max(a.c_.size(), b.c_.size());
  r.c_.resize(n, Rational(0));
  for (size_t i = 0; i < n; ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  size_t n = std::max(a.c_.size(), b.c_.size());
  r.c_.resize(n, Rational(0));
  for (size_t i = 0; i < n; ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Poly Poly::scaled(const Rational& q) const {
  if (q.is_zero()) return Poly();
  Poly r = *this;
  for (auto& c : r.c_) c *= q;
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  quot = Poly();
  rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational factor = rem.lead() / b.lead();
    Poly mono;
    mono.c_.assign(static_cast<size_t>(shift) + 1, Rational(0));
    mono.c_.back() = factor;
    quot = quot + mono;
    rem = rem - mono * b;
  }
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(a.lead().reciprocal());  // monic
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (!s.empty()) s += " + ";
    s += c_[i].str();
    if (i == 1) s += "*i";
    if (i > 1) s += "*i^" + std::to_string(i);
  }
  return s;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  // monic denominator
  Rational lead = den_.lead();
  num_ = num_.scaled(lead.reciprocal());
  den_ = den_.scaled(lead.reciprocal());
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
  return num_.eval(x) / d;
}

std::string RatFunc::str() const {
  if (den_ == Poly(Rational(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace esum
