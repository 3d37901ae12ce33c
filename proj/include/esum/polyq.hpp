#ifndef ESUM_POLYQ_HPP
#define ESUM_POLYQ_HPP

#include <string>
#include <vector>

#include "esum/rational.hpp"

namespace esum {

// Dense univariate polynomial with exact rational coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }
  static Poly linear(Rational a0, Rational a1) { return Poly({std::move(a0), std::move(a1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
  }
  const Rational& lead() const { return c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& q) const;
  Poly operator-() const { return scaled(Rational(-1)); }

  // division with remainder; b nonzero
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  static Poly gcd(Poly a, Poly b);

  Rational eval(const Rational& x) const;
  std::string str() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Quotient of polynomials, reduced and with monic denominator.
class RatFunc {
public:
  RatFunc() : num_(), den_(Rational(1)) {}
  explicit RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc reciprocal() const { return RatFunc(den_, num_); }

  Rational eval(const Rational& x) const;
  std::string str() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  Poly num_, den_;
};

}  // namespace esum

#endif
