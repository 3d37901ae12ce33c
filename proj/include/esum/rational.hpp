#ifndef ESUM_RATIONAL_HPP
#define ESUM_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace esum {

// Exact arbitrary-size rational, always in lowest terms with positive
// denominator.  Thin RAII wrapper over GMP's mpq_t.
class Rational {
public:
  Rational() { mpq_init(q_); }
  Rational(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    mpq_init(q_);
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
  }
  // Accepts "n", "-n", "n/d".
  explicit Rational(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0) {
      mpq_clear(q_);
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q_)) == 0) {
      mpq_clear(q_);
      throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q_);
  }

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sgn() const { return mpq_sgn(q_); }
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  // this^e with e possibly negative (then *this must be nonzero)
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long ue = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), ue);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), ue);
    if (inv) {
      if (is_zero()) throw std::domain_error("Rational: 0^negative");
      mpq_inv(r.q_, r.q_);
    }
    return r;
  }
  static Rational pow2(long e) { return Rational(2).pow(e); }  // 2^e

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
  }

  std::string str() const {
    char* c = mpq_get_str(nullptr, 10, q_);
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
  }
  std::string num_str() const {
    char* c = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
  }
  double to_double() const { return mpq_get_d(q_); }

  bool fits_long() const {
    return mpz_fits_slong_p(mpq_numref(q_)) && mpz_cmp_ui(mpq_denref(q_), 1) == 0;
  }
  long to_long() const { return mpz_get_si(mpq_numref(q_)); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  const mpq_t& raw() const { return q_; }

private:
  mpq_t q_;
};

inline Rational inv_of(long n) { return Rational(1, n); }

}  // namespace esum

#endif
