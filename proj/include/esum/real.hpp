#ifndef ESUM_REAL_HPP
#define ESUM_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "esum/rational.hpp"

namespace esum {

inline constexpr long kMinPrecision = 64;

// Arbitrary-precision real with an explicit mantissa precision.  All
// operations round to nearest-even; binary operations carry the larger of
// the two operand precisions, so identical operand sequences reproduce
// bit-identical results across runs.  Backed by MPFR.
class PrecReal {
public:
  PrecReal() : PrecReal(kMinPrecision) {}
  explicit PrecReal(long precision_bits) {
    check_prec(precision_bits);
    mpfr_init2(x_, precision_bits);
    mpfr_set_zero(x_, 1);
  }

  static PrecReal from_long(long v, long prec) {
    PrecReal r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
  }
  static PrecReal from_rational(const Rational& q, long prec) {
    PrecReal r(prec);
    mpfr_set_q(r.x_, q.raw(), MPFR_RNDN);
    return r;
  }
  // Decimal strings parse straight to the target precision; no double round-trip.
  static PrecReal from_decimal(const std::string& s, long prec) {
    PrecReal r(prec);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0 && !looks_numeric(s))
      throw std::invalid_argument("PrecReal: cannot parse '" + s + "'");
    return r;
  }

  PrecReal(const PrecReal& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  PrecReal(PrecReal&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  PrecReal& operator=(const PrecReal& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  PrecReal& operator=(PrecReal&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~PrecReal() { mpfr_clear(x_); }

  long precision() const { return mpfr_get_prec(x_); }

  PrecReal with_precision(long prec) const {
    check_prec(prec);
    PrecReal r(prec);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
  }

  friend PrecReal operator+(const PrecReal& a, const PrecReal& b) {
    PrecReal r(join(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend PrecReal operator-(const PrecReal& a, const PrecReal& b) {
    PrecReal r(join(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend PrecReal operator*(const PrecReal& a, const PrecReal& b) {
    PrecReal r(join(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend PrecReal operator/(const PrecReal& a, const PrecReal& b) {
    if (mpfr_zero_p(b.x_)) throw std::domain_error("PrecReal: division by zero");
    PrecReal r(join(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  PrecReal operator-() const {
    PrecReal r(precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
  }
  PrecReal& operator+=(const PrecReal& b) {
    if (precision() >= b.precision()) {
      mpfr_add(x_, x_, b.x_, MPFR_RNDN);
      return *this;
    }
    return *this = *this + b;
  }
  PrecReal& operator-=(const PrecReal& b) {
    if (precision() >= b.precision()) {
      mpfr_sub(x_, x_, b.x_, MPFR_RNDN);
      return *this;
    }
    return *this = *this - b;
  }
  PrecReal& operator*=(const PrecReal& b) {
    if (precision() >= b.precision()) {
      mpfr_mul(x_, x_, b.x_, MPFR_RNDN);
      return *this;
    }
    return *this = *this * b;
  }

  PrecReal abs() const {
    PrecReal r(precision());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
  }
  PrecReal pow_int(long e) const {
    PrecReal r(precision());
    if (e >= 0) {
      mpfr_pow_ui(r.x_, x_, static_cast<unsigned long>(e), MPFR_RNDN);
    } else {
      mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    }
    return r;
  }
  PrecReal ln() const {
    PrecReal r(precision());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
  }
  PrecReal exp() const {
    PrecReal r(precision());
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r;
  }
  PrecReal sqrt() const {
    PrecReal r(precision());
    mpfr_sqrt(r.x_, x_, MPFR_RNDN);
    return r;
  }
  PrecReal mul_2exp(long e) const {
    PrecReal r(precision());
    if (e >= 0)
      mpfr_mul_2ui(r.x_, x_, static_cast<unsigned long>(e), MPFR_RNDN);
    else
      mpfr_div_2ui(r.x_, x_, static_cast<unsigned long>(-e), MPFR_RNDN);
    return r;
  }

  friend bool operator==(const PrecReal& a, const PrecReal& b) {
    return mpfr_cmp(a.x_, b.x_) == 0;
  }
  friend bool operator!=(const PrecReal& a, const PrecReal& b) { return !(a == b); }
  friend bool operator<(const PrecReal& a, const PrecReal& b) {
    return mpfr_cmp(a.x_, b.x_) < 0;
  }
  friend bool operator>(const PrecReal& a, const PrecReal& b) { return b < a; }
  friend bool operator<=(const PrecReal& a, const PrecReal& b) { return !(b < a); }
  friend bool operator>=(const PrecReal& a, const PrecReal& b) { return !(a < b); }

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  int sgn() const { return mpfr_sgn(x_); }
  bool bit_identical(const PrecReal& b) const {
    if (precision() != b.precision()) return false;
    if (is_zero() && b.is_zero()) return true;
    return mpfr_cmp(x_, b.x_) == 0 && mpfr_get_exp(x_) == mpfr_get_exp(b.x_);
  }

  // One unit in the last place of this value (for nonzero values).
  PrecReal ulp() const {
    PrecReal r(precision());
    if (is_zero()) {
      mpfr_set_ui_2exp(r.x_, 1, -precision(), MPFR_RNDN);
      return r;
    }
    mpfr_set_ui_2exp(r.x_, 1, mpfr_get_exp(x_) - precision(), MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  long exponent() const { return is_zero() ? mpfr_get_emin() : mpfr_get_exp(x_); }

  // Scientific notation with an explicit digit count; round-trips at the
  // stored precision when digits >= ceil(prec*log10(2)) + 2.
  std::string to_decimal(long digits = 0) const;
  std::string round_trip_string() const {
    return to_decimal(decimal_digits_for(precision()));
  }

  static long decimal_digits_for(long prec) {
    // 1 + ceil(prec * log10(2)): enough for exact binary->decimal->binary.
    return 2 + static_cast<long>(prec * 0.30102999566398119521 + 1.0);
  }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

private:
  static void check_prec(long p) {
    if (p < kMinPrecision)
      throw std::invalid_argument("PrecReal: precision must be >= 64 bits");
  }
  static long join(const PrecReal& a, const PrecReal& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
  }
  static bool looks_numeric(const std::string& s) {
    return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' ||
                          s[0] == '+' || s[0] == '.');
  }

  mpfr_t x_;
};

// |a - b| measured in ulps of a (a nonzero).
double ulp_distance(const PrecReal& a, const PrecReal& b);

}  // namespace esum

#endif
