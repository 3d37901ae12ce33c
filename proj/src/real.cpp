#include "esum/real.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>

namespace esum {

std::string PrecReal::to_decimal(long digits) const {
  if (digits <= 0) digits = decimal_digits_for(precision());
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);

  bool neg = !mant.empty() && mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  // mpfr mantissa is 0.d1d2... * 10^e; render as d1.d2... e(e-1)
  std::string out = neg ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) {
    out += ".";
    out += d.substr(1);
  }
  long ee = static_cast<long>(e) - 1;
  if (ee != 0) {
    out += "e";
    out += std::to_string(ee);
  }
  return out;
}

double ulp_distance(const PrecReal& a, const PrecReal& b) {
  PrecReal d = (a - b).abs();
  if (d.is_zero()) return 0.0;
  PrecReal u = a.ulp();
  return (d / u).to_double();
}

}  // namespace esum
