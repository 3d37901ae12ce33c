#ifndef ESUM_ASYM_HPP
#define ESUM_ASYM_HPP

#include <map>
#include <utility>

#include "esum/expr.hpp"

namespace esum {

// Truncated asymptotic series in 1/k with log factors:
//   sum over (p,q) of  c_{p,q} (ln k)^p / k^q,
// coefficients exact ClosedForms over {zeta, ln2, gamma} atoms.
// Terms with q > qmax are dropped on every operation.
class AsymSeries {
public:
  using Key = std::pair<int, int>;  // (lnpow p, kpow q)

  explicit AsymSeries(int qmax) : qmax_(qmax) {}

  int qmax() const { return qmax_; }
  const std::map<Key, ClosedForm>& terms() const { return t_; }
  bool empty() const { return t_.empty(); }

  void add(int lnpow, int kpow, const ClosedForm& c);
  void add_rational(int lnpow, int kpow, const Rational& c) {
    add(lnpow, kpow, ClosedForm::constant(c));
  }

  AsymSeries operator+(const AsymSeries& o) const;
  AsymSeries operator*(const AsymSeries& o) const;
  AsymSeries scaled(const ClosedForm& c) const;
  AsymSeries scaled(const Rational& c) const;
  AsymSeries pow(int e) const;

  // Multiply by k^{-c}.
  AsymSeries shifted_down(int c) const;

  // Substitute k -> 2k: (ln k)^p -> (ln k + ln 2)^p, k^{-q} -> 2^{-q} k^{-q}.
  AsymSeries at_2k() const;

  // Lowest k-power present (qmax+1 when empty).
  int min_kpow() const;
  // Highest k-power present.
  int max_kpow() const;

  static AsymSeries one(int qmax) {
    AsymSeries s(qmax);
    s.add_rational(0, 0, Rational(1));
    return s;
  }

  // Expansion of (a k + b)^{-j} for integer a >= 1: a^{-j} sum_m
  // binom(j-1+m, m) (-b/a)^m k^{-j-m}.
  static AsymSeries inv_linear(long a, long b, int j, int qmax);

  // Expansion of 1/(k(2k-1)) = sum_m 2^{-m-1} k^{-m-2}.
  static AsymSeries inv_k_times_odd(int qmax);

private:
  int qmax_;
  std::map<Key, ClosedForm> t_;
};

}  // namespace esum

#endif
