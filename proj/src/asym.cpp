#include "esum/asym.hpp"

#include "esum/bernoulli.hpp"

namespace esum {

void AsymSeries::add(int lnpow, int kpow, const ClosedForm& c) {
  if (kpow > qmax_ || c.is_zero()) return;
  Key key{lnpow, kpow};
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

AsymSeries AsymSeries::operator+(const AsymSeries& o) const {
  AsymSeries r(std::min(qmax_, o.qmax_));
  for (const auto& [k, c] : t_) r.add(k.first, k.second, c);
  for (const auto& [k, c] : o.t_) r.add(k.first, k.second, c);
  return r;
}

AsymSeries AsymSeries::operator*(const AsymSeries& o) const {
  AsymSeries r(std::min(qmax_, o.qmax_));
  for (const auto& [ka, ca] : t_) {
    for (const auto& [kb, cb] : o.t_) {
      int q = ka.second + kb.second;
      if (q > r.qmax_) continue;
      r.add(ka.first + kb.first, q, ca * cb);
    }
  }
  return r;
}

AsymSeries AsymSeries::scaled(const ClosedForm& c) const {
  AsymSeries r(qmax_);
  for (const auto& [k, v] : t_) r.add(k.first, k.second, v * c);
  return r;
}

AsymSeries AsymSeries::scaled(const Rational& c) const {
  AsymSeries r(qmax_);
  for (const auto& [k, v] : t_) r.add(k.first, k.second, v.scaled(c));
  return r;
}

AsymSeries AsymSeries::pow(int e) const {
  AsymSeries r = one(qmax_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

AsymSeries AsymSeries::shifted_down(int c) const {
  AsymSeries r(qmax_);
  for (const auto& [k, v] : t_) r.add(k.first, k.second + c, v);
  return r;
}

AsymSeries AsymSeries::at_2k() const {
  AsymSeries r(qmax_);
  const ClosedForm ln2cf = ClosedForm::atom(Atom::ln2());
  for (const auto& [k, v] : t_) {
    int p = k.first;
    int q = k.second;
    Rational scale = Rational::pow2(-q);
    // (L + ln2)^p = sum_j C(p,j) ln2^j L^{p-j}
    ClosedForm ln2pow = ClosedForm::constant(Rational(1));
    for (int j = 0; j <= p; ++j) {
      ClosedForm c = v * ln2pow;
      r.add(p - j, q, c.scaled(binomial(p, j) * scale));
      if (j < p) ln2pow = ln2pow * ln2cf;
    }
  }
  return r;
}

int AsymSeries::min_kpow() const {
  int q = qmax_ + 1;
  for (const auto& [k, v] : t_) q = std::min(q, k.second);
  return q;
}

int AsymSeries::max_kpow() const {
  int q = 0;
  for (const auto& [k, v] : t_) q = std::max(q, k.second);
  return q;
}

AsymSeries AsymSeries::inv_linear(long a, long b, int j, int qmax) {
  AsymSeries r(qmax);
  Rational ainv = Rational(1, a).pow(j);
  Rational ratio = Rational(-b, a);
  Rational rp(1);
  for (int m = 0; j + m <= qmax; ++m) {
    r.add_rational(0, j + m, ainv * binomial(j - 1 + m, m) * rp);
    rp *= ratio;
  }
  return r;
}

AsymSeries AsymSeries::inv_k_times_odd(int qmax) {
  AsymSeries r(qmax);
  Rational c(1, 2);
  for (int m = 0; m + 2 <= qmax; ++m) {
    r.add_rational(0, m + 2, c);
    c *= Rational(1, 2);
  }
  return r;
}

}  // namespace esum
