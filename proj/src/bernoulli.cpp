#include "esum/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace esum {

namespace {
constexpr int kMaxBernoulli = 40;

std::vector<Rational> build_table() {
  std::vector<Rational> b(kMaxBernoulli + 1, Rational(0));
  b[0] = Rational(1);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1
  for (int m = 1; m <= kMaxBernoulli; ++m) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[j];
    b[m] = -acc / binomial(m + 1, m);
  }
  return b;
}
}  // namespace

const Rational& bernoulli(int n) {
  static const std::vector<Rational> table = build_table();
  if (n < 0 || n > kMaxBernoulli)
    throw std::out_of_range("bernoulli: index outside precomputed range 0..40");
  return table[static_cast<size_t>(n)];
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  if (k > n - k) k = n - k;
  Rational r(1);
  for (long j = 1; j <= k; ++j) r *= Rational(n - k + j, j);
  return r;
}

Rational rising(long n, long m) {
  Rational r(1);
  for (long j = 0; j < m; ++j) r *= Rational(n + j);
  return r;
}

}  // namespace esum
