#include "esum/harmonic.hpp"

#include "esum/bernoulli.hpp"

namespace esum {

Rational harmonic_exact(HarmonicKind kind, long k) {
  if (k < 0) throw std::invalid_argument("harmonic_exact: k must be >= 0");
  Rational v(0);
  for (long i = 1; i <= k; ++i) v += harmonic_increment(kind, i);
  return v;
}

Rational harmonic_increment(HarmonicKind kind, long k_next) {
  long base = kind.is_full() ? k_next : 2 * k_next - 1;
  return Rational(1, base).pow(kind.order);
}

void HarmonicStreamReal::advance() {
  ++k_;
  long base = kind_.is_full() ? k_ : 2 * k_ - 1;
  mpfr_set_si(tmp_.raw(), base, MPFR_RNDN);
  mpfr_pow_ui(tmp_.raw(), tmp_.raw(), static_cast<unsigned long>(kind_.order), MPFR_RNDN);
  mpfr_ui_div(tmp_.raw(), 1, tmp_.raw(), MPFR_RNDN);
  mpfr_add(v_.raw(), v_.raw(), tmp_.raw(), MPFR_RNDN);
}

Rational odd_from_full(int n, const Rational& H2k, const Rational& Hk) {
  return H2k - Hk * Rational::pow2(-n);
}

PrecReal odd_from_full(int n, const PrecReal& H2k, const PrecReal& Hk) {
  return H2k - Hk.mul_2exp(-n);
}

namespace {

AsymSeries full_series_to(int n, int qmax) {
  AsymSeries s(qmax);
  if (n == 1) {
    s.add(1, 0, ClosedForm::constant(Rational(1)));        // ln k
    s.add(0, 0, ClosedForm::atom(Atom::gamma()));          // gamma
    s.add_rational(0, 1, Rational(1, 2));                  // 1/(2k)
    for (int j = 1; 2 * j <= qmax && 2 * j <= 40; ++j)
      s.add_rational(0, 2 * j, -bernoulli(2 * j) / Rational(2 * j));
    return s;
  }
  // H_k^(n) = zeta(n) - r_k with the Euler-Maclaurin remainder expansion
  s.add(0, 0, ClosedForm::atom(Atom::zeta(n)));
  s.add_rational(0, n - 1, Rational(-1, n - 1));
  s.add_rational(0, n, Rational(1, 2));
  Rational fact(1);
  for (int m = 1; n + 2 * m - 1 <= qmax && 2 * m <= 40; ++m) {
    fact *= Rational((2 * m - 1) * 2 * m);
    s.add_rational(0, n + 2 * m - 1, -bernoulli(2 * m) * rising(n, 2 * m - 1) / fact);
  }
  return s;
}

}  // namespace

AsymSeries harmonic_series_to(HarmonicKind kind, int qmax) {
  AsymSeries full = full_series_to(kind.order, qmax);
  if (kind.is_full()) return full;
  // h^(n)_k = H^(n)_{2k} - 2^{-n} H^(n)_k
  AsymSeries at2k = full.at_2k();
  return at2k + full.scaled(-Rational::pow2(-kind.order));
}

AsymSeries harmonic_tail_expansion(HarmonicKind kind, int num_terms) {
  if (num_terms < 1 || num_terms > 20)
    throw std::out_of_range("harmonic_tail_expansion: num_terms must be in 1..20");
  // Generous power budget, then keep the first num_terms entries in order of
  // increasing k-power (ln-term before constant at power 0).
  AsymSeries wide = harmonic_series_to(kind, num_terms + kind.order + 4);
  AsymSeries out(wide.qmax());
  std::vector<std::pair<AsymSeries::Key, ClosedForm>> entries;
  for (const auto& [k, c] : wide.terms()) entries.push_back({k, c});
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second < b.first.second;
    return a.first.first > b.first.first;
  });
  int kept = 0;
  for (const auto& [k, c] : entries) {
    if (kept >= num_terms) break;
    out.add(k.first, k.second, c);
    ++kept;
  }
  return out;
}

}  // namespace esum
