#include "esum/lemmas.hpp"

#include <cmath>

#include "esum/bernoulli.hpp"
#include "esum/general_sum.hpp"
#include "esum/harmonic.hpp"
#include "esum/partial_fractions.hpp"

namespace esum {

namespace {

ConstantsTable& tab_of(const EvalConfig& cfg) {
  return cfg.constants ? *cfg.constants : ConstantsTable::global();
}

PrecReal rv(const Rational& q, long wp) { return PrecReal::from_rational(q, wp); }

Rational Hn(int n, long i) { return harmonic_exact(HarmonicKind::full(n), i); }
Rational hn(int n, long i) { return harmonic_exact(HarmonicKind::odd(n), i); }

// ---------------------------------------------------------------- direct sums

// partial sum of term(k) for k = 1..K plus the Euler-Maclaurin tail of the
// series; the term generator is invoked with consecutive k and may carry
// stream state.
PrecReal accel_sum(const std::function<PrecReal(long)>& term, const AsymSeries& series, long K0,
                   long wp, ConstantsTable& tab) {
  PrecReal partial(wp);
  long k = 1;
  auto extend = [&](long to) {
    for (; k <= to; ++k) partial += term(k);
  };
  extend(K0);
  PrecReal v1 = partial + asym_tail(series, K0, wp, tab).value;
  extend(2 * K0);
  TailValue t2 = asym_tail(series, 2 * K0, wp, tab);
  PrecReal v2 = partial + t2.value;
  if ((v1 - v2).abs() > PrecReal::from_long(1, wp).mul_2exp(-(wp - 96)) + t2.error.mul_2exp(8)) {
    // one escalation round, then accept the doubled value
    extend(8 * K0);
    v2 = partial + asym_tail(series, 8 * K0, wp, tab).value;
  }
  return v2;
}

int lemma_qmax(int denom_degree) { return denom_degree + 18; }

// engine shorthands at a fixed deep target
PrecReal ES(const std::string& spec, long wp, const EvalConfig& cfg) {
  PrecReal tgt = PrecReal::from_long(1, wp).mul_2exp(-(wp - 80));
  return evaluate_accelerated(SummandSpec::parse(spec), tgt, wp, cfg).value;
}
PrecReal GS(const std::vector<SummandSpec::Factor>& num, int kpow, int oddpow, long wp,
            const EvalConfig& cfg) {
  PrecReal tgt = PrecReal::from_long(1, wp).mul_2exp(-(wp - 80));
  return general_harmonic_sum({num, kpow, oddpow}, tgt, wp, cfg).value;
}
PrecReal KS(const std::vector<PoleFactor>& kern, long i, long wp, const EvalConfig& cfg) {
  return kernel_sum_value(kern, i, wp, tab_of(cfg));
}

// sum_{k>=1} f_k/(2k+1)^j = sum_{k>=1} (f_k - increment)/(2k-1)^j shifted:
// for f = H^(n): sum H^(n)_k/(2k+1)^j = sum (H^(n)_k - 1/k^n)/(2k-1)^j
PrecReal shifted_over_oddplus(int order, int j, long wp, const EvalConfig& cfg) {
  std::string spec = "H" + std::to_string(order) + "/(2k-1)^" + std::to_string(j);
  return ES(spec, wp, cfg) - KS({{PoleFamily::K, order}, {PoleFamily::Odd, j}}, 1, wp, cfg);
}

// ------------------------------------------------------------- closed pieces

// Lemma 3a closed form: sum_k H^(n)_k/(k(i+k)) in zetas and exact rationals.
PrecReal l3a_closed(int n, long i, long wp, const EvalConfig& cfg) {
  ConstantsTable& tab = tab_of(cfg);
  PrecReal v = tab.zeta(n + 1, wp) * rv(Rational(1, i), wp);
  for (int m = 1; m <= n - 1; ++m) {
    Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);
    v += tab.zeta(n + 1 - m, wp) * rv(sign * Hn(m, i - 1) / Rational(i), wp);
  }
  Rational prefix(0);
  for (long k = 1; k < i; ++k) prefix += Hn(1, k) / Rational(k).pow(n);
  Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1);
  v += rv(sign * prefix / Rational(i), wp);
  return v;
}

// term generator for the skew sums sum_{k != i} H^(q)_k/(k(i-k))
std::function<PrecReal(long)> make_skew_term(int order, long i, long wp) {
  auto H = std::make_shared<HarmonicStreamReal>(HarmonicKind::full(order), wp);
  return [H, i, wp](long k) {
    H->advance();
    if (k == i) return PrecReal(wp);
    PrecReal d(wp);
    mpfr_set_si(d.raw(), k, MPFR_RNDN);
    mpfr_mul_si(d.raw(), d.raw(), i - k, MPFR_RNDN);
    return H->value() / d;
  };
}

PrecReal skew_direct(int order, long i, long wp, const EvalConfig& cfg) {
  ConstantsTable& tab = tab_of(cfg);
  int qmax = lemma_qmax(2);
  AsymSeries s = harmonic_series_to(HarmonicKind::full(order), qmax).shifted_down(1) *
                 AsymSeries::inv_linear(1, -i, 1, qmax);
  s = s.scaled(Rational(-1));
  long K0 = std::max<long>(20000, 600 * i);
  return accel_sum(make_skew_term(order, i, wp), s, K0, wp, tab);
}

PrecReal skew_partial(int order, long i, long K, long wp) {
  auto term = make_skew_term(order, i, wp);
  PrecReal acc(wp);
  for (long k = 1; k <= K; ++k) acc += term(k);
  return acc;
}

// generic direct sum of  (harmonic factor at k) / (a1 k + b1)^e1 (a2 k + b2)^e2...
struct LinFactor {
  long a;
  long b;
  int e;
};

std::function<PrecReal(long)> make_product_term(HarmonicKind kind,
                                                const std::vector<LinFactor>& dens, long wp) {
  auto H = std::make_shared<HarmonicStreamReal>(kind, wp);
  return [H, dens, wp](long k) {
    H->advance();
    PrecReal den = PrecReal::from_long(1, wp);
    for (const auto& d : dens) {
      PrecReal f = PrecReal::from_long(d.a * k + d.b, wp);
      den *= (d.e == 1) ? f : f.pow_int(d.e);
    }
    return H->value() / den;
  };
}

PrecReal product_direct(HarmonicKind kind, const std::vector<LinFactor>& dens, long i, long wp,
                        const EvalConfig& cfg) {
  ConstantsTable& tab = tab_of(cfg);
  int degree = 0;
  for (const auto& d : dens) degree += d.e;
  int qmax = lemma_qmax(degree);
  AsymSeries s = harmonic_series_to(kind, qmax);
  for (const auto& d : dens) s = s * AsymSeries::inv_linear(d.a, d.b, d.e, qmax);
  long K0 = std::max<long>(20000, 600 * i);
  return accel_sum(make_product_term(kind, dens, wp), s, K0, wp, tab);
}

PrecReal product_partial(HarmonicKind kind, const std::vector<LinFactor>& dens, long K, long wp) {
  auto term = make_product_term(kind, dens, wp);
  PrecReal acc(wp);
  for (long k = 1; k <= K; ++k) acc += term(k);
  return acc;
}

// ---------------------------------------------------------------- registry

std::vector<LemmaDef> build_registry() {
  std::vector<LemmaDef> R;

  // ---- the three kernel identities used by the zero family
  for (int n : {2, 3}) {
    LemmaDef d;
    d.id = "k1.n" + std::to_string(n);
    d.title = "sum 1/(k+i)^" + std::to_string(n) + " = zeta(" + std::to_string(n) + ") - H^(" +
              std::to_string(n) + ")_i";
    d.note = "source prints a (2^n-1)/2^n prefactor on zeta(n); the identity holds without it";
    d.direct = [n](long i, long wp, const EvalConfig& cfg) {
      // partial sum to K plus the exact zeta tail sum_{k>K} 1/(k+i)^n
      long K = 4000;
      Rational p(0);
      for (long k = 1; k <= K; ++k) p += Rational(1) / Rational(k + i).pow(n);
      return rv(p, wp) + tab_of(cfg).zeta(n, wp) - rv(Hn(n, K + i), wp);
    };
    d.closed = [n](long i, long wp, const EvalConfig& cfg) {
      return tab_of(cfg).zeta(n, wp) - rv(Hn(n, i), wp);
    };
    d.recurrence = nullptr;
    R.push_back(std::move(d));
  }
  {
    LemmaDef d;
    d.id = "k2";
    d.title = "sum 1/((k+i)(k+2i)) = (H_{2i} - H_i)/i";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      long K = 200000;
      Rational p(0);
      for (long k = 1; k <= K; ++k) p += Rational(1) / (Rational(k + i) * Rational(k + 2 * i));
      // exact telescoping tail: (1/i)(H_{K+2i} - H_{K+i})
      return rv(p + (Hn(1, K + 2 * i) - Hn(1, K + i)) / Rational(i), wp);
    };
    d.closed = [](long i, long wp, const EvalConfig&) {
      return rv((Hn(1, 2 * i) - Hn(1, i)) / Rational(i), wp);
    };
    R.push_back(std::move(d));
  }
  {
    LemmaDef d;
    d.id = "k3";
    d.title = "sum 1/(k+2i)^2 = zeta(2) - H^(2)_{2i}";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      long K = 4000;
      Rational p(0);
      for (long k = 1; k <= K; ++k) p += Rational(1) / Rational(k + 2 * i).pow(2);
      return rv(p, wp) + tab_of(cfg).zeta(2, wp) - rv(Hn(2, K + 2 * i), wp);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      return tab_of(cfg).zeta(2, wp) - rv(Hn(2, 2 * i), wp);
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 1 and the general skew sums
  {
    LemmaDef d;
    d.id = "1";
    d.title = "sum_{k!=i} H_k/(k(i-k)) = sum H_k/(k(i+k)) - zeta(2)/i - 2H^(2)_i/i";
    d.note = "source writes the last two terms with summation index k; they carry the free "
             "parameter i";
    d.direct = [](long i, long wp, const EvalConfig& cfg) { return skew_direct(1, i, wp, cfg); };
    d.partial = [](long i, long K, long prec) { return skew_partial(1, i, K, prec); };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      return l3a_closed(1, i, wp, cfg) - tab_of(cfg).zeta(2, wp) * rv(Rational(1, i), wp) -
             rv(Rational(2) * Hn(2, i) / Rational(i), wp);
    };
    R.push_back(std::move(d));
  }
  for (int n : {2, 3}) {  // odd orders 2n-1 = 3, 5
    LemmaDef d;
    d.id = "g85.n" + std::to_string(n);
    d.title = "skew sum of H^(" + std::to_string(2 * n - 1) + ") over k(i-k)";
    d.direct = [n](long i, long wp, const EvalConfig& cfg) {
      return skew_direct(2 * n - 1, i, wp, cfg);
    };
    d.partial = [n](long i, long K, long prec) {
      return skew_partial(2 * n - 1, i, K, prec);
    };
    d.closed = [n](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      int q = 2 * n - 1;
      PrecReal v = l3a_closed(q, i, wp, cfg);
      for (int m = 1; m <= q; ++m) {
        Rational sign = (m % 2 == 1) ? Rational(-1) : Rational(1);
        v += tab.zeta(2 * n - m + 1, wp) * rv(sign / Rational(i).pow(m), wp);
      }
      v += rv(Hn(1, i) / Rational(i).pow(2 * n), wp);
      for (int m = 1; m <= n - 1; ++m)
        v += tab.zeta(2 * n - 2 * m, wp) * rv(Rational(2) * Hn(2 * m, i) / Rational(i), wp);
      v -= rv(Hn(q, i) / Rational(i).pow(2), wp);
      v -= rv(Rational(2 * n) * Hn(2 * n, i) / Rational(i), wp);
      return v;
    };
    R.push_back(std::move(d));
  }
  for (int n : {1, 2}) {  // even orders 2n = 2, 4
    LemmaDef d;
    d.id = "g86.n" + std::to_string(n);
    d.title = "skew sum of H^(" + std::to_string(2 * n) + ") over k(i-k)";
    d.note = "zeta arguments read 2n+2-m; the printed 2n-2m+2 conflicts with the worked n=1 case";
    d.direct = [n](long i, long wp, const EvalConfig& cfg) {
      return skew_direct(2 * n, i, wp, cfg);
    };
    d.partial = [n](long i, long K, long prec) {
      return skew_partial(2 * n, i, K, prec);
    };
    d.closed = [n](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      int q = 2 * n;
      PrecReal v = -l3a_closed(q, i, wp, cfg);
      for (int m = 1; m <= 2 * n; ++m) {
        Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);  // -(-1)^m
        v += tab.zeta(2 * n + 2 - m, wp) * rv(sign / Rational(i).pow(m), wp);
      }
      v += rv(Hn(1, i) / Rational(i).pow(2 * n + 1), wp);
      for (int m = 1; m <= n; ++m)
        v += tab.zeta(2 * n - 2 * m + 2, wp) * rv(Rational(2) * Hn(2 * m - 1, i) / Rational(i), wp);
      v -= rv(Hn(q, i) / Rational(i).pow(2), wp);
      v -= rv(Rational(2 * n + 1) * Hn(2 * n + 1, i) / Rational(i), wp);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 2a
  {
    LemmaDef d;
    d.id = "2a";
    d.title = "sum H_k/((2k+1)(i+k))";
    d.note = "statement misplaces the H_i/i term outside the 1/(2i-1) scaling; the proof's "
             "1/(2i) partial-fraction factor should be 1/i, after which the ln2 parts of the "
             "inhomogeneity cancel and F(i) = [zeta(2) - 2ln2^2 + (H_{i-1}^2 + "
             "H^(2)_{i-1})/2]/(2i-1)";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(1), {{2, 1, 1}, {1, i, 1}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      return product_partial(HarmonicKind::full(1), {{2, 1, 1}, {1, i, 1}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal z2 = tab.zeta(2, wp);
      PrecReal l2 = tab.ln2(wp);
      PrecReal v = z2 - (l2 * l2).mul_2exp(1);
      v += rv((Hn(1, i - 1).pow(2) + Hn(2, i - 1)) / Rational(2), wp);
      return v * rv(Rational(1, 2 * i - 1), wp);
    };
    d.recurrence = [](long i, long wp, const EvalConfig& cfg) {
      // corrected inhomogeneity: F(i+1) - (2i-1)/(2i+1) F(i) = H_i/(i(2i+1))
      ConstantsTable& tab = tab_of(cfg);
      PrecReal F1 = tab.zeta(2, wp) - (tab.ln2(wp) * tab.ln2(wp)).mul_2exp(1);
      return recurrence_unroll(
          F1, [](long j) { return Rational(2 * j - 1, 2 * j + 1); },
          [&](long j) { return rv(Hn(1, j) / Rational(j * (2 * j + 1)), wp); }, i);
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 2b (worked n = 2 instance and the general n = 3 instance)
  {
    LemmaDef d;
    d.id = "2b";
    d.title = "sum H_k/(i+k)^2 in closed form";
    d.note = "the general statement prints the i = 1 base value as H_k/(k+1)^n";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(1), {{1, i, 2}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(1), {{1, i, 2}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal z2 = tab.zeta(2, wp);
      PrecReal v = tab.zeta(3, wp) - z2 * rv(Rational(1, i), wp) + z2 * rv(Hn(1, i), wp);
      v -= rv(Hn(1, i) * Hn(2, i) + Hn(3, i) - Hn(1, i) / Rational(i).pow(2) -
                  Hn(2, i) / Rational(i),
              wp);
      return v;
    };
    d.recurrence = [](long i, long wp, const EvalConfig& cfg) {
      PrecReal F1 = tab_of(cfg).zeta(3, wp);
      return recurrence_unroll(
          F1, [](long) { return Rational(1); },
          [&](long j) {
            return -KS({{PoleFamily::K, 1}, {PoleFamily::PlusI, 2}}, j, wp, cfg);
          },
          i);
    };
    R.push_back(std::move(d));
  }
  {
    LemmaDef d;
    d.id = "2b.n3";
    d.title = "sum H_k/(i+k)^3 via the prefix solution of the difference equation";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(1), {{1, i, 3}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(1), {{1, i, 3}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      // F(1) = t(1,3) - zeta(4) = zeta(4)/4
      PrecReal v = tab.zeta(4, wp) * rv(Rational(1, 4), wp);
      for (long k = 1; k < i; ++k)
        v -= KS({{PoleFamily::K, 1}, {PoleFamily::PlusI, 3}}, k, wp, cfg);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 2c (second-family master), parameter instances
  for (auto [a, b, c] : std::initializer_list<std::tuple<int, int, int>>{
           {2, 2, 2}, {2, 3, 3}, {2, 2, 4}, {3, 3, 2}}) {
    LemmaDef d;
    d.id = "2c." + std::to_string(a) + std::to_string(b) + std::to_string(c);
    d.title = "second-family master relation at (a,b,c) = (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")";
    d.uses_i = false;
    d.direct = [a, b, c](long, long wp, const EvalConfig& cfg) {
      std::string lhs = "H" + std::to_string(a) + "*H" + std::to_string(b) + "/(2k-1)^" +
                        std::to_string(c);
      return ES(lhs, wp, cfg);
    };
    d.closed = [a, b, c](long, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal za = tab.zeta(a, wp), zb = tab.zeta(b, wp), zc = tab.zeta(c, wp);
      PrecReal v = (za * zb + tab.zeta(a + b, wp)) * zc *
                   rv(Rational(1) - Rational::pow2(-c), wp);
      v += GS({{HarmonicKind::full(b), 1}}, a, c, wp, cfg);
      v += GS({{HarmonicKind::full(a), 1}}, b, c, wp, cfg);
      v -= ES("H" + std::to_string(a + b) + "/(2k-1)^" + std::to_string(c), wp, cfg);
      v -= ES("H" + std::to_string(a) + "*h" + std::to_string(c) + "/k^" + std::to_string(b), wp,
              cfg);
      v -= ES("H" + std::to_string(b) + "*h" + std::to_string(c) + "/k^" + std::to_string(a), wp,
              cfg);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 3a
  for (int n : {1, 2, 3}) {
    LemmaDef d;
    d.id = "3a.n" + std::to_string(n);
    d.title = "sum H^(" + std::to_string(n) + ")_k/(k(i+k))";
    d.direct = [n](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(n), {{1, 0, 1}, {1, i, 1}}, i, wp, cfg);
    };
    d.partial = [n](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(n), {{1, 0, 1}, {1, i, 1}}, K, prec);
    };
    d.closed = [n](long i, long wp, const EvalConfig& cfg) { return l3a_closed(n, i, wp, cfg); };
    d.recurrence = [n](long i, long wp, const EvalConfig& cfg) {
      PrecReal F1 = tab_of(cfg).zeta(n + 1, wp);
      return recurrence_unroll(
          F1, [](long j) { return Rational(j, j + 1); },
          [&, n](long j) {
            return KS({{PoleFamily::K, n}, {PoleFamily::PlusI, 1}}, j, wp, cfg) *
                   rv(Rational(1, j + 1), wp);
          },
          i);
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 3b (third-family master)
  for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}}) {
    LemmaDef d;
    d.id = "3b." + std::to_string(a) + std::to_string(b);
    d.title = "third-family master relation at (a,b) = (" + std::to_string(a) + "," +
              std::to_string(b) + ")";
    d.uses_i = false;
    d.direct = [a, b](long, long wp, const EvalConfig& cfg) {
      return ES("H" + std::to_string(a) + "*H" + std::to_string(b) + "/k(2k-1)", wp, cfg);
    };
    d.closed = [a, b](long, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal v = (tab.zeta(a, wp) * tab.zeta(b, wp) + tab.zeta(a + b, wp)) *
                   tab.ln2(wp).mul_2exp(1);
      v += GS({{HarmonicKind::full(a), 1}}, b + 1, 1, wp, cfg);
      v += GS({{HarmonicKind::full(b), 1}}, a + 1, 1, wp, cfg);
      v += ES("H1*H" + std::to_string(a) + "/k^" + std::to_string(b), wp, cfg);
      v += ES("H1*H" + std::to_string(b) + "/k^" + std::to_string(a), wp, cfg);
      v -= ES("H" + std::to_string(a) + "*h1/k^" + std::to_string(b), wp, cfg).mul_2exp(1);
      v -= ES("H" + std::to_string(b) + "*h1/k^" + std::to_string(a), wp, cfg).mul_2exp(1);
      v -= ES("H" + std::to_string(a + b) + "/k(2k-1)", wp, cfg);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 4a
  for (int a : {1, 2, 3}) {
    LemmaDef d;
    d.id = "4a.a" + std::to_string(a);
    d.title = "sum h^(" + std::to_string(a) + ")_k/((2k-1)(2i+2k-1))";
    d.direct = [a](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::odd(a), {{2, -1, 1}, {2, 2 * i - 1, 1}}, i, wp, cfg);
    };
    d.partial = [a](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::odd(a), {{2, -1, 1}, {2, 2 * i - 1, 1}}, K, prec);
    };
    d.closed = [a](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal v(wp);
      for (int n = 1; n <= a; ++n) {
        Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        Rational coef = sign * (Rational::pow2(a + 2 - n) - 1) / Rational::pow2(a + 2);
        v += tab.zeta(a + 2 - n, wp) * rv(coef / Rational(i).pow(n), wp);
      }
      for (int n = 1; n <= a - 1; ++n) {
        Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        Rational coef = sign * (Rational::pow2(a + 1 - n) - 1) / Rational::pow2(a + 2);
        v += tab.zeta(a + 1 - n, wp) * rv(coef * Hn(n, i) / Rational(i), wp);
      }
      Rational prefix(0);
      for (long k = 1; k < i; ++k) prefix += hn(1, k) / Rational(k).pow(a);
      Rational sign = (a % 2 == 1) ? Rational(1) : Rational(-1);
      v += rv(sign * prefix / (Rational::pow2(a + 1) * Rational(i)), wp);
      return v;
    };
    d.recurrence = [a](long i, long wp, const EvalConfig& cfg) {
      // F(1) from the closed form (the prefix sum is empty there)
      ConstantsTable& tab = tab_of(cfg);
      PrecReal f1(wp);
      for (int n = 1; n <= a; ++n) {
        Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        Rational coef = sign * (Rational::pow2(a + 2 - n) - 1) / Rational::pow2(a + 2);
        f1 += tab.zeta(a + 2 - n, wp) * rv(coef, wp);
      }
      for (int n = 1; n <= a - 1; ++n) {
        Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        Rational coef = sign * (Rational::pow2(a + 1 - n) - 1) / Rational::pow2(a + 2);
        f1 += tab.zeta(a + 1 - n, wp) * rv(coef, wp);
      }
      return recurrence_unroll(
          f1, [](long j) { return Rational(j, j + 1); },
          [&, a](long j) {
            return KS({{PoleFamily::Odd, a}, {PoleFamily::OddShift, 1}}, j, wp, cfg) *
                   rv(Rational(1, 2 * j + 2), wp);
          },
          i);
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 4b
  {
    LemmaDef d;
    d.id = "4b";
    d.title = "sum H^(2)_k/(2i+2k-1)^2";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(2), {{2, 2 * i - 1, 2}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(2), {{2, 2 * i - 1, 2}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal F1 = shifted_over_oddplus(2, 2, wp, cfg);
      PrecReal v = F1 - tab.ln2(wp) * rv(Rational(8) * hn(3, i - 1), wp) -
                   tab.zeta(2, wp) * rv(Rational(4) * hn(2, i - 1), wp);
      Rational p1(0), p2(0);
      for (long k = 1; k < i; ++k) {
        p1 += hn(1, k) / Rational(2 * k - 1).pow(3);
        p2 += hn(2, k) / Rational(2 * k - 1).pow(2);
      }
      v += rv(Rational(8) * p1 + Rational(4) * p2, wp);
      return v;
    };
    d.recurrence = [](long i, long wp, const EvalConfig& cfg) {
      PrecReal F1 = shifted_over_oddplus(2, 2, wp, cfg);
      return recurrence_unroll(
          F1, [](long) { return Rational(1); },
          [&](long j) {
            return -KS({{PoleFamily::K, 2}, {PoleFamily::OddShift, 2}}, j, wp, cfg);
          },
          i);
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 4c (shipped without the spurious h_k/(2k-1)^3 prefix term)
  {
    LemmaDef d;
    d.id = "4c";
    d.title = "sum H^(3)_k/(2i+2k-1)^2";
    d.note = "statement carries a spurious +8 sum_{k<i} h_k/(2k-1)^3 absent from its own proof";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(3), {{2, 2 * i - 1, 2}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(3), {{2, 2 * i - 1, 2}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal F1 = shifted_over_oddplus(3, 2, wp, cfg);
      PrecReal v = F1 + tab.ln2(wp) * rv(Rational(24) * hn(4, i - 1), wp) +
                   tab.zeta(2, wp) * rv(Rational(10) * hn(3, i - 1), wp) -
                   tab.zeta(3, wp) * rv(hn(2, i - 1), wp);
      Rational p1(0), p2(0);
      for (long k = 1; k < i; ++k) {
        p1 += hn(1, k) / Rational(2 * k - 1).pow(4);
        p2 += hn(2, k) / Rational(2 * k - 1).pow(3);
      }
      v -= rv(Rational(24) * p1 + Rational(8) * p2, wp);
      return v;
    };
    d.recurrence = [](long i, long wp, const EvalConfig& cfg) {
      PrecReal F1 = shifted_over_oddplus(3, 2, wp, cfg);
      return recurrence_unroll(
          F1, [](long) { return Rational(1); },
          [&](long j) {
            return -KS({{PoleFamily::K, 3}, {PoleFamily::OddShift, 2}}, j, wp, cfg);
          },
          i);
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 5a kernel (the H_k/((2k-1)(2i+2k-1)) helper)
  {
    LemmaDef d;
    d.id = "5k";
    d.title = "sum H_k/((2k-1)(2i+2k-1))";
    d.note = "the difference equation's inhomogeneity is (h_i - ln2)/((i+1)(2i-1)); the "
             "printed one doubles the ln2 part";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(1), {{2, -1, 1}, {2, 2 * i - 1, 1}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(1), {{2, -1, 1}, {2, 2 * i - 1, 1}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal l2 = tab.ln2(wp);
      PrecReal v = l2 * rv(Rational(2, 2 * i - 1), wp);
      v -= l2 * rv(hn(1, i) / Rational(i), wp);
      v -= rv(hn(1, i) / Rational(i * (2 * i - 1)), wp);
      v += rv(hn(2, i) / Rational(2 * i), wp);
      v += rv(hn(1, i).pow(2) / Rational(2 * i), wp);
      return v;
    };
    d.recurrence = [](long i, long wp, const EvalConfig& cfg) {
      PrecReal F1 = tab_of(cfg).ln2(wp);
      return recurrence_unroll(
          F1, [](long j) { return Rational(j, j + 1); },
          [&](long j) {
            return (rv(hn(1, j), wp) - tab_of(cfg).ln2(wp)) *
                   rv(Rational(1, (j + 1) * (2 * j - 1)), wp);
          },
          i);
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 5a master (fifth family, a = b = 1, even c)
  for (int c : {2, 4}) {
    LemmaDef d;
    d.id = "5a.c" + std::to_string(c);
    d.title = "fifth-family master at a = b = 1, c = " + std::to_string(c);
    d.uses_i = false;
    d.direct = [c](long, long wp, const EvalConfig& cfg) {
      return ES("H1*h1/(2k-1)^" + std::to_string(c), wp, cfg);
    };
    d.closed = [c](long, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal v = tab.ln2(wp) * ES("H1/(2k-1)^" + std::to_string(c), wp, cfg);
      for (int n = 1; n <= c - 2; ++n) {
        Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        v += tab.zeta(n + 1, wp) *
             ES("H1/(2k-1)^" + std::to_string(c - n), wp, cfg) *
             rv(sign / Rational::pow2(n + 1), wp);
      }
      PrecReal inner(wp);
      inner += tab.ln2(wp).mul_2exp(1) * GS({}, c - 1, 1, wp, cfg);
      inner -= tab.ln2(wp) * ES("h1/k^" + std::to_string(c), wp, cfg);
      inner -= GS({{HarmonicKind::odd(1), 1}}, c, 1, wp, cfg);
      inner += ES("h2/k^" + std::to_string(c), wp, cfg) * rv(Rational(1, 2), wp);
      inner += ES("h1^2/k^" + std::to_string(c), wp, cfg) * rv(Rational(1, 2), wp);
      v += inner * rv(Rational(1) / Rational::pow2(c - 1), wp);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 5b (the h^(b) shift solution), instances
  for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    LemmaDef d;
    d.id = "5b.a" + std::to_string(a) + "b" + std::to_string(b);
    d.title = "sum h^(" + std::to_string(b) + ")_k/(i+k)^" + std::to_string(a) +
              " via the prefix solution";
    d.direct = [a, b](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::odd(b), {{1, i, a}}, i, wp, cfg);
    };
    d.partial = [a, b](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::odd(b), {{1, i, a}}, K, prec);
    };
    d.closed = [a, b](long i, long wp, const EvalConfig& cfg) {
      PrecReal v = ES("h" + std::to_string(b) + "/k^" + std::to_string(a), wp, cfg) -
                   KS({{PoleFamily::K, a}, {PoleFamily::Odd, b}}, 1, wp, cfg);
      for (long k = 1; k < i; ++k)
        v -= KS({{PoleFamily::Odd, b}, {PoleFamily::PlusI, a}}, k, wp, cfg);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 5c
  {
    LemmaDef d;
    d.id = "5c";
    d.title = "sum h_k/(i+k)^2";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::odd(1), {{1, i, 2}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::odd(1), {{1, i, 2}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal v = tab.zeta(3, wp) * rv(Rational(7, 4), wp);
      v += tab.zeta(2, wp) * rv(hn(1, i), wp);
      v -= tab.ln2(wp) * rv(Rational(4) * hn(2, i), wp);
      Rational p1(0), p2(0);
      for (long k = 1; k <= i; ++k) {
        p1 += Hn(1, k - 1) / Rational(2 * k - 1).pow(2);
        p2 += Hn(2, k - 1) / Rational(2 * k - 1);
      }
      v -= rv(Rational(2) * p1 + p2, wp);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- fifth family H_k over (2i+2k-1)^2 (stated alongside lemmas 4b/4c)
  {
    LemmaDef d;
    d.id = "5h2";
    d.title = "sum H_k/(2i+2k-1)^2";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(1), {{2, 2 * i - 1, 2}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(1), {{2, 2 * i - 1, 2}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal F1 = ES("H1/(2k-1)^2", wp, cfg) -
                    KS({{PoleFamily::K, 1}, {PoleFamily::Odd, 2}}, 1, wp, cfg);
      PrecReal v = F1 - tab.ln2(wp) * rv(Rational(2) / Rational(2 * i - 1).pow(2), wp) -
                   tab.zeta(2, wp) * rv(Rational(3, 2 * (2 * i - 1)), wp) +
                   tab.zeta(2, wp) * rv(Rational(3, 2) * hn(1, i), wp) +
                   tab.ln2(wp) * rv(Rational(2) * hn(2, i), wp);
      v -= rv(Rational(2) * hn(3, i) + Rational(2) * hn(1, i) * hn(2, i) -
                  Rational(2) * hn(1, i) / Rational(2 * i - 1).pow(2) -
                  Rational(2) * hn(2, i) / Rational(2 * i - 1),
              wp);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 6 (sixth-family master, b = 1), derived middle terms
  for (int a : {2, 4}) {
    LemmaDef d;
    d.id = "6.a" + std::to_string(a);
    d.title = "sixth-family master at (a, 1), a = " + std::to_string(a);
    d.note = "middle terms read zeta(a+1-n) sum H^(n)/(k(2k-1)); the printed form scrambles "
             "them into sum H/(k^n(2k-1)) and adds a spurious h_k/(k^{a+1}(2k-1)) term";
    d.uses_i = false;
    d.direct = [a](long, long wp, const EvalConfig& cfg) {
      return ES("h" + std::to_string(a) + "*h1/k(2k-1)", wp, cfg);
    };
    d.closed = [a](long, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal v(wp);
      for (int n = 1; n <= a; ++n) {
        Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        Rational coef = sign * (Rational::pow2(a + 2 - n) - 1) / Rational::pow2(a + 1);
        v += tab.zeta(a + 2 - n, wp) * GS({}, n, 1, wp, cfg) * rv(coef, wp);
      }
      for (int n = 1; n <= a - 1; ++n) {
        Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        Rational coef = sign * (Rational::pow2(a + 1 - n) - 1) / Rational::pow2(a + 1);
        v += tab.zeta(a + 1 - n, wp) * GS({{HarmonicKind::full(n), 1}}, 1, 1, wp, cfg) *
             rv(coef, wp);
      }
      Rational sign = (a % 2 == 1) ? Rational(1) : Rational(-1);
      PrecReal last = tab.ln2(wp).mul_2exp(1) * ES("h1/k^" + std::to_string(a), wp, cfg);
      last -= ES("h1^2/k^" + std::to_string(a), wp, cfg).mul_2exp(1);
      last += ES("H1*h1/k^" + std::to_string(a), wp, cfg);
      v += last * rv(sign / Rational::pow2(a), wp);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- lemma 7 (seventh-family master, b = 1)
  for (int a : {1, 2, 3}) {
    LemmaDef d;
    d.id = "7.a" + std::to_string(a);
    d.title = "seventh-family master at order 2a = " + std::to_string(2 * a);
    d.uses_i = false;
    d.direct = [a](long, long wp, const EvalConfig& cfg) {
      return ES("H" + std::to_string(2 * a) + "*h1/k(2k-1)", wp, cfg);
    };
    d.closed = [a](long, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      int aa = 2 * a;
      PrecReal v = tab.ln2(wp).mul_2exp(1) * ES("h1/k^" + std::to_string(aa), wp, cfg);
      v += tab.zeta(2, wp) * tab.zeta(aa, wp);
      for (int n = 1; n <= aa - 2; ++n) {
        Rational sign = (n % 2 == 1) ? Rational(-1) : Rational(1);  // minus (-1)^{n+1}
        v += tab.zeta(aa - n, wp) * ES("h1/k^" + std::to_string(n + 1), wp, cfg) * rv(sign, wp);
      }
      v += GS({{HarmonicKind::odd(1), 1}}, aa + 1, 1, wp, cfg);
      v -= ES("h2/k^" + std::to_string(aa), wp, cfg);
      v -= ES("h1^2/k^" + std::to_string(aa), wp, cfg);
      return v;
    };
    R.push_back(std::move(d));
  }

  // ---- appendix C helpers
  {
    LemmaDef d;
    d.id = "c284";
    d.title = "sum H^(3)_k/((i+k)(2k-1))";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(3), {{1, i, 1}, {2, -1, 1}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(3), {{1, i, 1}, {2, -1, 1}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal v = ES("H3/k(2k-1)", wp, cfg) + tab.zeta(4, wp);
      v += tab.zeta(3, wp) * rv(Hn(1, i - 1), wp);
      v -= tab.zeta(2, wp) * rv(Hn(2, i - 1), wp);
      Rational prefix(0);
      for (long k = 1; k < i; ++k) prefix += Hn(1, k) / Rational(k).pow(3);
      v += rv(prefix, wp);
      return v * rv(Rational(1, 2 * i + 1), wp);
    };
    R.push_back(std::move(d));
  }
  {
    LemmaDef d;
    d.id = "c293";
    d.title = "sum H_k/(2i+2k-1)^3";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(1), {{2, 2 * i - 1, 3}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(1), {{2, 2 * i - 1, 3}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal F1 = ES("H1/(2k-1)^3", wp, cfg) -
                    KS({{PoleFamily::K, 1}, {PoleFamily::Odd, 3}}, 1, wp, cfg);
      PrecReal v = F1 + tab.zeta(3, wp) * rv(Rational(7, 4) * hn(1, i - 1), wp) +
                   tab.zeta(2, wp) * rv(Rational(3, 2) * hn(2, i - 1), wp) +
                   tab.ln2(wp) * rv(Rational(2) * hn(3, i - 1), wp);
      v -= rv(Rational(2) * hn(1, i - 1) * hn(3, i - 1) + Rational(2) * hn(4, i - 1), wp);
      Rational p(0);
      for (long k = 1; k < i; ++k) p += hn(2, k) / Rational(2 * k - 1).pow(2);
      v -= rv(Rational(2) * p, wp);
      return v;
    };
    R.push_back(std::move(d));
  }
  {
    LemmaDef d;
    d.id = "c296";
    d.title = "sum h_k/(i+k)^3";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::odd(1), {{1, i, 3}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::odd(1), {{1, i, 3}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal F1 = ES("h1/k^3", wp, cfg) -
                    KS({{PoleFamily::K, 3}, {PoleFamily::Odd, 1}}, 1, wp, cfg);
      PrecReal v = F1 + tab.ln2(wp).mul_2exp(3) - tab.zeta(2, wp).mul_2exp(1) -
                   tab.zeta(3, wp);
      v += tab.zeta(3, wp) * rv(hn(1, i), wp);
      v += tab.zeta(2, wp) * rv(Rational(2) * hn(2, i), wp);
      v -= tab.ln2(wp) * rv(Rational(8) * hn(3, i), wp);
      v -= rv(Rational(4) * Hn(1, i) * hn(3, i) + Rational(2) * Hn(2, i) * hn(2, i) +
                  Hn(3, i) * hn(1, i),
              wp);
      Rational p(0);
      for (long k = 1; k <= i; ++k)
        p += Rational(4) * hn(3, k) / Rational(k) + Rational(2) * hn(2, k) / Rational(k).pow(2) +
             hn(1, k) / Rational(k).pow(3);
      v += rv(p, wp);
      return v;
    };
    R.push_back(std::move(d));
  }
  {
    LemmaDef d;
    d.id = "c300";
    d.title = "sum H^(3)_k/((2k-1)(2i+2k-1))";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(3), {{2, -1, 1}, {2, 2 * i - 1, 1}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(3), {{2, -1, 1}, {2, 2 * i - 1, 1}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal v = KS({{PoleFamily::K, 3}, {PoleFamily::Odd, 1}, {PoleFamily::OddShift, 1}}, i,
                      wp, cfg);
      v += tab.zeta(3, wp) * rv(hn(1, i) / Rational(2 * i), wp);
      v -= tab.zeta(2, wp) * rv(hn(2, i) / Rational(i), wp);
      v -= tab.ln2(wp) * rv(Rational(4) * hn(3, i) / Rational(i), wp);
      Rational p(0);
      for (long k = 1; k <= i; ++k) p += hn(1, k) / Rational(2 * k - 1).pow(3);
      v += rv(Rational(4) * p / Rational(i), wp);
      return v;
    };
    R.push_back(std::move(d));
  }
  {
    LemmaDef d;
    d.id = "c302";
    d.title = "sum H^(2)_k/(2i+2k-1)^3";
    d.direct = [](long i, long wp, const EvalConfig& cfg) {
      return product_direct(HarmonicKind::full(2), {{2, 2 * i - 1, 3}}, i, wp, cfg);
    };
    d.partial = [](long i, long K, long prec) {
      (void)i;
      return product_partial(HarmonicKind::full(2), {{2, 2 * i - 1, 3}}, K, prec);
    };
    d.closed = [](long i, long wp, const EvalConfig& cfg) {
      ConstantsTable& tab = tab_of(cfg);
      PrecReal F1 = shifted_over_oddplus(2, 3, wp, cfg);
      PrecReal v = F1 - tab.zeta(3, wp) * rv(Rational(7, 2) * hn(2, i - 1), wp) -
                   tab.zeta(2, wp) * rv(Rational(7) * hn(3, i - 1), wp) -
                   tab.ln2(wp) * rv(Rational(12) * hn(4, i - 1), wp);
      Rational p1(0), p2(0), p3(0);
      for (long k = 1; k < i; ++k) {
        p1 += hn(1, k) / Rational(2 * k - 1).pow(4);
        p2 += hn(2, k) / Rational(2 * k - 1).pow(3);
        p3 += hn(3, k) / Rational(2 * k - 1).pow(2);
      }
      v += rv(Rational(12) * p1 + Rational(8) * p2 + Rational(4) * p3, wp);
      return v;
    };
    R.push_back(std::move(d));
  }

  return R;
}

}  // namespace

const std::vector<LemmaDef>& lemma_registry() {
  static const std::vector<LemmaDef> R = build_registry();
  return R;
}

const LemmaDef* lemma_find(const std::string& id) {
  for (const auto& d : lemma_registry())
    if (d.id == id) return &d;
  return nullptr;
}

std::vector<const LemmaDef*> lemma_select(const std::string& query) {
  std::vector<const LemmaDef*> out;
  for (const auto& d : lemma_registry()) {
    bool match = query == "all" || d.id == query || d.id.rfind(query + ".", 0) == 0;
    // a bare group number selects its lettered variants: "4" -> 4a.., 4b, 4c
    if (!match && d.id.size() > query.size() && d.id.rfind(query, 0) == 0 &&
        std::isalpha(static_cast<unsigned char>(d.id[query.size()])))
      match = true;
    if (match) out.push_back(&d);
  }
  return out;
}

std::vector<HelperReport> lemma_verify(const LemmaDef& def, long i_max, const PrecReal& tol,
                                       long precision_bits, const EvalConfig& cfg) {
  long wp = precision_bits + 32;
  PrecReal t = tol.with_precision(wp);
  std::vector<HelperReport> out;
  long lo = 1, hi = def.uses_i ? i_max : 1;
  for (long i = lo; i <= hi; ++i) {
    HelperReport r{def.id, i, def.direct(i, wp, cfg), def.closed(i, wp, cfg), PrecReal(wp), false};
    r.abs_diff = (r.direct - r.closed).abs();
    r.pass = r.abs_diff <= t;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<HelperReport> lemma_recurrence_check(const LemmaDef& def, long i_max,
                                                 const PrecReal& tol, long precision_bits,
                                                 const EvalConfig& cfg) {
  std::vector<HelperReport> out;
  if (!def.recurrence) return out;
  long wp = precision_bits + 32;
  PrecReal t = tol.with_precision(wp);
  for (long i = 1; i <= i_max; ++i) {
    HelperReport r{def.id, i, def.recurrence(i, wp, cfg), def.closed(i, wp, cfg), PrecReal(wp),
                   false};
    r.abs_diff = (r.direct - r.closed).abs();
    r.pass = r.abs_diff <= t;
    out.push_back(std::move(r));
  }
  return out;
}

PrecReal recurrence_unroll(const PrecReal& F1, const std::function<Rational(long)>& coeff,
                           const std::function<PrecReal(long)>& inhomogeneity, long i_target) {
  if (i_target < 1) throw std::invalid_argument("recurrence_unroll: i_target must be >= 1");
  PrecReal F = F1;
  for (long j = 1; j < i_target; ++j)
    F = F * PrecReal::from_rational(coeff(j), F1.precision()) + inhomogeneity(j);
  return F;
}

PrecReal helper_direct(const std::string& id, long i, long K, long precision_bits) {
  const LemmaDef* def = lemma_find(id);
  if (!def) throw std::invalid_argument("unknown helper id: " + id);
  if (!def->partial)
    throw std::invalid_argument("helper " + id + " has no plain partial-sum form");
  return def->partial(i, K, precision_bits);
}

PrecReal helper_direct_accel(const std::string& id, long i, long precision_bits,
                             const EvalConfig& cfg) {
  const LemmaDef* def = lemma_find(id);
  if (!def) throw std::invalid_argument("unknown helper id: " + id);
  return def->direct(i, precision_bits, cfg);
}

PrecReal helper_closed(const std::string& id, long i, long precision_bits,
                       const EvalConfig& cfg) {
  const LemmaDef* def = lemma_find(id);
  if (!def) throw std::invalid_argument("unknown helper id: " + id);
  return def->closed(i, precision_bits, cfg);
}

}  // namespace esum
