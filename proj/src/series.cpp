#include "esum/series.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>

#include "esum/bernoulli.hpp"

namespace esum {

namespace {

constexpr long kBlock = 65536;

ConstantsTable& table_of(const EvalConfig& cfg) {
  return cfg.constants ? *cfg.constants : ConstantsTable::global();
}

}  // namespace

PrecReal tail_integral(int p, int q, const PrecReal& K) {
  if (q < 2) throw std::invalid_argument("tail_integral: q must be >= 2");
  if (p < 0) throw std::invalid_argument("tail_integral: p must be >= 0");
  long wp = K.precision();
  PrecReal lnK = K.ln();
  PrecReal kpow = K.pow_int(-(q - 1));  // K^{-(q-1)}
  PrecReal acc(wp);
  Rational fact(1);  // p!/(p-j)!
  PrecReal lnpow = PrecReal::from_long(1, wp);
  // build (ln K)^{p-j} descending: precompute powers
  std::vector<PrecReal> lp;
  lp.reserve(p + 1);
  lp.push_back(PrecReal::from_long(1, wp));
  for (int s = 1; s <= p; ++s) lp.push_back(lp.back() * lnK);
  Rational qden(1);
  for (int j = 0; j <= p; ++j) {
    if (j > 0) fact *= Rational(p - j + 1);
    qden *= Rational(q - 1);
    acc += lp[static_cast<size_t>(p - j)] * PrecReal::from_rational(fact / qden, wp);
  }
  return acc * kpow;
}

TailValue log_power_tail(int p, int q, long K, long prec, int em_terms) {
  if (q < 2) throw std::invalid_argument("log_power_tail: q must be >= 2");
  if (em_terms > 19) em_terms = 19;  // error estimate needs B_{2J+2} <= B_40
  long wp = prec + 32;
  PrecReal a = PrecReal::from_long(K + 1, wp);
  PrecReal lnA = a.ln();
  std::vector<PrecReal> lp;  // lnA^s
  lp.push_back(PrecReal::from_long(1, wp));
  for (int s = 1; s <= p; ++s) lp.push_back(lp.back() * lnA);

  // derivative tables: map (ln-power s, x-power m) -> exact coefficient
  using DTab = std::map<std::pair<int, int>, Rational>;
  auto deriv = [](const DTab& t) {
    DTab d;
    for (const auto& [key, c] : t) {
      auto [s, m] = key;
      if (s > 0) {
        auto& e = d[{s - 1, m + 1}];
        e += c * Rational(s);
      }
      auto& e2 = d[{s, m + 1}];
      e2 += c * Rational(-m);
    }
    return d;
  };
  auto eval_tab = [&](const DTab& t) {
    PrecReal v(wp);
    for (const auto& [key, c] : t) {
      auto [s, m] = key;
      v += lp[static_cast<size_t>(s)] * PrecReal::from_rational(c, wp) * a.pow_int(-m);
    }
    return v;
  };

  PrecReal total = tail_integral(p, q, a);
  DTab f{{{p, q}, Rational(1)}};
  total += eval_tab(f) * PrecReal::from_rational(Rational(1, 2), wp);

  Rational fact(1);  // (2m)!
  DTab d = f;
  int order = 0;
  for (int m = 1; m <= em_terms; ++m) {
    while (order < 2 * m - 1) {
      d = deriv(d);
      ++order;
    }
    fact *= Rational((2 * m - 1) * (2 * m));
    total -= eval_tab(d) * PrecReal::from_rational(bernoulli(2 * m) / fact, wp);
  }
  // first omitted correction bounds the remainder
  while (order < 2 * em_terms + 1) {
    d = deriv(d);
    ++order;
  }
  fact *= Rational((2 * em_terms + 1) * (2 * em_terms + 2));
  PrecReal err =
      (eval_tab(d) * PrecReal::from_rational(bernoulli(2 * em_terms + 2) / fact, wp)).abs();
  return {total.with_precision(prec), err.with_precision(prec)};
}

AsymSeries summand_series(const SummandSpec& spec, int qmax) {
  AsymSeries s = AsymSeries::one(qmax);
  for (const auto& f : spec.numerator)
    s = s * harmonic_series_to(f.kind, qmax).pow(f.power);
  switch (spec.shape) {
    case SummandSpec::DenomShape::KPow:
      s = s.shifted_down(spec.denom_exp);
      break;
    case SummandSpec::DenomShape::OddPow:
      s = s * AsymSeries::inv_linear(2, -1, spec.denom_exp, qmax);
      break;
    case SummandSpec::DenomShape::KTimesOdd:
      s = s * AsymSeries::inv_k_times_odd(qmax);
      break;
  }
  return s;
}

// --------------------------------------------------------- direct summation

struct DirectSummer::Impl {
  SummandSpec spec;
  long wp;
  int threads;
  std::vector<HarmonicKind> kinds;
  std::vector<size_t> fidx;   // factor -> index into kinds
  std::vector<PrecReal> cur;  // stream values at k = cur_k
  long cur_k = 0;
  std::vector<PrecReal> block_sums;
  PrecReal partial;  // accumulator for the trailing partial block
  long partial_base = 0;

  Impl(const SummandSpec& s, long prec, int th) : spec(s), wp(prec), threads(th), partial(prec) {
    for (const auto& f : spec.numerator) {
      size_t at = kinds.size();
      for (size_t i = 0; i < kinds.size(); ++i)
        if (kinds[i] == f.kind) at = i;
      if (at == kinds.size()) kinds.push_back(f.kind);
      fidx.push_back(at);
    }
    for (size_t i = 0; i < kinds.size(); ++i) cur.emplace_back(wp);
  }

  struct Ws {
    PrecReal num, den, t;
    explicit Ws(long wp) : num(wp), den(wp), t(wp) {}
  };

  void advance_streams(std::vector<PrecReal>& v, long k, Ws& ws) const {
    for (size_t i = 0; i < kinds.size(); ++i) {
      long base = kinds[i].is_full() ? k : 2 * k - 1;
      mpfr_set_si(ws.t.raw(), base, MPFR_RNDN);
      if (kinds[i].order != 1)
        mpfr_pow_ui(ws.t.raw(), ws.t.raw(), static_cast<unsigned long>(kinds[i].order),
                    MPFR_RNDN);
      mpfr_ui_div(ws.t.raw(), 1, ws.t.raw(), MPFR_RNDN);
      mpfr_add(v[i].raw(), v[i].raw(), ws.t.raw(), MPFR_RNDN);
    }
  }

  void add_term(const std::vector<PrecReal>& v, long k, PrecReal& acc, Ws& ws) const {
    mpfr_set_ui(ws.num.raw(), 1, MPFR_RNDN);
    for (size_t fi = 0; fi < spec.numerator.size(); ++fi) {
      const auto& f = spec.numerator[fi];
      const PrecReal& sv = v[fidx[fi]];
      if (f.power == 1) {
        mpfr_mul(ws.num.raw(), ws.num.raw(), sv.raw(), MPFR_RNDN);
      } else {
        mpfr_pow_ui(ws.t.raw(), sv.raw(), static_cast<unsigned long>(f.power), MPFR_RNDN);
        mpfr_mul(ws.num.raw(), ws.num.raw(), ws.t.raw(), MPFR_RNDN);
      }
    }
    switch (spec.shape) {
      case SummandSpec::DenomShape::KPow:
        mpfr_set_si(ws.den.raw(), k, MPFR_RNDN);
        mpfr_pow_ui(ws.den.raw(), ws.den.raw(), static_cast<unsigned long>(spec.denom_exp),
                    MPFR_RNDN);
        break;
      case SummandSpec::DenomShape::OddPow:
        mpfr_set_si(ws.den.raw(), 2 * k - 1, MPFR_RNDN);
        mpfr_pow_ui(ws.den.raw(), ws.den.raw(), static_cast<unsigned long>(spec.denom_exp),
                    MPFR_RNDN);
        break;
      case SummandSpec::DenomShape::KTimesOdd:
        mpfr_set_si(ws.den.raw(), k, MPFR_RNDN);
        mpfr_mul_si(ws.den.raw(), ws.den.raw(), 2 * k - 1, MPFR_RNDN);
        break;
    }
    mpfr_div(ws.t.raw(), ws.num.raw(), ws.den.raw(), MPFR_RNDN);
    mpfr_add(acc.raw(), acc.raw(), ws.t.raw(), MPFR_RNDN);
  }

  void run_sequential(long K) {
    Ws ws(wp);
    while (cur_k < K) {
      long k = ++cur_k;
      advance_streams(cur, k, ws);
      add_term(cur, k, partial, ws);
      if (k % kBlock == 0) {
        block_sums.push_back(partial);
        partial = PrecReal(wp);
        partial_base = k;
      }
    }
  }

  void run_parallel(long K) {
    // bring the stream to a block boundary first
    long align = ((cur_k + kBlock - 1) / kBlock) * kBlock;
    run_sequential(std::min(align, K));
    if (cur_k >= K) return;
    long nblocks = (K - cur_k) / kBlock;
    if (nblocks == 0) {
      run_sequential(K);
      return;
    }
    // pass 1: stream snapshots at each new block start
    std::vector<std::vector<PrecReal>> snaps;
    snaps.reserve(static_cast<size_t>(nblocks));
    Ws ws(wp);
    long base = cur_k;
    for (long b = 0; b < nblocks; ++b) {
      snaps.push_back(cur);
      for (long k = base + b * kBlock + 1; k <= base + (b + 1) * kBlock; ++k)
        advance_streams(cur, k, ws);
    }
    cur_k = base + nblocks * kBlock;
    // pass 2: per-block term sums, any thread order
    std::vector<PrecReal> sums(static_cast<size_t>(nblocks), PrecReal(wp));
    std::atomic<long> next{0};
    auto worker = [&]() {
      Ws lws(wp);
      for (;;) {
        long b = next.fetch_add(1);
        if (b >= nblocks) return;
        std::vector<PrecReal> v = snaps[static_cast<size_t>(b)];
        PrecReal acc(wp);
        for (long k = base + b * kBlock + 1; k <= base + (b + 1) * kBlock; ++k) {
          advance_streams(v, k, lws);
          add_term(v, k, acc, lws);
        }
        sums[static_cast<size_t>(b)] = acc;
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& s : sums) block_sums.push_back(std::move(s));
    partial_base = cur_k;
    run_sequential(K);
  }
};

DirectSummer::DirectSummer(const SummandSpec& spec, long precision_bits, int threads)
    : impl_(std::make_unique<Impl>(spec, precision_bits, threads < 1 ? 1 : threads)) {}
DirectSummer::~DirectSummer() = default;

void DirectSummer::extend(long K) {
  if (K <= impl_->cur_k) return;
  if (impl_->threads > 1)
    impl_->run_parallel(K);
  else
    impl_->run_sequential(K);
}

PrecReal DirectSummer::total() const {
  PrecReal acc(impl_->wp);
  for (const auto& b : impl_->block_sums) acc += b;
  acc += impl_->partial;
  return acc;
}

long DirectSummer::current() const { return impl_->cur_k; }

PrecReal partial_sum(const SummandSpec& spec, long K, long precision_bits, int threads) {
  if (K < 1) throw std::invalid_argument("partial_sum: K must be >= 1");
  DirectSummer ds(spec, precision_bits, threads);
  ds.extend(K);
  return ds.total();
}

// ------------------------------------------------------- accelerated engine

namespace {

struct TailSplit {
  PrecReal value;
  PrecReal em_error;
  PrecReal omitted;  // magnitude of the last two retained-order programme
  long terms{0};
};

// Evaluate the tail of the series at cutoff K.  Orders q <= qmax-2 contribute
// to the value; the two highest orders provide the truncation estimate.
TailSplit series_tail(const AsymSeries& s, long K, long wp, ConstantsTable& tab) {
  TailSplit r{PrecReal(wp), PrecReal(wp), PrecReal(wp), 0};
  int qmax = s.qmax();
  for (const auto& [key, coeff] : s.terms()) {
    auto [p, q] = key;
    TailValue tv = log_power_tail(p, q, K, wp, 19);
    PrecReal c = cf_eval(coeff, wp, tab);
    if (q >= qmax - 1) {
      r.omitted += (c * tv.value).abs() + c.abs() * tv.error;
    } else {
      r.value += c * tv.value;
      r.em_error += c.abs() * tv.error;
      ++r.terms;
    }
  }
  return r;
}

}  // namespace

TailValue asym_tail(const AsymSeries& s, long K, long precision_bits, ConstantsTable& tab) {
  TailSplit t = series_tail(s, K, precision_bits, tab);
  return {t.value, t.em_error + t.omitted};
}

EvalReport evaluate_accelerated(const SummandSpec& spec, const std::string& target_abs_err,
                                long precision_bits, const EvalConfig& cfg) {
  return evaluate_accelerated(spec, PrecReal::from_decimal(target_abs_err, precision_bits + 64),
                              precision_bits, cfg);
}

EvalReport evaluate_accelerated(const SummandSpec& spec, const PrecReal& target_abs_err,
                                long precision_bits, const EvalConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  long wp = precision_bits + 64;
  ConstantsTable& tab = table_of(cfg);

  PrecReal target = target_abs_err.with_precision(wp);
  if (!(target > PrecReal(wp))) throw std::invalid_argument("target_abs_err must be positive");
  PrecReal floor_tgt = PrecReal::from_long(1, wp).mul_2exp(-(precision_bits - 16));
  if (!(target > floor_tgt))
    throw std::invalid_argument(
        "target_abs_err too small for the requested precision (needs > 2^-(prec-16))");

  // initial expansion depth from the target and starting cutoff
  double tgt_log2 = std::log2(std::max(target.to_double(), 1e-300));
  if (target.exponent() < -900) tgt_log2 = static_cast<double>(target.exponent());
  double k_log2 = std::log2(static_cast<double>(cfg.start_cutoff));
  int qext = static_cast<int>(-tgt_log2 / k_log2) + 6 - spec.denominator_weight();
  qext = std::max(qext, cfg.expansion_order);
  qext = std::min(qext, 38);

  long K = cfg.start_cutoff;
  // the Euler-Maclaurin depth is capped by the Bernoulli table, so deep
  // targets need a larger direct region up front: em error ~ K^-(d+39)
  {
    double need = -tgt_log2 / 3.3219 + 6.0;  // decimal digits wanted
    double kdigits = need / static_cast<double>(spec.denominator_weight() + 38);
    if (kdigits > 4.0) {
      long k0 = static_cast<long>(std::pow(10.0, std::min(kdigits, 7.0)));
      K = std::max(K, k0);
    }
  }
  DirectSummer ds(spec, wp, cfg.threads);
  std::string diag;

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    int qmax = spec.denominator_weight() + qext + 2;
    AsymSeries series = summand_series(spec, qmax);

    ds.extend(K);
    TailSplit t1 = series_tail(series, K, wp, tab);
    PrecReal val1 = ds.total() + t1.value;

    long K2 = 2 * K;
    if (K2 > cfg.max_terms)
      throw NonConvergentError("max_terms cap reached for " + spec.str() + diag);
    ds.extend(K2);
    TailSplit t2 = series_tail(series, K2, wp, tab);
    PrecReal val2 = ds.total() + t2.value;

    PrecReal delta = (val1 - val2).abs();
    PrecReal slack = (val2.abs() + PrecReal::from_long(1, wp)).mul_2exp(-(wp - 24));
    PrecReal bound = (t2.omitted + t2.em_error).mul_2exp(1) + slack;
    // the doubling difference must be explained by the tail bounds at the
    // two cutoffs, otherwise something is off and we keep escalating
    PrecReal explained =
        (t1.omitted + t1.em_error + t2.omitted + t2.em_error).mul_2exp(2) + slack;
    if (delta > explained) bound = bound + delta.mul_2exp(1);

    if (bound <= target) {
      EvalReport rep{val2.with_precision(precision_bits), bound.with_precision(precision_bits),
                     ds.current(), t2.terms, 0.0};
      rep.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return rep;
    }
    diag += "\n  attempt " + std::to_string(attempt) + ": K=" + std::to_string(K2) +
            " qmax=" + std::to_string(qmax) + " bound=" + bound.to_decimal(4) +
            " (omitted=" + t2.omitted.to_decimal(4) + ", em=" + t2.em_error.to_decimal(4) +
            ", doubling=" + delta.to_decimal(4) + ")";
    bool trunc_dominates = t2.omitted > delta;
    if (trunc_dominates && qext < 38) {
      qext = std::min(qext + 6, 38);
    } else {
      K = K2;
    }
  }
  throw NonConvergentError("accelerated evaluation failed to reach target for " + spec.str() +
                           diag);
}

PrecReal crude_tail_bound(const SummandSpec& spec, long K, long precision_bits) {
  long wp = precision_bits + 32;
  // Bound every order-1 factor by (1 + ln 2k), every higher-order factor by 2.
  int logs = 0;
  Rational cbound(1);
  for (const auto& f : spec.numerator) {
    if (f.kind.order == 1)
      logs += f.power;
    else
      cbound *= Rational(2).pow(f.power);
  }
  int d = spec.denominator_weight();  // (2k-1)^c >= k^c and k(2k-1) >= k^2
  PrecReal Kr = PrecReal::from_long(K, wp);
  PrecReal one = PrecReal::from_long(1, wp);
  PrecReal c1 = one + PrecReal::from_long(2, wp).ln();  // 1 + ln 2
  PrecReal bound(wp);
  // integral_K^inf (1+ln2 + ln x)^logs / x^d dx expanded binomially
  for (int j = 0; j <= logs; ++j) {
    PrecReal coef = PrecReal::from_rational(binomial(logs, j), wp) * c1.pow_int(logs - j);
    bound += coef * tail_integral(j, d, Kr);
  }
  // add the K-th term once (integral bound starts at K)
  return (bound * PrecReal::from_rational(cbound, wp)).with_precision(precision_bits);
}

}  // namespace esum
