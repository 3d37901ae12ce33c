#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esum/general_sum.hpp"
#include "esum/series.hpp"

using namespace esum;

TEST_CASE("summand grammar round trip and validation") {
  for (const char* s : {"H2*h1/k^5", "h1^2/(2k-1)^4", "H3*H4/k(2k-1)", "h1/k^3", "H2/k^8"}) {
    SummandSpec spec = SummandSpec::parse(s);
    CHECK(SummandSpec::parse(spec.str()) == spec);
  }
  CHECK(SummandSpec::parse("h1*H2/k^5").str() == "H2*h1/k^5");
  CHECK(SummandSpec::parse("h1*h1/k^2").str() == "h1^2/k^2");
  CHECK(SummandSpec::parse("H3*h4/k(2k-1)").order() == 9);
  CHECK(SummandSpec::parse("h2/k^4").order() == 6);
  CHECK_THROWS_AS(SummandSpec::parse("h1/k^1"), DivergentSpecError);
  CHECK_THROWS_AS(SummandSpec::parse("h1/(2k-1)^1"), DivergentSpecError);
  CHECK_THROWS(SummandSpec::parse("x1/k^3"));
}

TEST_CASE("partial sums by hand") {
  // h_1/1 = 1
  PrecReal p1 = partial_sum(SummandSpec::parse("h1/k^3"), 1, 128);
  CHECK(p1 == PrecReal::from_long(1, 128));
  // k=2: 1 + (4/3)^2/4 = 13/9
  PrecReal p2 = partial_sum(SummandSpec::parse("h1^2/k^2"), 2, 192);
  CHECK(ulp_distance(p2, PrecReal::from_rational(Rational(13, 9), 192)) <= 2.0);
}

TEST_CASE("partial sums increase monotonically and sit below the reference") {
  SummandSpec spec = SummandSpec::parse("h1/k^3");
  PrecReal ref = PrecReal::from_decimal("1.29817551577186712572", 256);
  PrecReal p = partial_sum(spec, 1000000, 256);
  CHECK(p < ref);
  CHECK(ref - p < PrecReal::from_decimal("1e-11", 256));
  CHECK(ref - p > PrecReal(256));
}

TEST_CASE("block determinism: thread count does not change bits") {
  SummandSpec spec = SummandSpec::parse("H2*h1/k^5");
  PrecReal a = partial_sum(spec, 200000, 256, 1);
  PrecReal b = partial_sum(spec, 200000, 256, 2);
  PrecReal c = partial_sum(spec, 200000, 256, 1);
  CHECK(a.bit_identical(b));
  CHECK(a.bit_identical(c));
}

TEST_CASE("tail integral closed forms") {
  long wp = 256;
  // p=0, q=2, K=10: 1/K
  PrecReal v = tail_integral(0, 2, PrecReal::from_long(10, wp));
  CHECK(ulp_distance(v, PrecReal::from_decimal("0.1", wp)) <= 2.0);
  // p=1, q=2, K=e: int_e^inf ln x/x^2 = 2/e
  PrecReal e = PrecReal::from_long(1, wp).exp();
  PrecReal v2 = tail_integral(1, 2, e);
  CHECK(ulp_distance(v2, PrecReal::from_long(2, wp) / e) <= 8.0);
}

namespace {
// Romberg quadrature oracle for int_K^inf (ln x)^p / x^q dx with x = K e^t.
PrecReal romberg_tail(int p, int q, long K, long wp) {
  PrecReal Kr = PrecReal::from_long(K, wp);
  PrecReal lnK = Kr.ln();
  PrecReal scale = Kr.pow_int(-(q - 1));
  auto g = [&](const PrecReal& t) {
    // (lnK + t)^p e^{-(q-1)t}
    PrecReal base = lnK + t;
    return base.pow_int(p) * (-t * PrecReal::from_long(q - 1, wp)).exp();
  };
  PrecReal T = PrecReal::from_long(120, wp);  // exp(-120(q-1)) is negligible
  const int levels = 15;
  std::vector<PrecReal> row;
  long n = 1;
  PrecReal h = T;
  PrecReal trap = (g(PrecReal(wp)) + g(T)) * h / PrecReal::from_long(2, wp);
  row.push_back(trap);
  for (int lev = 1; lev < levels; ++lev) {
    h = h / PrecReal::from_long(2, wp);
    PrecReal add(wp);
    for (long i = 1; i <= n; ++i)
      add += g(h * PrecReal::from_long(2 * i - 1, wp));
    n *= 2;
    trap = trap / PrecReal::from_long(2, wp) + add * h;
    std::vector<PrecReal> next;
    next.push_back(trap);
    Rational four(4);
    for (size_t m = 0; m < row.size(); ++m) {
      PrecReal f4 = PrecReal::from_rational(four, wp);
      next.push_back((f4 * next[m] - row[m]) / (f4 - PrecReal::from_long(1, wp)));
      four *= Rational(4);
    }
    row = next;
  }
  return row.back() * scale;
}
}  // namespace

TEST_CASE("tail integral matches a Romberg quadrature oracle") {
  long wp = 320;
  PrecReal mine = tail_integral(2, 3, PrecReal::from_long(100, wp));
  PrecReal oracle = romberg_tail(2, 3, 100, wp);
  CHECK((mine - oracle).abs() < PrecReal::from_decimal("1e-25", wp));
}

TEST_CASE("log power tails against exact zeta tails") {
  auto& tab = ConstantsTable::global();
  long wp = 320;
  for (long K : {100L, 5000L}) {
    for (int q : {2, 3, 5}) {
      TailValue tv = log_power_tail(0, q, K, wp);
      PrecReal exact = tab.zeta(q, wp) -
                       PrecReal::from_rational(harmonic_exact(HarmonicKind::full(q), K), wp);
      // the comparison side cancels two O(1) quantities, so allow its
      // rounding in units of zeta's ulp
      CHECK((tv.value - exact).abs() <= tv.error + tab.zeta(q, wp).ulp().mul_2exp(4));
    }
  }
}

TEST_CASE("accelerated evaluation hits the basis references") {
  auto& tab = ConstantsTable::global();
  EvalConfig cfg;
  SummandSpec s3 = SummandSpec::parse("h1/k^3");
  EvalReport r = evaluate_accelerated(s3, "1e-22", 256, cfg);
  PrecReal ref = PrecReal::from_decimal("1.29817551577186712572287641446", 320);
  CHECK((r.value - ref.with_precision(256)).abs() < PrecReal::from_decimal("1e-22", 256));
  CHECK(r.error_bound < PrecReal::from_decimal("1e-22", 256));
  CHECK(r.terms_summed < 100000000);

  SummandSpec t8 = SummandSpec::parse("H2/k^8");
  EvalReport r8 = evaluate_accelerated(t8, "1e-21", 256, cfg);
  PrecReal ref8 = PrecReal::from_decimal("1.00511704480621791756", 256);
  CHECK((r8.value - ref8).abs() < PrecReal::from_decimal("5e-21", 256));

  // accelerated value exceeds every partial sum (positive summands)
  PrecReal p = partial_sum(s3, 5000, 256);
  CHECK(r.value > p);
}

TEST_CASE("order-9 mixed-denominator sums in few evaluations") {
  // As printed, the reference table pairs the value 1.479405080355585 with
  // H^(3) h^(4) over k(2k-1).  That value belongs to the H^(3) H^(4)
  // variant (third-family order 8); the printed digits carry the ~6e-14
  // truncation of a raw 1e13-term partial sum.  Both sums are pinned here.
  EvalReport hh = evaluate_accelerated(SummandSpec::parse("H3*H4/k(2k-1)"), "1e-16", 256, {});
  PrecReal printed = PrecReal::from_decimal("1.479405080355585", 256);
  CHECK((hh.value - printed).abs() < PrecReal::from_decimal("1e-12", 256));
  CHECK(hh.value > printed);  // truncated partial sums undershoot
  CHECK(hh.terms_summed < 100000000);

  SummandSpec spec = SummandSpec::parse("H3*h4/k(2k-1)");
  EvalReport r = evaluate_accelerated(spec, "1e-16", 256, {});
  long K = 300000;
  PrecReal p = partial_sum(spec, K, 256);
  CHECK(r.value > p);
  CHECK(r.value < p + crude_tail_bound(spec, K, 256) + r.error_bound);
  CHECK(r.terms_summed < 100000000);
}

TEST_CASE("oracle consistency against brute force plus crude tail bound") {
  for (const char* txt : {"h1/k^3", "H2*h2/k^4", "h1^2/(2k-1)^4", "H1*h1/k^2"}) {
    SummandSpec spec = SummandSpec::parse(txt);
    EvalReport r = evaluate_accelerated(spec, "1e-18", 256, {});
    long K = 100000;
    PrecReal p = partial_sum(spec, K, 256);
    PrecReal bound = crude_tail_bound(spec, K, 256);
    CHECK(r.value > p);
    CHECK(r.value < p + bound + r.error_bound);
  }
  // one deep window at K = 1e7
  SummandSpec spec = SummandSpec::parse("h1/k^3");
  EvalReport r = evaluate_accelerated(spec, "1e-18", 256, {});
  PrecReal p = partial_sum(spec, 10000000, 256);
  CHECK(r.value > p);
  CHECK(r.value < p + crude_tail_bound(spec, 10000000, 256) + r.error_bound);
}

TEST_CASE("error bound honesty on reference sums") {
  struct Case { const char* spec; const char* ref; };
  const Case cases[] = {
      {"h1/k^5", "1.05070828839842708728"},
      {"h1/k^7", "1.01125393384735909982"},
      {"h1/k^9", "1.00268963654979441867"},
      {"H2/k^6", "1.02189709661478032774"},
  };
  for (const auto& c : cases) {
    EvalReport r = evaluate_accelerated(SummandSpec::parse(c.spec), "1e-21", 256, {});
    PrecReal ref = PrecReal::from_decimal(c.ref, 256);
    CHECK((r.value - ref).abs() <= r.error_bound + PrecReal::from_decimal("5e-21", 256));
  }
}

TEST_CASE("engine failure paths") {
  EvalConfig cfg;
  cfg.max_terms = 16000;
  CHECK_THROWS_AS(evaluate_accelerated(SummandSpec::parse("h1/k^2"), "1e-40", 256, cfg),
                  NonConvergentError);
  CHECK_THROWS(evaluate_accelerated(SummandSpec::parse("h1/k^3"), "1e-90", 256, {}));
}

TEST_CASE("general harmonic sums over mixed denominators") {
  auto& tab = ConstantsTable::global();
  long wp = 256;
  PrecReal tgt = PrecReal::from_decimal("1e-20", wp);
  // sum h_k/(k^2(2k-1)) = 2 sum h_k/(k(2k-1)) - sum h_k/k^2 (partial fractions)
  GeneralSum g{{{HarmonicKind::odd(1), 1}}, 2, 1};
  EvalReport r = general_harmonic_sum(g, tgt, wp);
  EvalReport a = evaluate_accelerated(SummandSpec::parse("h1/k(2k-1)"), tgt, wp, {});
  EvalReport b = evaluate_accelerated(SummandSpec::parse("h1/k^2"), tgt, wp, {});
  PrecReal want = a.value + a.value - b.value;
  CHECK((r.value - want).abs() < PrecReal::from_decimal("1e-19", wp));
  // pure kernel: sum 1/(k^2(2k-1)^2) = pi^2 - 8 ln 2 ... checked against brute force
  GeneralSum k22{{}, 2, 2};
  EvalReport rk = general_harmonic_sum(k22, tgt, wp);
  PrecReal brute(wp);
  for (long k = 1; k <= 400000; ++k) {
    PrecReal kk = PrecReal::from_long(k, wp);
    brute += PrecReal::from_long(1, wp) / (kk * kk * PrecReal::from_long(2 * k - 1, wp).pow_int(2));
  }
  CHECK((rk.value - brute).abs() < PrecReal::from_decimal("1e-10", wp));
}
