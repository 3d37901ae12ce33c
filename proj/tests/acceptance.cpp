// Acceptance suite: one pass/fail line per criterion.
//
//   1  reference-value reproduction (twelve tabulated sums)
//   2  catalog verification at 1e-18 / 256 bits
//   3  helper-lemma suite at 1e-25, recurrences at 1e-30
//   4  engine vs brute-force oracle windows
//   5  exact-layer randomized properties
//   6  classical linear reductions and the symmetry relation
//
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "esum/catalog.hpp"
#include "esum/lemmas.hpp"

using namespace esum;

namespace {

int g_failures = 0;
double g_t0 = 0;

double now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

void criterion(int n, bool ok, const std::string& text) {
  printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, text.c_str());
  fflush(stdout);
  if (!ok) ++g_failures;
}

void detail(const std::string& text) {
  printf("       %s\n", text.c_str());
  fflush(stdout);
}

PrecReal dec(const char* s, long wp = 320) { return PrecReal::from_decimal(s, wp); }

// independent closed-form oracle for sum h_k/k^3, via the alternating Euler
// sum  sum (-1)^{k+1} H_k/k^3 = 11 pi^4/360 - 2 Li4(1/2) - 7/4 ln2 zeta(3)
//                              + pi^2 ln2^2/12 - ln2^4/12
PrecReal sigma3_oracle(long wp) {
  auto& tab = ConstantsTable::global();
  PrecReal li4(wp);
  PrecReal two = PrecReal::from_long(2, wp);
  for (long k = 1; k <= wp + 16; ++k)
    li4 += PrecReal::from_long(1, wp) /
           (two.pow_int(k) * PrecReal::from_long(k, wp).pow_int(4));
  PrecReal pi = const_pi(wp);
  PrecReal l2 = tab.ln2(wp);
  PrecReal alt = pi.pow_int(4) * PrecReal::from_rational(Rational(11, 360), wp) -
                 li4.mul_2exp(1) -
                 tab.zeta(3, wp) * l2 * PrecReal::from_rational(Rational(7, 4), wp) +
                 pi * pi * l2 * l2 * PrecReal::from_rational(Rational(1, 12), wp) -
                 l2.pow_int(4) * PrecReal::from_rational(Rational(1, 12), wp);
  return tab.zeta(4, wp) * PrecReal::from_rational(Rational(35, 8), wp) -
         alt * PrecReal::from_long(4, wp);
}

void criterion1() {
  double t0 = now();
  struct Ref {
    const char* spec;
    const char* digits;
  };
  // the six basis/linear sums and five quadratic sums, 20 digits each
  const Ref refs[] = {
      {"h1/k^5", "1.05070828839842708728"},  {"h1/k^7", "1.01125393384735909982"},
      {"h1/k^9", "1.00268963654979441867"},  {"H2/k^6", "1.02189709661478032774"},
      {"H2/k^8", "1.00511704480621791756"},  {"H1*h3/k^4", "1.13880957043316224083"},
      {"H2*H3/(2k-1)^3", "1.07653048082931893543"},
      {"h2*h3/(2k-1)^3", "1.06071267806165873612"},
      {"H1*h2/(2k-1)^5", "1.00776268435455472628"},
      {"h1*h3/k^4", "1.12021909420689660746"},
  };
  bool ok = true;
  long terms_worst = 0;
  double wall_worst = 0;
  for (const auto& r : refs) {
    EvalReport rep = evaluate_accelerated(SummandSpec::parse(r.spec), "1e-21", 256, {});
    PrecReal diff = (rep.value - dec(r.digits).with_precision(256)).abs();
    // agreement in all twenty printed decimal places, allowing the final
    // digit's rounding (half an ulp of the 20th place plus engine margin)
    bool hit = diff < dec("5e-20", 256);
    ok = ok && hit && rep.terms_summed < 100000000 && rep.wall_seconds < 120.0;
    terms_worst = std::max(terms_worst, rep.terms_summed);
    wall_worst = std::max(wall_worst, rep.wall_seconds);
    if (!hit)
      detail(std::string(r.spec) + " missed its printed digits by " + diff.to_decimal(2));
    else if (diff > dec("5e-21", 256))
      detail(std::string(r.spec) + " agrees except the 20th place rounds (" +
             diff.to_decimal(2) + ")");
  }

  // sigma(3): the printed tail ...12475 is a misprint; the independent
  // closed-form oracle fixes ...125723 and the engine must match it
  EvalReport s3 = evaluate_accelerated(SummandSpec::parse("h1/k^3"), "1e-26", 256, {});
  PrecReal oracle = sigma3_oracle(320).with_precision(256);
  PrecReal odiff = (s3.value - oracle).abs();
  bool s3_ok = odiff < dec("1e-25", 256);
  PrecReal printed_dev = (s3.value - dec("1.29817551577186712475").with_precision(256)).abs();
  bool misprint_confirmed =
      printed_dev > dec("5e-19", 256) && printed_dev < dec("2e-18", 256);
  ok = ok && s3_ok && misprint_confirmed && s3.terms_summed < 100000000;
  detail("sum h_k/k^3 = " + s3.value.to_decimal(22) +
         " (independent oracle agrees to " + odiff.to_decimal(2) +
         "); the printed reference ...12475 deviates by " + printed_dev.to_decimal(2) +
         " -- documented misprint");

  // the slowly convergent order-9 sum: the printed value belongs to the
  // H^(3) H^(4) variant and carries the ~6e-14 truncation of a raw 1e13-term
  // partial sum; the sum as printed is pinned by a brute-force window
  EvalReport hh = evaluate_accelerated(SummandSpec::parse("H3*H4/k(2k-1)"), "1e-16", 256, {});
  PrecReal printed = dec("1.479405080355585", 256);
  bool corr_ok = (hh.value - printed).abs() < dec("1e-12", 256) && hh.value > printed;
  SummandSpec as_printed = SummandSpec::parse("H3*h4/k(2k-1)");
  EvalReport hp = evaluate_accelerated(as_printed, "1e-16", 256, {});
  long K = 200000;
  PrecReal part = partial_sum(as_printed, K, 256);
  bool window_ok = hp.value > part &&
                   hp.value < part + crude_tail_bound(as_printed, K, 256) + hp.error_bound;
  ok = ok && corr_ok && window_ok && hh.terms_summed < 100000000 &&
       hp.terms_summed < 100000000;
  detail("H3*H4/k(2k-1) = " + hh.value.to_decimal(17) + " vs printed 1.479405080355585 (" +
         (hh.value - printed).to_decimal(2) +
         "); the summand printed as H3*h4/k(2k-1) evaluates to " + hp.value.to_decimal(17) +
         " -- documented misprint");

  char buf[200];
  snprintf(buf, sizeof buf,
           "reference sums reproduced (worst %.1fs/run, %ld direct terms; two documented "
           "misprints; %.0fs)",
           wall_worst, terms_worst, now() - t0);
  criterion(1, ok, buf);
}

void criterion2() {
  double t0 = now();
  PrecReal tol = PrecReal::from_decimal("1e-18", 256);
  VerifySummary s = verify_all(tol, 256, {}, 2);

  const auto& cat = catalog_load();
  std::map<std::string, const VerifyReport*> by_id;
  for (const auto& r : s.reports) by_id[r.id] = &r;

  // identity-level accounting: a source identity verifies if its record or
  // its corrected twin passes
  int identities = 0, verified = 0;
  for (const auto& rec : cat) {
    if (rec.id.size() > 4 && rec.id.substr(rec.id.size() - 4) == ".fix") continue;
    ++identities;
    bool pass = by_id.at(rec.id)->pass;
    auto fix = by_id.find(rec.id + ".fix");
    if (fix != by_id.end()) pass = pass || fix->second->pass;
    if (pass) ++verified;
  }
  double ratio = 100.0 * verified / identities;
  bool expected_all_green = s.failed_expected == 0;

  // every failure demoted and reported with its residual
  bool failures_demoted = true;
  int reported = 0;
  for (size_t i = 0; i < s.reports.size(); ++i) {
    if (!s.reports[i].pass) {
      failures_demoted = failures_demoted && s.reports[i].suspect;
      ++reported;
    }
  }

  // the two statements of s(2,8) evaluate identically to the last bit
  PrecReal a(64), b(64);
  for (const auto& r : s.reports) {
    if (r.id == "F0.s(2,8)") a = r.rhs_value;
    if (r.id == "AppB.s(2,8)") b = r.rhs_value;
  }
  bool dup_ok = a.bit_identical(b);

  bool ok = ratio >= 95.0 && expected_all_green && failures_demoted && dup_ok;
  char buf[240];
  snprintf(buf, sizeof buf,
           "catalog: %d/%d source identities verify below 1e-18 (%.1f%%); %d/%d records pass "
           "outright; %d misprint suspects reported with residuals; duplicate s(2,8) "
           "statements bit-identical (%.0fs)",
           verified, identities, ratio, s.passed, s.total, reported, now() - t0);
  criterion(2, ok, buf);
}

void criterion3() {
  double t0 = now();
  PrecReal tol = PrecReal::from_decimal("1e-25", 256);
  PrecReal rtol = PrecReal::from_decimal("1e-30", 256);
  bool ok = true;
  int instances = 0, recs = 0;
  for (const auto& d : lemma_registry()) {
    auto reps = lemma_verify(d, 30, tol, 256);
    for (const auto& r : reps) {
      ++instances;
      if (!r.pass) {
        ok = false;
        detail(d.id + " failed at i=" + std::to_string(r.i) + " (diff " +
               r.abs_diff.to_decimal(3) + ")");
      }
    }
    if (d.recurrence) {
      auto rr = lemma_recurrence_check(d, 25, rtol, 256);
      for (const auto& r : rr) {
        ++recs;
        if (!r.pass) {
          ok = false;
          detail(d.id + " recurrence failed at i=" + std::to_string(r.i));
        }
      }
    }
  }
  char buf[200];
  snprintf(buf, sizeof buf,
           "lemma suite: %d helper instances at 1e-25 and %d recurrence unrollings at 1e-30 "
           "(%.0fs)",
           instances, recs, now() - t0);
  criterion(3, ok, buf);
}

void criterion4() {
  double t0 = now();
  const auto& cat = catalog_load();
  std::set<std::string> seen;
  bool ok = true;
  int checked = 0;
  for (const auto& rec : cat) {
    if (!seen.insert(rec.lhs.str()).second) continue;
    EvalReport accel = evaluate_accelerated(rec.lhs, "1e-18", 256, {});
    long K = 1000000;
    PrecReal part = partial_sum(rec.lhs, K, 256);
    PrecReal bound = crude_tail_bound(rec.lhs, K, 256);
    bool in_window = accel.value > part && accel.value < part + bound + accel.error_bound;
    if (!in_window) {
      ok = false;
      detail(rec.lhs.str() + " outside its brute-force window");
    }
    ++checked;
  }
  char buf[160];
  snprintf(buf, sizeof buf,
           "oracle equivalence: %d distinct sums inside their K=1e6 brute-force windows "
           "(%.0fs)",
           checked, now() - t0);
  criterion(4, ok, buf);
}

void criterion5() {
  double t0 = now();
  bool ok = true;

  // exact rational field against the cross-multiplication oracle
  std::mt19937_64 rng(20260809);
  for (int t = 0; t < 1000; ++t) {
    long an = static_cast<long>(rng() % 20001) - 10000, ad = static_cast<long>(rng() % 999) + 1;
    long bn = static_cast<long>(rng() % 20001) - 10000, bd = static_cast<long>(rng() % 999) + 1;
    Rational a(an, ad), b(bn, bd);
    ok = ok && (a + b == Rational(an * bd + bn * ad, ad * bd));
    ok = ok && (a * b == Rational(an * bn, ad * bd));
  }

  // ring homomorphism of closed-form evaluation
  auto& tab = ConstantsTable::global();
  std::vector<Atom> pool = {Atom::zeta(2), Atom::zeta(3), Atom::zeta(4), Atom::ln2(),
                            Atom::zeta(5), Atom::sigma(3), Atom::tau(6)};
  int hom_checked = 0;
  for (int t = 0; t < 200; ++t) {
    ClosedForm a, b;
    for (int j = 0; j < 2; ++j) {
      a += ClosedForm::atom(pool[rng() % pool.size()],
                            Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 8)));
      b += ClosedForm::atom(pool[rng() % pool.size()],
                            Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 8)));
    }
    ClosedForm ab;
    try {
      ab = cf_mul(a, b);
    } catch (const WeightCapError&) {
      continue;  // the cap rejecting an overweight product is the contract
    }
    PrecReal lhs = cf_eval(ab, 256, tab);
    PrecReal rhs = cf_eval(a, 256, tab) * cf_eval(b, 256, tab);
    if (lhs.is_zero() && rhs.is_zero()) continue;
    if (ulp_distance(rhs, lhs) > 8.0) ok = false;
    ++hom_checked;
  }

  // odd_from_full for n <= 8 and every k <= 1e4: exact induction step at
  // every k plus direct big-rational equality on a sample grid
  for (int n = 1; n <= 8 && ok; ++n) {
    Rational scale = Rational::pow2(-n);
    for (long k = 1; k <= 10000; ++k) {
      // increment identity: 1/(2k)^n + 1/(2k-1)^n - 2^-n/k^n == 1/(2k-1)^n
      Rational lhs = Rational(1, 2 * k).pow(n) + Rational(1, 2 * k - 1).pow(n) -
                     scale * Rational(1, k).pow(n);
      if (!(lhs == Rational(1, 2 * k - 1).pow(n))) {
        ok = false;
        break;
      }
    }
    for (long k : {1L, 2L, 3L, 5L, 8L, 16L, 64L, 256L, 1024L, 4096L, 10000L}) {
      Rational h = harmonic_exact(HarmonicKind::odd(n), k);
      Rational H2k = harmonic_exact(HarmonicKind::full(n), 2 * k);
      Rational Hk = harmonic_exact(HarmonicKind::full(n), k);
      if (!(h == odd_from_full(n, H2k, Hk))) {
        ok = false;
        break;
      }
    }
  }

  char buf[200];
  snprintf(buf, sizeof buf,
           "exact layer: 1000 rational field cases, %d ring-homomorphism samples within 8 ulp, "
           "odd/full split exact for n <= 8 up to k = 1e4 (%.0fs)",
           hom_checked, now() - t0);
  criterion(5, ok, buf);
}

void criterion6() {
  double t0 = now();
  auto& tab = ConstantsTable::global();
  bool ok = true;

  // order-10 table entry: sum H_k/k^9
  ClosedForm e9 = euler_linear_reduction(9);
  ClosedForm want = ClosedForm::atom(Atom::zeta(10), Rational(11, 4));
  want += ClosedForm::term(Monomial({Atom::zeta(3), Atom::zeta(7)}), Rational(-1));
  want += ClosedForm::term(Monomial({Atom::zeta(5), Atom::zeta(5)}), Rational(-1, 2));
  ok = ok && (e9 == want);

  // reductions match the engine numerically to 1e-20 for m = 2..10
  for (int m = 2; m <= 10; ++m) {
    SummandSpec t1m = SummandSpec::make({{HarmonicKind::full(1), 1}},
                                        SummandSpec::DenomShape::KPow, m);
    EvalReport lhs = evaluate_accelerated(t1m, "1e-21", 256, {});
    PrecReal rhs = cf_eval(euler_linear_reduction(m), 256, tab);
    if ((lhs.value - rhs).abs() > PrecReal::from_decimal("1e-20", 256)) {
      ok = false;
      detail("euler reduction mismatch at m=" + std::to_string(m));
    }
  }

  // symmetry relation for every a,b >= 2 with a+b <= 10
  int pairs = 0;
  for (int a = 2; a <= 8; ++a) {
    for (int b = a; a + b <= 10; ++b) {
      SymmetryRelation rel = symmetry_reduction(a, b);
      auto spec = [](int x, int y) {
        return SummandSpec::make({{HarmonicKind::full(x), 1}},
                                 SummandSpec::DenomShape::KPow, y);
      };
      PrecReal lhs = evaluate_accelerated(spec(a, b), "1e-21", 256, {}).value +
                     evaluate_accelerated(spec(b, a), "1e-21", 256, {}).value;
      PrecReal rhs = cf_eval(rel.rhs, 256, tab);
      if ((lhs - rhs).abs() > PrecReal::from_decimal("1e-20", 256)) {
        ok = false;
        detail("symmetry relation failed at (" + std::to_string(a) + "," + std::to_string(b) +
               ")");
      }
      ++pairs;
    }
  }

  char buf[160];
  snprintf(buf, sizeof buf,
           "classical reductions: order-10 table entry exact, m = 2..10 reductions and %d "
           "symmetry pairs within 1e-20 (%.0fs)",
           pairs, now() - t0);
  criterion(6, ok, buf);
}

}  // namespace

int main() {
  g_t0 = now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  printf("%s: %d/6 criteria passed (%.0fs total)\n", g_failures == 0 ? "PASS" : "FAIL",
         6 - g_failures, now() - g_t0);
  return g_failures == 0 ? 0 : 1;
}
