#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "esum/partial_fractions.hpp"
#include "esum/harmonic.hpp"
#include "esum/constants.hpp"

using namespace esum;

TEST_CASE("two simple poles: 1/((k+i)(k+2i))") {
  PFDecomposition d = partial_fractions({{PoleFamily::PlusI, 1}, {PoleFamily::Plus2I, 1}});
  REQUIRE(d.terms.size() == 2);
  // (1/i)[1/(k+i) - 1/(k+2i)]
  for (const auto& t : d.terms) {
    CHECK(t.j == 1);
    Rational c = t.coeff.eval(Rational(5));
    if (t.fam == PoleFamily::PlusI) CHECK(c == Rational(1, 5));
    if (t.fam == PoleFamily::Plus2I) CHECK(c == Rational(-1, 5));
  }
  CHECK(pf_recombination_check(d, 3, 7));
}

TEST_CASE("the order-6 kernel 1/((k+i)^4(k+2i)^2)") {
  PFDecomposition d = partial_fractions({{PoleFamily::PlusI, 4}, {PoleFamily::Plus2I, 2}});
  // five nonzero terms; leading coefficients 1/i^2 and -2/i^3
  std::map<std::pair<int, int>, Rational> got;
  for (const auto& t : d.terms)
    got[{t.fam == PoleFamily::PlusI ? 0 : 1, t.j}] = t.coeff.eval(Rational(2));
  CHECK(got.at({0, 4}) == Rational(1, 4));    // 1/i^2 at i=2
  CHECK(got.at({0, 3}) == Rational(-2, 8));   // -2/i^3
  CHECK(got.at({0, 2}) == Rational(3, 16));   // 3/i^4
  CHECK(got.at({0, 1}) == Rational(-4, 32));  // -4/i^5
  CHECK(got.at({1, 2}) == Rational(1, 16));   // 1/i^4
  CHECK(got.at({1, 1}) == Rational(4, 32));   // 4/i^5
  CHECK(pf_recombination_check(d, 3, 7));
}

TEST_CASE("recombination is exact at random integer points") {
  std::mt19937_64 rng(11);
  std::vector<std::vector<PoleFactor>> kernels = {
      {{PoleFamily::K, 2}, {PoleFamily::Odd, 1}},
      {{PoleFamily::K, 1}, {PoleFamily::Odd, 3}},
      {{PoleFamily::K, 3}, {PoleFamily::OddShift, 2}},
      {{PoleFamily::Odd, 2}, {PoleFamily::OddShift, 2}},
      {{PoleFamily::K, 2}, {PoleFamily::PlusI, 2}, {PoleFamily::Odd, 1}},
      {{PoleFamily::Odd, 1}, {PoleFamily::OddPlus, 1}, {PoleFamily::K, 1}},
  };
  for (const auto& k : kernels) {
    PFDecomposition d = partial_fractions(k);
    for (int t = 0; t < 5; ++t) {
      long i = 1 + static_cast<long>(rng() % 20);
      long kk = 1 + static_cast<long>(rng() % 50);
      CHECK(pf_recombination_check(d, i, kk));
    }
  }
  CHECK_THROWS(partial_fractions({{PoleFamily::K, 1}, {PoleFamily::K, 0}}));
}

TEST_CASE("kernel sums: classical closed forms") {
  auto& tab = ConstantsTable::global();
  long wp = 256;
  // sum 1/(k(2k-1)) = 2 ln 2
  ClosedForm f = kernel_sum({{PoleFamily::K, 1}, {PoleFamily::Odd, 1}}, 1);
  CHECK(f == ClosedForm::atom(Atom::ln2(), Rational(2)));
  // sum 1/((k+i)(k+2i)) = (H_{2i} - H_i)/i
  for (long i : {1L, 4L, 9L}) {
    ClosedForm g = kernel_sum({{PoleFamily::PlusI, 1}, {PoleFamily::Plus2I, 1}}, i);
    Rational want = (harmonic_exact(HarmonicKind::full(1), 2 * i) -
                     harmonic_exact(HarmonicKind::full(1), i)) / Rational(i);
    CHECK(g == ClosedForm::constant(want));
  }
  // sum 1/(k+i)^n = zeta(n) - H^(n)_i
  for (long i : {2L, 7L}) {
    ClosedForm g = kernel_sum({{PoleFamily::PlusI, 3}}, i);
    ClosedForm want = ClosedForm::atom(Atom::zeta(3)) +
                      ClosedForm::constant(-harmonic_exact(HarmonicKind::full(3), i));
    CHECK(g == want);
  }
  // sum 1/((2k-1)(2i+2k-1)) = h_i/(2i)
  for (long i : {1L, 3L, 10L}) {
    ClosedForm g = kernel_sum({{PoleFamily::Odd, 1}, {PoleFamily::OddShift, 1}}, i);
    CHECK(g == ClosedForm::constant(harmonic_exact(HarmonicKind::odd(1), i) / Rational(2 * i)));
  }
  // numeric check of a heavier kernel against brute force
  std::vector<PoleFactor> heavy = {{PoleFamily::K, 2}, {PoleFamily::Odd, 1}, {PoleFamily::OddShift, 2}};
  PrecReal v = kernel_sum_value(heavy, 3, wp, tab);
  PrecReal brute(wp);
  for (long k = 1; k <= 300000; ++k) {
    Rational term = Rational(1) / (Rational(k).pow(2) * Rational(2 * k - 1) * Rational(2 * 3 + 2 * k - 1).pow(2));
    brute += PrecReal::from_rational(term, wp);
  }
  CHECK((v - brute).abs() < PrecReal::from_decimal("1e-15", wp));
  // divergent kernel rejected
  CHECK_THROWS(kernel_sum({{PoleFamily::K, 1}}, 1));
}
