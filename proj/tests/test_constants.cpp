#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "esum/constants.hpp"

using namespace esum;

TEST_CASE("zeta against independent pi-based closed forms") {
  ConstantsTable tab;
  // zeta(2) = pi^2/6 to 55+ digits
  PrecReal z2 = tab.zeta(2, 200);
  PrecReal pi = const_pi(256);
  PrecReal want2 = (pi * pi / PrecReal::from_long(6, 256)).with_precision(200);
  CHECK((z2 - want2).abs() < PrecReal::from_decimal("1e-55", 200));
  CHECK(z2.to_decimal(20).substr(0, 19) == "1.64493406684822643");

  // zeta(8) = pi^8/9450 to full precision
  PrecReal z8 = tab.zeta(8, 256);
  PrecReal want8 = (const_pi(320).pow_int(8) / PrecReal::from_long(9450, 320)).with_precision(256);
  CHECK(ulp_distance(z8, want8) <= 4.0);

  // large argument: 1 < zeta(50) < 1 + 2*2^-50
  PrecReal z50 = tab.zeta(50, 128);
  CHECK(z50 > PrecReal::from_long(1, 128));
  CHECK(z50 < PrecReal::from_long(1, 128) + PrecReal::from_long(1, 128).mul_2exp(-49));

  CHECK_THROWS(tab.zeta(1, 128));

  // cross-check against the library zeta for a range of arguments
  for (int n : {2, 3, 5, 7, 10, 12}) {
    CHECK(ulp_distance(tab.zeta(n, 256), zeta_reference(n, 256)) <= 2.0);
  }
}

TEST_CASE("ln2 and gamma") {
  ConstantsTable tab;
  PrecReal l = tab.ln2(128);
  CHECK(l.to_decimal(21).substr(0, 20) == "6.931471805599453094");
  // inverse-function check: exp(ln2) = 2 within 8 ulp
  PrecReal two = PrecReal::from_long(2, 128);
  CHECK(ulp_distance(l.exp(), two) <= 8.0);

  PrecReal g = tab.euler_gamma(128);
  CHECK(g.to_decimal(21).substr(0, 20) == "5.772156649015328606");

  // Euler-Maclaurin oracle: gamma ~ H_N - ln N - 1/(2N) + 1/(12N^2) - 1/(120N^4)
  long wp = 192;
  long N = 1 << 14;
  PrecReal H(wp);
  for (long k = 1; k <= N; ++k) H += PrecReal::from_rational(Rational(1, k), wp);
  PrecReal Nr = PrecReal::from_long(N, wp);
  PrecReal est = H - Nr.ln() - PrecReal::from_rational(Rational(1, 2 * N), wp) +
                 PrecReal::from_rational(Rational(1, 12), wp) / (Nr * Nr) -
                 PrecReal::from_rational(Rational(1, 120), wp) / Nr.pow_int(4);
  CHECK((est.with_precision(128) - g).abs() < PrecReal::from_decimal("1e-24", 128));
}

TEST_CASE("ln2 doubled-precision argument reduction oracle") {
  // ln2 = 2 ln(4/3) + ln(9/8) evaluated at doubled precision
  ConstantsTable tab;
  long wp = 320;
  PrecReal a = (PrecReal::from_rational(Rational(4, 3), wp)).ln();
  PrecReal b = (PrecReal::from_rational(Rational(9, 8), wp)).ln();
  PrecReal combo = a + a + b;
  CHECK(ulp_distance(tab.ln2(160), combo.with_precision(160)) <= 2.0);
}

TEST_CASE("basis sums match their 20-digit references") {
  auto& tab = ConstantsTable::global();
  for (const auto& [name, digits] : ConstantsTable::basis_references()) {
    Atom a = Atom::parse(name);
    PrecReal v = tab.basis_sum(a, 256);
    PrecReal ref = PrecReal::from_decimal(digits, 256);
    CHECK((v - ref).abs() < PrecReal::from_decimal("6e-21", 256));
  }
  // the sigma(3) entry of the printed table deviates by ~1e-18 (misprint)
  PrecReal printed =
      PrecReal::from_decimal(ConstantsTable::basis_references_printed().at("sigma(3)"), 256);
  PrecReal v = tab.basis_sum(Atom::sigma(3), 256);
  PrecReal dev = (v - printed).abs();
  CHECK(dev > PrecReal::from_decimal("5e-19", 256));
  CHECK(dev < PrecReal::from_decimal("2e-18", 256));
}

TEST_CASE("doubling check across precisions") {
  ConstantsTable tab;
  for (const Atom& a : {Atom::zeta(3), Atom::ln2(), Atom::gamma(), Atom::zeta(6)}) {
    PrecReal lo = tab.value(a, 128);
    PrecReal hi = tab.value(a, 256);
    CHECK(ulp_distance(lo, hi.with_precision(128)) <= 4.0);
  }
}

TEST_CASE("cache round trip is bit identical") {
  std::string path = "/tmp/esum_test_cache.json";
  std::remove(path.c_str());
  {
    ConstantsTable tab(path);
    tab.zeta(3, 192);
    tab.ln2(128);
    tab.save_cache();
  }
  ConstantsTable tab2(path);
  CHECK(tab2.load_cache());
  ConstantsTable fresh;
  // loaded values are bit-identical to freshly computed ones at the stored precision
  CHECK(tab2.zeta(3, 192).bit_identical(fresh.zeta(3, 192)));
  std::remove(path.c_str());
}
