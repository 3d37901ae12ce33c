#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "esum/bernoulli.hpp"
#include "esum/rational.hpp"
#include "esum/real.hpp"

using namespace esum;

TEST_CASE("rational normalization and field axioms") {
  CHECK(Rational(45, 16).str() == "45/16");
  CHECK(Rational(515, 40) == Rational(103, 8));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational("1035/1024").to_double() == doctest::Approx(1.0107421875));
  CHECK_THROWS(Rational(1, 0));

  // cross-multiplication oracle on random pairs
  std::mt19937_64 rng(12345);
  auto rnd = [&]() {
    long n = static_cast<long>(rng() % 20001) - 10000;
    long d = static_cast<long>(rng() % 9999) + 1;
    return std::pair<long, long>(n, d);
  };
  for (int t = 0; t < 1000; ++t) {
    auto [an, ad] = rnd();
    auto [bn, bd] = rnd();
    Rational a(an, ad), b(bn, bd);
    Rational sum = a + b;
    // a/b + c/d == (ad'+cb')/(bd') exactly
    Rational oracle(an * bd + bn * ad, ad * bd);
    CHECK(sum == oracle);
    Rational prod = a * b;
    CHECK(prod == Rational(an * bn, ad * bd));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational pow and parsing") {
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
  CHECK(Rational(3, 2).pow(2) == Rational(9, 4));
  CHECK(Rational::pow2(-4) == Rational(1, 16));
  CHECK(Rational("-7/8") == Rational(-7, 8));
  CHECK_THROWS(Rational("x/y"));
}

TEST_CASE("real_from_rational dyadic exactness") {
  PrecReal half = PrecReal::from_rational(Rational(1, 2), 64);
  CHECK(half.to_decimal(4) == "5.000e-1");
  CHECK(half.to_double() == 0.5);
  PrecReal v = PrecReal::from_rational(Rational(45, 16), 128);
  CHECK(v.to_double() == 2.8125);
  CHECK(v.precision() == 128);
}

TEST_CASE("one third round-trips against long division oracle") {
  // long-division decimal oracle for 1/3 at 100 digits
  std::string oracle = "0.";
  long rem = 1;
  for (int i = 0; i < 100; ++i) {
    rem *= 10;
    oracle += static_cast<char>('0' + rem / 3);
    rem %= 3;
  }
  PrecReal third = PrecReal::from_rational(Rational(1, 3), 256);
  PrecReal fromdec = PrecReal::from_decimal(oracle, 256);
  CHECK(ulp_distance(third, fromdec) <= 1.0);
  // round trip at stored precision
  PrecReal back = PrecReal::from_decimal(third.round_trip_string(), 256);
  CHECK(back.bit_identical(third));
}

TEST_CASE("with_precision identity and rounding") {
  PrecReal x = PrecReal::from_rational(Rational(1, 2), 256);
  CHECK(x.with_precision(64).to_double() == 0.5);
  CHECK(x.with_precision(x.precision()).bit_identical(x));
  CHECK_THROWS(x.with_precision(32));

  // downconversion of a pi approximation stays within 1 ulp of true pi
  PrecReal pi256(256);
  mpfr_const_pi(pi256.raw(), MPFR_RNDN);
  PrecReal pi64(64);
  mpfr_const_pi(pi64.raw(), MPFR_RNDN);
  CHECK(ulp_distance(pi256.with_precision(64), pi64) <= 1.0);
}

TEST_CASE("mixed-precision ops take the max precision") {
  PrecReal a = PrecReal::from_long(1, 64);
  PrecReal b = PrecReal::from_long(3, 192);
  CHECK((a / b).precision() == 192);
  CHECK((b * a).precision() == 192);
  CHECK((a + b).precision() == 192);
}

TEST_CASE("doubling check: ops at p agree with 2p within 2 ulp") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    Rational qa(static_cast<long>(rng() % 1000000) + 1, static_cast<long>(rng() % 999) + 1);
    Rational qb(static_cast<long>(rng() % 1000000) + 1, static_cast<long>(rng() % 999) + 1);
    PrecReal a = PrecReal::from_rational(qa, 128), b = PrecReal::from_rational(qb, 128);
    PrecReal a2 = PrecReal::from_rational(qa, 256), b2 = PrecReal::from_rational(qb, 256);
    CHECK(ulp_distance(a + b, (a2 + b2).with_precision(128)) <= 2.0);
    CHECK(ulp_distance(a * b, (a2 * b2).with_precision(128)) <= 2.0);
    CHECK(ulp_distance(a / b, (a2 / b2).with_precision(128)) <= 2.0);
  }
}

TEST_CASE("determinism across repeated pipelines") {
  auto pipeline = []() {
    PrecReal acc(192);
    for (long k = 1; k <= 500; ++k) acc += PrecReal::from_rational(Rational(1, k), 192);
    return acc;
  };
  CHECK(pipeline().bit_identical(pipeline()));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(40).num_str() == "-261082718496449122051");
  CHECK_THROWS(bernoulli(42));
  CHECK(binomial(10, 3) == Rational(120));
  CHECK(rising(3, 4) == Rational(3 * 4 * 5 * 6));
}
