#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "esum/constants.hpp"
#include "esum/expr.hpp"

using namespace esum;

TEST_CASE("atoms: weights, names, validation") {
  CHECK(Atom::zeta(4).weight() == 4);
  CHECK(Atom::ln2().weight() == 1);
  CHECK(Atom::gamma().weight() == 1);
  CHECK(Atom::sigma(3).weight() == 4);
  CHECK(Atom::tau(6).weight() == 8);
  CHECK(Atom::tau(8).weight() == 10);
  CHECK(Atom::parse("zeta(10)") == Atom::zeta(10));
  CHECK(Atom::parse("sigma(9)") == Atom::sigma(9));
  CHECK_THROWS(Atom::zeta(1));
  CHECK_THROWS(Atom::sigma(4));
  CHECK_THROWS(Atom::tau(4));
  CHECK_THROWS(Atom::parse("xi(2)"));
}

TEST_CASE("closed form arithmetic with zero elimination") {
  ClosedForm x = ClosedForm::atom(Atom::zeta(4), Rational(45, 16));
  ClosedForm neg = cf_scale(Rational(-1), x);
  CHECK(cf_add(x, neg).is_zero());

  ClosedForm p = cf_mul(ClosedForm::atom(Atom::zeta(3)), ClosedForm::atom(Atom::zeta(5)));
  REQUIRE(p.size() == 1);
  CHECK(p.terms().begin()->first.weight() == 8);
  CHECK(p.terms().begin()->second == Rational(1));

  // weight cap rejects runaway products, naming the monomial
  ClosedForm z8 = ClosedForm::atom(Atom::zeta(8));
  CHECK_THROWS_AS(cf_mul(z8, cf_mul(z8, z8)), WeightCapError);
  try {
    cf_mul(z8, cf_mul(z8, z8));
  } catch (const WeightCapError& e) {
    CHECK(std::string(e.what()).find("zeta(8)") != std::string::npos);
  }
}

TEST_CASE("format/parse round trip") {
  ClosedForm f = ClosedForm::atom(Atom::zeta(10), Rational(-103, 8));
  f += ClosedForm::term(Monomial({Atom::zeta(3), Atom::zeta(7)}), Rational(16));
  f += ClosedForm::term(Monomial({Atom::zeta(5), Atom::zeta(5)}), Rational(11));
  f += ClosedForm::atom(Atom::sigma(9), Rational(-4));
  f += ClosedForm::atom(Atom::tau(8), Rational(-53, 4));
  ClosedForm parsed = ClosedForm::parse(f.str());
  CHECK(parsed == f);

  ClosedForm g = ClosedForm::parse("45/16 zeta(4) - 1 sigma(3)");
  CHECK(g.terms().size() == 2);
  ClosedForm h = ClosedForm::parse("-15/16*zeta(4) + 4*zeta(2) - 8*ln2 + 1*sigma(3)");
  CHECK(ClosedForm::parse(h.str()) == h);
  CHECK(ClosedForm::parse("0").is_zero());
  // multiplication inside one term: 3/2 * zeta(2) * sigma(5)
  ClosedForm m = ClosedForm::parse("3/2 zeta(2)*sigma(5)");
  CHECK(m.terms().begin()->first.weight() == 8);
}

TEST_CASE("cf_eval matches independent pi-based zeta oracle") {
  auto& tab = ConstantsTable::global();
  // zeta(4) = pi^4/90 via MPFR's own pi
  PrecReal pi = const_pi(320);
  PrecReal z4 = pi.pow_int(4) / PrecReal::from_long(90, 320);
  ClosedForm f = ClosedForm::atom(Atom::zeta(4), Rational(45, 16));
  PrecReal got = cf_eval(f, 256, tab);
  PrecReal want = (PrecReal::from_rational(Rational(45, 16), 320) * z4).with_precision(256);
  CHECK(ulp_distance(got, want) < 4.0);
  CHECK(cf_eval(ClosedForm::zero(), 256, tab).is_zero());
}

TEST_CASE("cf_eval is a ring homomorphism on random samples") {
  auto& tab = ConstantsTable::global();
  std::mt19937_64 rng(7);
  std::vector<Atom> pool = {Atom::zeta(2), Atom::zeta(3), Atom::zeta(4),
                            Atom::ln2(),   Atom::zeta(5), Atom::sigma(3)};
  auto rnd_form = [&]() {
    ClosedForm f;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      Atom a = pool[rng() % pool.size()];
      long num = static_cast<long>(rng() % 41) - 20;
      long den = 1 + static_cast<long>(rng() % 16);
      f += ClosedForm::atom(a, Rational(num, den));
    }
    return f;
  };
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    ClosedForm a = rnd_form(), b = rnd_form();
    ClosedForm ab = cf_mul(a, b);
    PrecReal lhs = cf_eval(ab, 256, tab);
    PrecReal rhs = cf_eval(a, 256, tab) * cf_eval(b, 256, tab);
    if (lhs.is_zero() && rhs.is_zero()) continue;
    CHECK(ulp_distance(rhs, lhs) <= 8.0);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("even zeta product normalization") {
  // zeta(2)^2 = 5/2 zeta(4)
  ClosedForm f = ClosedForm::term(Monomial({Atom::zeta(2), Atom::zeta(2)}), Rational(1));
  ClosedForm n = cf_normalize_even_zeta(f);
  CHECK(n == ClosedForm::atom(Atom::zeta(4), Rational(5, 2)));
  // zeta(2)zeta(8) = 33/20 zeta(10), zeta(4)zeta(6) = 11/10 zeta(10)
  CHECK(even_zeta_product_ratio(2, 8) == Rational(33, 20));
  CHECK(even_zeta_product_ratio(4, 6) == Rational(11, 10));
  // odd factors stay put
  ClosedForm g = ClosedForm::term(Monomial({Atom::zeta(3), Atom::zeta(2), Atom::zeta(2)}),
                                  Rational(2));
  ClosedForm gn = cf_normalize_even_zeta(g);
  CHECK(gn == ClosedForm::term(Monomial({Atom::zeta(3), Atom::zeta(4)}), Rational(5)));
}

TEST_CASE("euler linear reduction") {
  CHECK(euler_linear_reduction(2) == ClosedForm::atom(Atom::zeta(3), Rational(2)));
  CHECK(euler_linear_reduction(3) == ClosedForm::atom(Atom::zeta(4), Rational(5, 4)));
  ClosedForm e9 = euler_linear_reduction(9);
  ClosedForm want = ClosedForm::atom(Atom::zeta(10), Rational(11, 4));
  want += ClosedForm::term(Monomial({Atom::zeta(3), Atom::zeta(7)}), Rational(-1));
  want += ClosedForm::term(Monomial({Atom::zeta(5), Atom::zeta(5)}), Rational(-1, 2));
  CHECK(e9 == want);
  CHECK_THROWS(euler_linear_reduction(1));
}

TEST_CASE("symmetry reduction record") {
  SymmetryRelation r = symmetry_reduction(2, 6);
  ClosedForm want = ClosedForm::term(Monomial({Atom::zeta(2), Atom::zeta(6)}), Rational(1));
  want += ClosedForm::atom(Atom::zeta(8));
  CHECK(r.rhs == want);
  // a=b=2 gives sum H^(2)/k^2 = 7/4 zeta(4) after normalization
  SymmetryRelation s = symmetry_reduction(2, 2);
  ClosedForm half = cf_normalize_even_zeta(s.rhs).scaled(Rational(1, 2));
  CHECK(half == ClosedForm::atom(Atom::zeta(4), Rational(7, 4)));
}

TEST_CASE("json dump of term map") {
  ClosedForm f = ClosedForm::atom(Atom::zeta(8), Rational(1035, 1024));
  CHECK(f.to_json() == "{\"zeta(8)\":\"1035/1024\"}");
}
