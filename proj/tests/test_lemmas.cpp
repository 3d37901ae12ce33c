#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esum/lemmas.hpp"
#include "esum/partial_fractions.hpp"

using namespace esum;

TEST_CASE("registry covers every helper group") {
  for (const char* id : {"1", "2a", "2b", "2c.222", "3a.n1", "3b.23", "4a.a1", "4b", "4c",
                         "5a.c2", "5b.a2b1", "5c", "5k", "5h2", "6.a2", "7.a1", "k1.n2", "k2",
                         "k3", "g85.n2", "g86.n1", "c284", "c293", "c296", "c300", "c302"})
    CHECK(lemma_find(id) != nullptr);
  CHECK(lemma_select("4").size() == 5);  // 4a.a1..a3, 4b, 4c
  CHECK(lemma_select("2c").size() == 4);
  CHECK(!lemma_select("all").empty());
  CHECK(lemma_find("nope") == nullptr);
}

TEST_CASE("hand-checkable values") {
  long wp = 256;
  EvalConfig cfg;
  auto& tab = ConstantsTable::global();

  // skew sum at i = 1 equals -2
  PrecReal l1 = helper_closed("1", 1, wp, cfg);
  CHECK((l1 + PrecReal::from_long(2, wp)).abs() < PrecReal::from_decimal("1e-60", wp));

  // first-family kernel at a = 1, i = 1 equals (3/8) zeta(2)
  PrecReal f4a = helper_closed("4a.a1", 1, wp, cfg);
  PrecReal want = tab.zeta(2, wp) * PrecReal::from_rational(Rational(3, 8), wp);
  CHECK((f4a - want).abs() < PrecReal::from_decimal("1e-60", wp));

  // lemma 2a closed form at i = 1 is zeta(2) - 2 ln2^2
  PrecReal f2a = helper_closed("2a", 1, wp, cfg);
  PrecReal l2 = tab.ln2(wp);
  CHECK((f2a - (tab.zeta(2, wp) - (l2 * l2).mul_2exp(1))).abs() <
        PrecReal::from_decimal("1e-60", wp));

  // lemma 2b closed form at i = 1 collapses to zeta(3)
  PrecReal f2b = helper_closed("2b", 1, wp, cfg);
  CHECK((f2b - tab.zeta(3, wp)).abs() < PrecReal::from_decimal("1e-60", wp));

  // lemma 3a at n = 1, i = 2: zeta(2)/2 + 1/2
  PrecReal f3a = helper_closed("3a.n1", 2, wp, cfg);
  PrecReal w3 = tab.zeta(2, wp) * PrecReal::from_rational(Rational(1, 2), wp) +
                PrecReal::from_rational(Rational(1, 2), wp);
  CHECK((f3a - w3).abs() < PrecReal::from_decimal("1e-60", wp));
}

TEST_CASE("helper_direct partial sums: K = 1 equals the first summand") {
  long wp = 128;
  // lemma 2a term at k = 1: H_1/((2+1)(i+1))
  for (long i : {1L, 3L}) {
    PrecReal p = helper_direct("2a", i, 1, wp);
    PrecReal want = PrecReal::from_rational(Rational(1, 3 * (i + 1)), wp);
    CHECK(ulp_distance(p, want) <= 2.0);
  }
  // skew helper: k = 1 term of lemma 1 at i = 3: H_1/(1*(3-1)) = 1/2
  PrecReal s = helper_direct("1", 3, 1, wp);
  CHECK(ulp_distance(s, PrecReal::from_rational(Rational(1, 2), wp)) <= 2.0);
  CHECK_THROWS(helper_direct("zzz", 1, 1, wp));
}

TEST_CASE("verification across i for a sample of helpers") {
  PrecReal tol = PrecReal::from_decimal("1e-25", 256);
  for (const char* id : {"1", "2a", "2b", "4a.a2", "4b", "4c", "5c", "5k", "c296"}) {
    const LemmaDef* d = lemma_find(id);
    REQUIRE(d);
    auto reps = lemma_verify(*d, 8, tol, 256);
    for (const auto& r : reps) {
      INFO(id << " at i=" << r.i);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("master relations verify") {
  PrecReal tol = PrecReal::from_decimal("1e-25", 256);
  for (const char* id : {"2c.222", "3b.23", "5a.c2", "6.a2", "7.a1"}) {
    const LemmaDef* d = lemma_find(id);
    REQUIRE(d);
    auto reps = lemma_verify(*d, 1, tol, 256);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].pass);
  }
}

TEST_CASE("recurrence unrolling reproduces closed forms") {
  PrecReal tol = PrecReal::from_decimal("1e-30", 256);
  for (const char* id : {"2a", "2b", "3a.n1", "3a.n2", "4a.a1", "4b", "4c", "5k"}) {
    const LemmaDef* d = lemma_find(id);
    REQUIRE(d);
    REQUIRE(d->recurrence);
    auto reps = lemma_recurrence_check(*d, 10, tol, 256);
    for (const auto& r : reps) {
      INFO(id << " at i=" << r.i);
      CHECK(r.pass);
    }
  }
  // trivial constant recurrence stays constant
  PrecReal c = PrecReal::from_decimal("1.25", 128);
  PrecReal r = recurrence_unroll(
      c, [](long) { return Rational(1); },
      [](long) { return PrecReal(128); }, 25);
  CHECK(r.bit_identical(c));
}

TEST_CASE("corrected helpers are flagged with notes") {
  for (const char* id : {"1", "2a", "4c", "6.a2", "k1.n2", "g86.n1"}) {
    const LemmaDef* d = lemma_find(id);
    REQUIRE(d);
    CHECK(!d->note.empty());
  }
  // untouched statements carry no note
  CHECK(lemma_find("4b")->note.empty());
  CHECK(lemma_find("5c")->note.empty());
}
