#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "loophecke/scalars.hpp"

namespace {

using lh::GFp;
using lh::Poly;
using lh::Rational;
using lh::RatFunc;

Rational Q(long n, long d = 1) { return Rational(n, d); }

RatFunc poly(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<Rational> c;
  for (long v : coeffs_low_to_high) c.push_back(Rational(v));
  return RatFunc(Poly(c));
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(2, 4) == Q(1, 2));
  CHECK(Rational(-2, -4) == Q(1, 2));
  CHECK(Rational(2, -4) == Q(-1, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::from_string("7/5") == Q(7, 5));
  CHECK(Rational::from_string("-3") == Q(-3));
  CHECK(Q(7, 5).str() == "7/5");
  CHECK(Q(-1, 2).str() == "-1/2");
  CHECK(Q(4).str() == "4");
  CHECK_THROWS_AS(Rational(1, 0), lh::ScalarError);
}

TEST_CASE("rational arithmetic canonicity") {
  Rational a = Q(3, 4) * Q(8, 9);
  Rational b = Q(2, 3);
  CHECK(a == b);
  CHECK(a.str() == b.str());
  CHECK((Q(1, 3) + Q(1, 6)).str() == "1/2");
  CHECK(Q(5, 7).inverse() == Q(7, 5));
  CHECK_THROWS_AS(Q(0).inverse(), lh::ScalarError);
}

TEST_CASE("prime field basics") {
  GFp a = GFp::from_long(-1, lh::kPrimeA);
  CHECK(a.residue() == lh::kPrimeA - 1);
  CHECK((a * a).residue() == 1);
  CHECK(a.str() == std::to_string(lh::kPrimeA - 1) + " mod " + std::to_string(lh::kPrimeA));
  GFp x = GFp::from_long(1234567, lh::kPrimeA);
  CHECK((x * x.inverse()).residue() == 1);
  CHECK(GFp::from_long(0, lh::kPrimeA).is_zero());
  CHECK(a.make_rational(Q(7, 5)) ==
        GFp::from_long(7, lh::kPrimeA) / GFp::from_long(5, lh::kPrimeA));
}

TEST_CASE("prime field rejects composite moduli and mixed moduli") {
  CHECK_THROWS_AS(GFp::from_long(1, 1000), lh::ScalarError);
  GFp a = GFp::from_long(3, lh::kPrimeA);
  GFp b = GFp::from_long(3, lh::kPrimeB);
  CHECK_THROWS_AS((void)(a + b), lh::ScalarKindMismatch);
  CHECK_THROWS_AS((void)(a * b), lh::ScalarKindMismatch);
}

TEST_CASE("detached zero placeholders combine with attached elements") {
  GFp zero;
  GFp a = GFp::from_long(5, lh::kPrimeA);
  CHECK((zero + a) == a);
  CHECK((a - zero) == a);
  CHECK((zero * a).is_zero());
}

TEST_CASE("polynomial arithmetic and gcd") {
  Poly t = Poly::t();
  Poly p = t * t - Poly::constant(1);        // t^2 - 1
  Poly q = t - Poly::constant(1);            // t - 1
  Poly g = Poly::gcd(p, q);
  CHECK(g == q.monic());
  auto [quo, rem] = p.divmod(q);
  CHECK(rem.is_zero());
  CHECK(quo == t + Poly::constant(1));
  CHECK(p.str() == "t^2 - 1");
  CHECK((t * t - Poly::constant(3) * t + Poly::constant(1)).str() == "t^2 - 3t + 1");
}

TEST_CASE("rational function evaluation") {
  RatFunc t = RatFunc::t();
  RatFunc one(1);

  CHECK((one - t).evaluate(Q(1)) == Q(0));
  CHECK_THROWS_AS((t / (t + one)).evaluate(Q(-1)), lh::PoleAtPoint);
  CHECK(((t * t - one) / (t - one)).evaluate(Q(3)) == Q(4));
}

TEST_CASE("rational function normalization is canonical") {
  RatFunc t = RatFunc::t();
  RatFunc one(1);
  RatFunc a = (t * t - one) / (t - one);
  CHECK(a == t + one);
  CHECK(a.str() == "t + 1");
  // denominator kept monic
  RatFunc b = one / (t * RatFunc(2));
  CHECK(b.den() == Poly::t());
  CHECK(b.num() == Poly(Rational(1, 2)));
  CHECK(poly({1, -1, 1}).str() == "t^2 - t + 1");
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(20260815);
  std::uniform_int_distribution<long> d(-40, 40);
  auto nonzero = [&] {
    long v = 0;
    while (v == 0) v = d(rng);
    return v;
  };

  for (int iter = 0; iter < 200; ++iter) {
    Rational a = Q(d(rng), nonzero()), b = Q(d(rng), nonzero()), c = Q(d(rng), nonzero());
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Q(1));

    GFp ga = GFp::from_long(d(rng), lh::kPrimeA);
    GFp gb = GFp::from_long(d(rng), lh::kPrimeA);
    GFp gc = GFp::from_long(d(rng), lh::kPrimeA);
    CHECK((ga + gb) + gc == ga + (gb + gc));
    CHECK((ga * gb) * gc == ga * (gb * gc));
    CHECK(ga * (gb + gc) == ga * gb + ga * gc);
    if (!ga.is_zero()) CHECK((ga * ga.inverse()).is_one());

    RatFunc t = RatFunc::t();
    RatFunc fa = RatFunc(Q(d(rng))) + t * RatFunc(Q(d(rng)));
    RatFunc fb = RatFunc(Q(d(rng))) - t * RatFunc(Q(d(rng)));
    RatFunc fc = t * t * RatFunc(Q(d(rng))) + RatFunc(Q(d(rng)));
    CHECK((fa + fb) + fc == fa + (fb + fc));
    CHECK((fa * fb) * fc == fa * (fb * fc));
    CHECK(fa * (fb + fc) == fa * fb + fa * fc);
    if (!fa.is_zero()) CHECK((fa * fa.inverse()).is_one());
  }
}
