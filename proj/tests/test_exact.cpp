#include <random>

#include "doctest.h"
#include "kstab/exact.hpp"
#include "oracles.hpp"

using namespace kstab;
using testsupport::Big;
using testsupport::big;
using testsupport::evaluate;
using testsupport::integer;

namespace {

struct Gen {
  std::mt19937_64 rng{20261016};

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rational rational() {
    Rational q(uniform(-40, 40), uniform(1, 12));
    q.canonicalize();
    return q;
  }

  /// Up to `terms` summands c * sqrt(n) with unrestricted radicands n.
  SurdSum surd(int terms = 6) {
    SurdSum s;
    const int k = static_cast<int>(uniform(1, terms));
    for (int i = 0; i < k; ++i) s += SurdSum::root(rational(), uniform(1, 60));
    return s;
  }
};

}  // namespace

TEST_CASE("normalize extracts the largest square factor") {
  CHECK(surd_normalize(2, 8) == SurdSum::root(4, 2));
  CHECK(surd_normalize(2, 8).terms().begin()->first == 2);
  CHECK(surd_normalize(1, 1) == SurdSum(1));
  CHECK(surd_normalize(1, 1).is_rational());
  CHECK(surd_normalize(Rational(1, 2), 45).coefficient(5) == Rational(3, 2));
  CHECK(surd_normalize(0, 7).is_zero());
  CHECK_THROWS_AS(surd_normalize(1, 0), Error);
}

TEST_CASE("square decomposition") {
  CHECK(square_decompose(72) == std::pair<Integer, Integer>(6, 2));
  CHECK(square_decompose(1) == std::pair<Integer, Integer>(1, 1));
  // A prime beyond the trial-division range.
  const Integer p("1000003");
  CHECK(square_decompose(p * p * 3) == std::pair<Integer, Integer>(p, 3));
  CHECK(square_decompose(p * 5) == std::pair<Integer, Integer>(1, p * 5));
  const Integer huge = Integer("1000003") * Integer("1000033") * Integer("1000037") * Integer("1000039");
  CHECK_THROWS_AS(square_decompose(huge), Error);
}

TEST_CASE("ring operations on small examples") {
  const SurdSum r2 = SurdSum::root(1, 2);
  const SurdSum r3 = SurdSum::root(1, 3);
  CHECK(((r2 + r3) + (-r2 - r3)).is_zero());
  CHECK(r2 * r2 == SurdSum(2));
  CHECK(r2 * SurdSum::root(1, 10) == SurdSum::root(2, 5));
  CHECK((SurdSum::root(1, 8) - SurdSum::root(2, 2)).is_zero());
  CHECK(SurdSum::root(1, 6).to_string() == "sqrt(6)");
  CHECK((SurdSum(Rational(12, 115)) + SurdSum::root(Rational(8, 345), 10)).to_string() == "12/115 + 8/345*sqrt(10)");
  CHECK_THROWS_AS(r2 / Rational(0), Error);
}

TEST_CASE("ring axioms on random surd sums") {
  Gen g;
  for (int i = 0; i < 300; ++i) {
    const SurdSum a = g.surd(), b = g.surd(), c = g.surd();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * SurdSum(1) == a);
    // Structural equality agrees with subtraction then zero test.
    CHECK((a == b) == (a - b).is_zero());
    // Normalizing a canonical value term by term is the identity.
    CHECK(SurdSum::from_terms(a.terms()) == a);
    for (const auto& [d, coef] : a.terms()) {
      CHECK(coef != 0);
      CHECK(square_decompose(d).first == 1);
    }
  }
}

TEST_CASE("sign examples") {
  const SurdSum s0 = SurdSum(Rational(12, 115)) + SurdSum::root(Rational(8, 345), 10) + SurdSum::root(Rational(2, 115), 5) +
                     SurdSum::root(Rational(2, 115), 2);
  CHECK(surd_sign(s0) == 1);
  const SurdSum neg = SurdSum::root(3, 2) - SurdSum::root(2, 5) + SurdSum(Rational(1, 10));
  CHECK(surd_sign(neg) == -1);
  CHECK(surd_decimal(neg, 4) == "-0.1295");
  CHECK(surd_sign(SurdSum::root(1, 8) - SurdSum::root(2, 2)) == 0);
}

TEST_CASE("sign agrees with a 200-digit evaluation on 1000 cases") {
  Gen g;
  int nearly_cancelling = 0;
  for (int i = 0; i < 1000; ++i) {
    SurdSum s = g.surd();
    if (i % 2 == 1) {
      // Subtract a rational approximation good to k digits, leaving a value of size ~10^-k.
      s = testsupport::nearly_cancel(s, static_cast<int>(g.uniform(5, 40)));
      ++nearly_cancelling;
    }
    if (s.is_zero()) continue;
    const Big v = evaluate(s);
    REQUIRE(v != 0);
    CHECK(s.sign() == (v > 0 ? 1 : -1));
    CHECK(compare(s, SurdSum(0)) == s.sign());
  }
  CHECK(nearly_cancelling == 500);
}

TEST_CASE("decimal rendering") {
  const SurdSum ex2 = (SurdSum(20) + SurdSum::root(6, 10) + SurdSum::root(14, 2)) / Rational(223);
  CHECK(surd_decimal(ex2, 5) == "0.26355");
  CHECK(surd_decimal(SurdSum(0), 5) == "0.00000");
  CHECK(surd_decimal(SurdSum::root(1, 2), 5) == "1.41421");
  CHECK(surd_decimal(-SurdSum::root(1, 2), 3) == "-1.414");
  CHECK(surd_decimal(SurdSum::root(1, 2), 2, Rounding::Truncate) == "1.41");
  CHECK(rational_decimal(Rational(1, 8), 2) == "0.13");
  CHECK(rational_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(rational_decimal(Rational(1, 8), 2, Rounding::Truncate) == "0.12");
  CHECK_THROWS_AS(surd_decimal(SurdSum(1), 0), Error);
}

TEST_CASE("decimals agree with a 200-digit evaluation") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    const SurdSum s = g.surd(4);
    if (s.is_rational()) continue;
    const Big v = evaluate(s);
    // Irrational, so rounding half away from zero is unambiguous.
    const Big scaled = v * 1000000000;
    const Big r = v >= 0 ? Big(boost::multiprecision::floor(scaled + Big("0.5"))) : Big(-boost::multiprecision::floor(-scaled + Big("0.5")));
    const Integer n = integer(r);
    CHECK(surd_decimal(s, 9) == rational_decimal(Rational(n, 1000000000), 9));
  }
}

TEST_CASE("lattice helpers") {
  CHECK(det3(Vec3{1, 0, 9}, Vec3{1, 1, 8}, Vec3{0, 0, 1}) == 1);
  CHECK(det2(Vec2{1, 0}, Vec2{1, 3}) == 3);
  const auto [p, m] = primitivize(Vec2{0, 3});
  CHECK(p == Vec2{0, 1});
  CHECK(m == 3);
  CHECK(primitivize(Vec3{-4, 6, 2}).first == Vec3{-2, 3, 1});
  const std::vector<Integer> xs{0, 3, 3};
  CHECK(gcd_all(xs) == 3);
  CHECK(gcd_all(std::vector<Integer>{}) == 0);
  CHECK_THROWS_AS(primitivize(Vec2{0, 0}), Error);
  CHECK(cross(Vec3{1, 0, 0}, Vec3{0, 1, 0}) == Vec3{0, 0, 1});
}
