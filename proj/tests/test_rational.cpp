#include <doctest.h>

#include "outcat/rational.hpp"

using namespace outcat;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 4) + Rational(1, 8)) == Rational(3, 8));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK((Rational(3, 8) * Rational(2, 3)) == Rational(1, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("dyadic weights across the whole supported range") {
    Rational total;
    for (int i = 1; i <= 60; ++i) total = total + Rational::pow2(-i);
    // 1 - 2^-60
    CHECK(total == Rational(1) - Rational::pow2(-60));
    CHECK(total < Rational(1));
}

TEST_CASE("string forms") {
    CHECK(Rational(3, 8).str() == "3/8");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("3/8") == Rational(3, 8));
    CHECK(Rational::parse("-7") == Rational(-7));
}

TEST_CASE("zero denominator and overflow are rejected") {
    CHECK_THROWS_AS(Rational(1, 0), Error);
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, Error);
}
