#include "billiard/rational.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>

using billiard::Rational;

TEST_CASE("construction normalizes") {
    Rational r(4, 6);
    CHECK(r.num() == 2);
    CHECK(r.den() == 3);

    Rational neg(3, -9);
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 3);

    CHECK(Rational(0, 17) == Rational(0));
    CHECK(Rational(-4, 2) == Rational(-2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("equality is structural after normalization") {
    CHECK(Rational(1, 2) == Rational(2, 4));
    CHECK(Rational(-1, 2) == Rational(1, -2));
    CHECK(Rational(1, 2) != Rational(1, 3));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 5) > Rational(4, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
}

TEST_CASE("arithmetic is exact on randomized small fractions") {
    std::mt19937 rng(20240117);
    std::uniform_int_distribution<std::int64_t> num(-50, 50);
    std::uniform_int_distribution<std::int64_t> den(1, 50);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
        CHECK(-(-a) == a);
    }
}

TEST_CASE("floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(-6, 3).floor() == -2);
    CHECK(Rational(0).floor() == 0);
}

TEST_CASE("overflow raises the dedicated error") {
    Rational big(INT64_MAX / 2 + 1, 1);
    CHECK_THROWS_AS(big * Rational(3), billiard::arithmetic_overflow);
    CHECK_THROWS_AS(big + big, billiard::arithmetic_overflow);
    // reduction in wide intermediates keeps representable results alive
    Rational half_max(INT64_MAX / 2, 1);
    CHECK((half_max * Rational(2)) / Rational(2) == half_max);
}

TEST_CASE("parse and print") {
    CHECK(Rational::parse("3/20") == Rational(3, 20));
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK_THROWS_AS(Rational::parse(""), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::domain_error);
}
