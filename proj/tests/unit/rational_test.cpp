#include "gqm/rational.hpp"

#include <doctest.h>

#include <random>

using gqm::BigInt;
using gqm::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("canonical form") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5).denominator() == 1);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("21/10") == Rational(21, 10));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("4/2") == Rational(2));
    CHECK(Rational::parse("-4/-2") == Rational(2));
    CHECK_FALSE(Rational::try_parse("1.5").has_value());
    CHECK_FALSE(Rational::try_parse("a").has_value());
    CHECK_FALSE(Rational::try_parse("1/0").has_value());
    CHECK_FALSE(Rational::try_parse("").has_value());
    CHECK_FALSE(Rational::try_parse("1/2/3").has_value());
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 10) * Rational(10) == Rational(1));
    CHECK(Rational(1) / Rational(3) == Rational(1, 3));
    CHECK(Rational(7, 2) - Rational(7, 2) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK(Rational::pow(Rational(10), 3) == Rational(1000));
    CHECK(Rational::pow(Rational(1, 2), 2) == Rational(1, 4));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("order and helpers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(gqm::min(Rational(3), Rational(2)) == Rational(2));
    CHECK(gqm::max(Rational(3), Rational(2)) == Rational(3));
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
}

TEST_CASE("field laws on random values") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 60);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK((a <= b) == !(b < a));
    }
}

TEST_SUITE_END();
