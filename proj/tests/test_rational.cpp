#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "umemura/rational.hpp"

using namespace umemura;

TEST_CASE("canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7).str_fraction() == "0/1");
    CHECK(Rational().is_zero());
    CHECK(Rational(5).str_fraction() == "5/1");
}

TEST_CASE("parsing accepts 'n' and 'n/d', rejects garbage and zero denominators") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("6/8") == Rational(3, 4));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("field arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
    CHECK(Rational(3, 4).pow(3) == Rational(27, 64));
    CHECK(Rational(1, 8).pow(0) == Rational(1));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
}

TEST_CASE("ordering and round trips on random values") {
    for (int i = 0; i < 200; ++i) {
        const Rational q = testing::random_rational(50, 50);
        CHECK(Rational::from_string(q.str()) == q);
        CHECK(Rational::from_string(q.str_fraction()) == q);
        const Rational w = testing::random_rational(50, 50);
        CHECK(((q < w) || (w < q) || (q == w)));
        CHECK((q - w).sign() == (q < w ? -1 : (w < q ? 1 : 0)));
    }
}

TEST_CASE("arbitrary precision survives large products") {
    Rational big(1);
    for (int i = 1; i <= 40; ++i) big *= Rational(1000000007L, 3);
    Rational back = big;
    for (int i = 1; i <= 40; ++i) back /= Rational(1000000007L, 3);
    CHECK(back == Rational(1));
}
