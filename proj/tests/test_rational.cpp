#include <doctest.h>

#include "hessmap/rational.hpp"

using hessmap::Rational;

TEST_CASE("rationals canonicalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).numerator() == 2);
    CHECK(Rational(6, 3).denominator() == 1);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), hessmap::ZeroDivision);
    CHECK_THROWS_AS(Rational(1, 0), hessmap::ZeroDivision);
}

TEST_CASE("from_string accepts n and n/d") {
    CHECK(Rational::from_string("3") == Rational(3));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK(Rational::from_string("+3") == Rational(3));
    CHECK(Rational::from_string("7/2") == Rational(7, 2));
    CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
}

TEST_CASE("from_string rejects malformed text") {
    CHECK_THROWS_AS(Rational::from_string(""), hessmap::Error);
    CHECK_THROWS_AS(Rational::from_string("abc"), hessmap::Error);
    CHECK_THROWS_AS(Rational::from_string("1.5"), hessmap::Error);
    CHECK_THROWS_AS(Rational::from_string("1/"), hessmap::Error);
    CHECK_THROWS_AS(Rational::from_string("/2"), hessmap::Error);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), hessmap::Error);
    CHECK_THROWS_AS(Rational::from_string("1 / 2"), hessmap::Error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), hessmap::ZeroDivision);
}

TEST_CASE("pow and str") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("arbitrary precision survives large products") {
    Rational big(1);
    for (int i = 0; i < 100; ++i) big *= Rational(10);
    Rational expect = Rational::from_string("1" + std::string(100, '0'));
    CHECK(big == expect);
    CHECK(big / expect == Rational(1));
    // denominators grow independently of numerators
    Rational q(1, 3);
    for (int i = 0; i < 50; ++i) q *= Rational(1, 3);
    CHECK(q.numerator() == 1);
    CHECK(q * Rational(3).pow(51) == Rational(1));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2) > Rational(1));
}
