#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vscgw/rational.hpp"

using vscgw::Rational;

TEST_CASE("construction and canonicalization") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(3, -2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(5).is_integer());
    CHECK(!Rational(5, 3).is_integer());
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(7, 7).is_one());
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("arithmetic") {
    Rational a(3, 4), b(5, 6);
    CHECK(a + b == Rational(19, 12));
    CHECK(a - b == Rational(-1, 12));
    CHECK(a * b == Rational(5, 8));
    CHECK(a / b == Rational(9, 10));
    CHECK(-a == Rational(-3, 4));
    CHECK(a.inverse() == Rational(4, 3));
    CHECK_THROWS(a / Rational(0));
    CHECK_THROWS(Rational(0).inverse());
    Rational c = a;
    c += b;
    c *= Rational(12);
    CHECK(c == Rational(19));
}

TEST_CASE("comparisons and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 9).sign() == 1);
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
}

TEST_CASE("string round trip") {
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-3, 9).str() == "-1/3");
    CHECK(Rational(42).str() == "42");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-81") == Rational(-81));
    CHECK(Rational::parse("4876875/2").str() == "4876875/2");
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1/0"));
    // big values survive the round trip exactly
    Rational big = Rational::parse("8564575000/3");
    CHECK(big * Rational(3) == Rational::parse("8564575000"));
}

TEST_CASE("num den accessors") {
    Rational r(-10, 15);
    CHECK(r.num() == -2);
    CHECK(r.den() == 3);
    CHECK(Rational(0).den() == 1);
}
