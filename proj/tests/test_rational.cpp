#include "doctest.h"

#include "xladder/rational.hpp"

#include "test_util.hpp"

using namespace xladder;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).num() == -1);
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), division_by_zero);
}

TEST_CASE("parsing and printing") {
    CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational(7, -3).to_string() == "-7/3");
    CHECK(Rational(4).to_string() == "4");
}

TEST_CASE("floor and pow") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-1, 2).floor() == -1);
    CHECK(Rational(3).floor() == 3);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("field axioms on random samples") {
    testutil::Rng rng;
    for (int i = 0; i < 200; ++i) {
        const Rational a = rng.rational();
        const Rational b = rng.rational();
        const Rational c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}
