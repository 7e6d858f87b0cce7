#include "doctest.h"

#include "xladder/alpha.hpp"

#include "test_util.hpp"

using namespace xladder;

TEST_CASE("alpha poly basics") {
    const AlphaPoly a = AlphaPoly::of({Rational(2), Rational(0), Rational(1)});  // 2 + a^2
    CHECK(a.degree() == 2);
    CHECK(a.to_string() == "a^2 + 2");
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(AlphaPoly::alpha().to_string() == "a");
    CHECK((-AlphaPoly::alpha()).to_string() == "-a");
}

TEST_CASE("divmod is exact division with remainder") {
    testutil::Rng rng;
    for (int i = 0; i < 100; ++i) {
        const AlphaPoly a = rng.alpha_poly(5);
        const AlphaPoly b = rng.nonzero_alpha_poly(3);
        const auto [q, r] = AlphaPoly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd divides both and is primitive") {
    testutil::Rng rng;
    for (int i = 0; i < 60; ++i) {
        const AlphaPoly a = rng.alpha_poly(3);
        const AlphaPoly b = rng.alpha_poly(3);
        const AlphaPoly f = rng.nonzero_alpha_poly(2);
        const AlphaPoly g = AlphaPoly::gcd(a * f, b * f);
        if ((a * f).is_zero() && (b * f).is_zero()) continue;
        // f divides gcd(a f, b f)
        const auto [q, r] = AlphaPoly::divmod(g, f);
        CHECK(r.is_zero());
        CHECK(g.signed_content() == Rational(1) / g.signed_content().inverse());
        CHECK(g.leading().sign() > 0);
    }
}

TEST_CASE("alpha rat canonical form") {
    const AlphaPoly a = AlphaPoly::alpha();
    // (a^2 - 1)/(a - 1) reduces to a + 1
    const AlphaRat r(a * a - AlphaPoly(1), a - AlphaPoly(1));
    CHECK(r.is_polynomial());
    CHECK(r.num() == a + AlphaPoly(1));

    // denominator normalized integer-primitive with positive leading coefficient
    const AlphaRat s(AlphaPoly(1), AlphaPoly::of({Rational(-1, 2), Rational(-3, 2)}));
    CHECK(s.den().to_string() == "3*a + 1");
    CHECK(s.num().to_string() == "-2");

    CHECK_THROWS_AS(AlphaRat(AlphaPoly(1), AlphaPoly()), division_by_zero);
}

TEST_CASE("canonical uniqueness under common factors") {
    testutil::Rng rng;
    for (int i = 0; i < 60; ++i) {
        const AlphaPoly p = rng.alpha_poly(3);
        const AlphaPoly q = rng.nonzero_alpha_poly(3);
        const AlphaPoly f = rng.nonzero_alpha_poly(2);
        CHECK(AlphaRat(p, q) == AlphaRat(p * f, q * f));
    }
}

TEST_CASE("field axioms on random rational functions") {
    testutil::Rng rng;
    for (int i = 0; i < 40; ++i) {
        const AlphaRat a = rng.alpha_rat();
        const AlphaRat b = rng.alpha_rat();
        const AlphaRat c = rng.alpha_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == AlphaRat(1));
    }
}

TEST_CASE("numeric specialization") {
    const AlphaRat r(AlphaPoly(1), AlphaPoly::alpha() - AlphaPoly(2));  // 1/(a-2)
    CHECK(r.eval(Rational(3)) == Rational(1));
    CHECK_THROWS_AS(r.eval(Rational(2)), degenerate_parameter);
    try {
        r.eval(Rational(2));
    } catch (const degenerate_parameter& e) {
        CHECK(e.vanishing_factor == "a - 2");
    }
}

TEST_CASE("evaluation commutes with arithmetic") {
    testutil::Rng rng;
    int done = 0;
    while (done < 100) {
        const AlphaRat a = rng.alpha_rat();
        const AlphaRat b = rng.alpha_rat();
        const Rational x = rng.rational(7, 4);
        try {
            const Rational lhs = (a * b + a).eval(x);
            const Rational rhs = a.eval(x) * b.eval(x) + a.eval(x);
            CHECK(lhs == rhs);
            ++done;
        } catch (const degenerate_parameter&) {
            // pole hit; resample
        }
    }
}
