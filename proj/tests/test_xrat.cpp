#include "doctest.h"

#include "xladder/xrat.hpp"

#include "test_util.hpp"

using namespace xladder;

namespace {
const AlphaRat A = AlphaRat::alpha();
const FieldPoly X = FieldPoly::x();
}

TEST_CASE("normalization cancels common factors") {
    // (x^2 - 1)/(x - 1) -> x + 1
    const XRat r(X * X - FieldPoly(1), X - FieldPoly(1));
    CHECK(r.is_polynomial());
    CHECK(r.num() == X + FieldPoly(1));

    // already-reduced polynomial stays put: 2 + x^2 + 2a
    const FieldPoly f_one = X * X + FieldPoly(AlphaRat::linear(Rational(2), Rational(2)));
    const XRat s(f_one, FieldPoly(1));
    CHECK(s.num() == f_one);
    CHECK(s.to_string() == "x^2 + (2*a + 2)");

    // constant-field cancellation: ((a+1) x)/(a+1) -> x
    const XRat t(X.scaled(A + AlphaRat(1)), FieldPoly(A + AlphaRat(1)));
    CHECK(t == XRat::x());

    CHECK_THROWS_AS(XRat(X, FieldPoly()), division_by_zero);
}

TEST_CASE("denominator is monic") {
    const XRat r(FieldPoly(1), X.scaled(AlphaRat(Rational(2))) - FieldPoly(AlphaRat(4)));
    CHECK(r.den() == X - FieldPoly(AlphaRat(2)));
    CHECK(r.num() == FieldPoly(AlphaRat(Rational(1, 2))));
}

TEST_CASE("canonical uniqueness under common factors") {
    testutil::Rng rng;
    for (int i = 0; i < 40; ++i) {
        const FieldPoly p = rng.field_poly(3);
        const FieldPoly q = rng.nonzero_field_poly(3);
        const FieldPoly r = rng.nonzero_field_poly(2);
        CHECK(XRat(p, q) == XRat(p * r, q * r));
    }
}

TEST_CASE("field axioms on random samples") {
    testutil::Rng rng;
    for (int i = 0; i < 25; ++i) {
        const XRat a = rng.xrat();
        const XRat b = rng.xrat();
        const XRat c = rng.xrat();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == XRat(1));
    }
}

TEST_CASE("derivative satisfies the quotient rule") {
    testutil::Rng rng;
    for (int i = 0; i < 25; ++i) {
        const XRat a = rng.xrat();
        const XRat b = rng.xrat();
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("alpha specialization examples") {
    // x/(a - 2) at a = 3 -> x
    const XRat r(X, FieldPoly(A - AlphaRat(2)));
    const QxRational rx = alpha_specialize(r, Rational(3));
    CHECK(rx.to_string() == "x");

    // 2 + x^2 + 2a at a = 1/2 -> 3 + x^2
    const XRat s(X * X + FieldPoly(AlphaRat::linear(Rational(2), Rational(2))), FieldPoly(1));
    CHECK(alpha_specialize(s, Rational(1, 2)).to_string() == "x^2 + 3");

    // 1/(a - 2) at a = 2 is degenerate
    const XRat t(FieldPoly(AlphaRat(AlphaPoly(1), AlphaPoly::alpha() - AlphaPoly(2))), FieldPoly(1));
    CHECK_THROWS_AS(alpha_specialize(t, Rational(2)), degenerate_parameter);
}

TEST_CASE("evaluation homomorphism against arithmetic") {
    testutil::Rng rng;
    int done = 0;
    while (done < 100) {
        const XRat a = rng.xrat(2);
        const XRat b = rng.xrat(2);
        const Rational a0 = rng.rational(5, 3);
        const Rational x0 = rng.rational(5, 3);
        try {
            const Rational lhs = alpha_specialize(a * b + a.derivative(), a0).eval(x0);
            const Rational rhs = alpha_specialize(a, a0).eval(x0) * alpha_specialize(b, a0).eval(x0) +
                                 [&] {
                                     // derivative of the specialized function at x0 via the
                                     // specialized num/den (quotient rule over Q)
                                     const QxRational qa = alpha_specialize(a, a0);
                                     auto horner = [&](const std::vector<Rational>& p, const Rational& x) {
                                         Rational acc(0);
                                         for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
                                             acc = acc * x + p[static_cast<size_t>(i)];
                                         return acc;
                                     };
                                     auto dpoly = [](const std::vector<Rational>& p) {
                                         std::vector<Rational> d;
                                         for (size_t i = 1; i < p.size(); ++i)
                                             d.push_back(p[i] * Rational(static_cast<long>(i)));
                                         return d;
                                     };
                                     const Rational n = horner(qa.num, x0), d = horner(qa.den, x0);
                                     const Rational dn = horner(dpoly(qa.num), x0), dd = horner(dpoly(qa.den), x0);
                                     return (dn * d - n * dd) / (d * d);
                                 }();
            CHECK(lhs == rhs);
            ++done;
        } catch (const kernel_error&) {
            // pole or degenerate sample; draw again
        }
    }
}
