#include "doctest.h"

#include "xladder/diff_operator.hpp"

#include "test_util.hpp"

using namespace xladder;

namespace {

const FieldPoly X = FieldPoly::x();

DiffOperator random_operator(testutil::Rng& rng, int max_order = 2) {
    std::vector<XRat> c(static_cast<size_t>(rng.integer(0, max_order)) + 1);
    for (auto& v : c) v = XRat(rng.field_poly(2, 1));
    return DiffOperator(std::move(c));
}

StateSum probe_state(testutil::Rng& rng) {
    XRat r = rng.xrat(2);
    if (r.is_zero()) r = XRat(1);
    return StateSum::term(Rational(rng.integer(-1, 1), 4), Rational(1, 2), rng.integer(-1, 1), r);
}

} // namespace

TEST_CASE("[d/dx, x] = 1") {
    const DiffOperator x_mult = DiffOperator::multiplication(XRat::x());
    CHECK(commutator(DiffOperator::dx(), x_mult) == DiffOperator::identity());
}

TEST_CASE("A = d/dx + x/2 annihilates the Gaussian") {
    const DiffOperator a = DiffOperator::dx() +
                           DiffOperator::multiplication(XRat(X.scaled(AlphaRat(Rational(1, 2)))));
    const StateSum gauss = StateSum::term(Rational(-1, 4), Rational(0), 0, XRat(1));
    CHECK(a.apply(gauss).is_zero());
}

TEST_CASE("composition degree additivity") {
    testutil::Rng rng;
    for (int i = 0; i < 10; ++i) {
        DiffOperator a = random_operator(rng, 2);
        DiffOperator b = random_operator(rng, 2);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(compose(a, b).order() == a.order() + b.order());
    }
}

TEST_CASE("application coheres with composition") {
    testutil::Rng rng;
    for (int i = 0; i < 50; ++i) {
        const DiffOperator a = random_operator(rng);
        const DiffOperator b = random_operator(rng);
        const StateSum s = probe_state(rng);
        CHECK(compose(a, b).apply(s) == a.apply(b.apply(s)));
    }
}

TEST_CASE("ring axioms and Jacobi") {
    testutil::Rng rng;
    for (int i = 0; i < 8; ++i) {
        const DiffOperator a = random_operator(rng, 1);
        const DiffOperator b = random_operator(rng, 1);
        const DiffOperator c = random_operator(rng, 1);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, b + c) == compose(a, b) + compose(a, c));
        CHECK(commutator(a, b) == -commutator(b, a));
        const DiffOperator jacobi = commutator(a, commutator(b, c)) +
                                    commutator(b, commutator(c, a)) +
                                    commutator(c, commutator(a, b));
        CHECK(jacobi.is_zero());
    }
    const DiffOperator d = random_operator(rng, 2);
    CHECK(commutator(d, d).is_zero());
}

TEST_CASE("as_h_polynomial") {
    // a model H of the right shape: -d^2 + x^2
    const DiffOperator h({XRat(X * X), XRat(), XRat(-1)});

    SUBCASE("H^2 gives (0, 0, 1)") {
        const auto r = as_h_polynomial(compose(h, h), h);
        REQUIRE(r.ok);
        REQUIRE(r.coeffs.size() == 3);
        CHECK(r.coeffs[0].is_zero());
        CHECK(r.coeffs[1].is_zero());
        CHECK(r.coeffs[2] == AlphaRat(1));
    }

    SUBCASE("general round trip") {
        testutil::Rng rng;
        for (int i = 0; i < 5; ++i) {
            std::vector<AlphaRat> cs;
            for (int k = 0; k <= 3; ++k) cs.push_back(rng.alpha_rat(1));
            const FieldPoly p{cs};
            const DiffOperator d = h_polynomial_operator(p, h);
            const auto r = as_h_polynomial(d, h);
            REQUIRE(r.ok);
            CHECK(r.poly() == p);
            CHECK(h_polynomial_operator(r.poly(), h) == d);
        }
    }

    SUBCASE("odd-order operators fail with a residual") {
        const DiffOperator ladder({XRat(X), XRat(1)});
        const auto r = as_h_polynomial(ladder, h);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.residual.is_zero());
        CHECK(r.residual == ladder);
    }
}
