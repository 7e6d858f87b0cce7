#pragma once

#include <random>
#include <vector>

#include "xladder/alpha.hpp"
#include "xladder/xrat.hpp"

namespace xladder::testutil {

// Deterministic generator for randomized algebraic property checks.
class Rng {
public:
    explicit Rng(unsigned seed = 20240915u) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    Rational rational(long max_abs = 9, long max_den = 5) {
        const long n = integer(-max_abs, max_abs);
        const long d = integer(1, max_den);
        return Rational(n, d);
    }

    Rational nonzero_rational(long max_abs = 9, long max_den = 5) {
        while (true) {
            Rational r = rational(max_abs, max_den);
            if (!r.is_zero()) return r;
        }
    }

    AlphaPoly alpha_poly(int max_deg = 3) {
        std::vector<Rational> c(static_cast<size_t>(integer(0, max_deg)) + 1);
        for (auto& v : c) v = rational(5, 3);
        return AlphaPoly(std::move(c));
    }

    AlphaPoly nonzero_alpha_poly(int max_deg = 3) {
        while (true) {
            AlphaPoly p = alpha_poly(max_deg);
            if (!p.is_zero()) return p;
        }
    }

    AlphaRat alpha_rat(int max_deg = 2) {
        return AlphaRat(alpha_poly(max_deg), nonzero_alpha_poly(max_deg));
    }

    AlphaRat nonzero_alpha_rat(int max_deg = 2) {
        while (true) {
            AlphaRat r = alpha_rat(max_deg);
            if (!r.is_zero()) return r;
        }
    }

    FieldPoly field_poly(int max_deg = 3, int alpha_deg = 1) {
        std::vector<AlphaRat> c(static_cast<size_t>(integer(0, max_deg)) + 1);
        for (auto& v : c) v = AlphaRat(alpha_poly(alpha_deg));
        return FieldPoly(std::move(c));
    }

    FieldPoly nonzero_field_poly(int max_deg = 3, int alpha_deg = 1) {
        while (true) {
            FieldPoly p = field_poly(max_deg, alpha_deg);
            if (!p.is_zero()) return p;
        }
    }

    XRat xrat(int max_deg = 3) {
        return XRat(field_poly(max_deg), nonzero_field_poly(2));
    }

private:
    std::mt19937 gen_;
};

} // namespace xladder::testutil
