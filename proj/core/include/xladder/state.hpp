#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "xladder/xrat.hpp"

namespace xladder {

// Power of x of the form p + q*alpha with rational p and integer q.
struct Exponent {
    Rational p;
    long q = 0;

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

// One quasi-rational term e^{s*x^2} * x^{p + q*alpha} * r(x, alpha).
// Canonical form keeps 0 <= p < 1; integer shifts of the exponent live in r.
// The combining key of a term is (s, p, q).
struct QTerm {
    Rational s;
    Exponent b;
    XRat r;
};

// Finite sum of QTerms with pairwise-distinct keys, sorted by key.
class StateSum {
public:
    StateSum() = default;

    // Single canonicalized term; the zero sum when r = 0.
    static StateSum term(const Rational& s, const Rational& p, long q, const XRat& r);
    static StateSum zero() { return StateSum(); }
    static StateSum one() { return term(Rational(0), Rational(0), 0, XRat(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }
    const std::vector<QTerm>& terms() const { return terms_; }
    const QTerm& single_term() const;

    StateSum operator-() const;
    friend StateSum operator+(const StateSum& a, const StateSum& b);
    friend StateSum operator-(const StateSum& a, const StateSum& b);
    friend StateSum operator*(const StateSum& a, const StateSum& b);
    StateSum& operator+=(const StateSum& o) { return *this = *this + o; }
    StateSum& operator-=(const StateSum& o) { return *this = *this - o; }
    friend bool operator==(const StateSum& a, const StateSum& b);

    StateSum scaled(const AlphaRat& c) const;
    // Coefficient multiplication by a rational function of x; keys unchanged.
    StateSum scaled(const XRat& c) const;

    // Exact reciprocal, defined for single-term sums.
    StateSum reciprocal() const;

    StateSum derivative() const;

    // Logarithmic derivative f'/f of a single-term sum, as a rational function.
    XRat log_derivative() const;

    std::string to_string() const;

private:
    explicit StateSum(std::vector<QTerm> terms) : terms_(std::move(terms)) {}
    void insert_term(QTerm t);

    std::vector<QTerm> terms_;
};

// g + f * I_psi where I_psi is the formal antiderivative with I' = 1/psi^2
// and additive constant fixed to zero. Anchors are single-term sums.
class SecondKindState {
public:
    SecondKindState(StateSum g, StateSum f, StateSum anchor);

    // The reduction-of-order partner psi * I_psi of an anchor state.
    static SecondKindState tilde(const StateSum& anchor) {
        return SecondKindState(StateSum::zero(), anchor, anchor);
    }

    const StateSum& g() const { return g_; }
    const StateSum& f() const { return f_; }
    const StateSum& anchor() const { return anchor_; }

    bool is_zero() const { return g_.is_zero() && f_.is_zero(); }
    // True when the formal-antiderivative part has cancelled.
    bool is_state_sum() const { return f_.is_zero(); }

    SecondKindState operator-() const { return SecondKindState(-g_, -f_, anchor_); }
    friend SecondKindState operator+(const SecondKindState& a, const SecondKindState& b);
    friend SecondKindState operator-(const SecondKindState& a, const SecondKindState& b);
    friend bool operator==(const SecondKindState& a, const SecondKindState& b);

    SecondKindState scaled(const AlphaRat& c) const {
        return SecondKindState(g_.scaled(c), f_.scaled(c), anchor_);
    }
    SecondKindState scaled(const XRat& c) const {
        return SecondKindState(g_.scaled(c), f_.scaled(c), anchor_);
    }

    // (g + f I)' = (g' + f/psi^2) + f' I.
    SecondKindState derivative() const;

    std::string to_string() const;

private:
    StateSum g_, f_, anchor_;
};

// Exact coefficients of target in the span of basis, or nothing when target
// lies outside. Coefficients live in Q(alpha).
std::optional<std::vector<AlphaRat>> decompose(const StateSum& target,
                                               const std::vector<StateSum>& basis);

// The single c with target = c * reference, or nothing.
std::optional<AlphaRat> proportionality(const StateSum& target, const StateSum& reference);

} // namespace xladder
