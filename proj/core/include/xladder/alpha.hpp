#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "xladder/rational.hpp"

namespace xladder {

// Dense univariate polynomial in the formal parameter alpha over Q.
// Invariant: the trailing (highest-degree) coefficient is nonzero; the zero
// polynomial is the empty coefficient sequence.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
    AlphaPoly(long c) : AlphaPoly(Rational(c)) {}                        // NOLINT
    explicit AlphaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    // Coefficients by increasing degree: of({1, -2}) is 1 - 2*alpha.
    static AlphaPoly of(std::initializer_list<Rational> coeffs) {
        return AlphaPoly(std::vector<Rational>(coeffs));
    }
    static AlphaPoly alpha() { return AlphaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    const Rational& leading() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational constant_value() const { return c_.empty() ? Rational(0) : c_[0]; }

    AlphaPoly operator-() const;
    friend AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b);
    friend AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b);
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    AlphaPoly& operator+=(const AlphaPoly& o) { return *this = *this + o; }
    AlphaPoly& operator-=(const AlphaPoly& o) { return *this = *this - o; }
    AlphaPoly& operator*=(const AlphaPoly& o) { return *this = *this * o; }
    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }

    AlphaPoly scaled(const Rational& r) const;

    // Field division in Q[alpha]: returns (quotient, remainder).
    static std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& a, const AlphaPoly& b);
    // Division known to be exact; throws kernel_error if a remainder appears.
    static AlphaPoly div_exact(const AlphaPoly& a, const AlphaPoly& b);

    // Primitive gcd: content-free over Z with positive leading coefficient.
    // Computed by a primitive PRS after clearing rational denominators.
    static AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

    // The rational c with (*this)/c integer-primitive and positive leading
    // coefficient; zero polynomial has content 0.
    Rational signed_content() const;

    Rational eval(const Rational& x) const;

    std::string to_string(const std::string& var = "a") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Rational function in alpha over Q, canonical form:
//   gcd(num, den) = 1, den integer-primitive with positive leading coefficient.
class AlphaRat {
public:
    AlphaRat() : num_(), den_(1) {}
    AlphaRat(const Rational& r) : num_(r), den_(1) {}  // NOLINT
    AlphaRat(long n) : num_(Rational(n)), den_(1) {}   // NOLINT
    AlphaRat(const AlphaPoly& p) : num_(p), den_(1) {} // NOLINT
    AlphaRat(AlphaPoly num, AlphaPoly den) { assign(std::move(num), std::move(den)); }

    static AlphaRat alpha() { return AlphaRat(AlphaPoly::alpha()); }
    // c0 + c1*alpha, a convenient shorthand for the linear weights in use here.
    static AlphaRat linear(const Rational& c0, const Rational& c1) {
        return AlphaRat(AlphaPoly(std::vector<Rational>{c0, c1}));
    }

    const AlphaPoly& num() const { return num_; }
    const AlphaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == AlphaPoly(1) && den_ == AlphaPoly(1); }
    bool is_polynomial() const { return den_ == AlphaPoly(1); }
    bool is_rational_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;

    AlphaRat operator-() const;
    friend AlphaRat operator+(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator-(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator*(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator/(const AlphaRat& a, const AlphaRat& b);
    AlphaRat& operator+=(const AlphaRat& o) { return *this = *this + o; }
    AlphaRat& operator-=(const AlphaRat& o) { return *this = *this - o; }
    AlphaRat& operator*=(const AlphaRat& o) { return *this = *this * o; }
    AlphaRat& operator/=(const AlphaRat& o) { return *this = *this / o; }
    friend bool operator==(const AlphaRat& a, const AlphaRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    AlphaRat inverse() const;
    AlphaRat pow(long e) const;

    // Substitutes a numeric alpha; throws degenerate_parameter naming the
    // vanishing denominator factor.
    Rational eval(const Rational& alpha0) const;

    std::string to_string(const std::string& var = "a") const;

private:
    void assign(AlphaPoly num, AlphaPoly den);

    AlphaPoly num_, den_;
};

} // namespace xladder
