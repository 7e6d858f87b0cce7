#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "xladder/alpha.hpp"

namespace xladder {

// Dense univariate polynomial over the field Q(alpha). Serves both as the
// x-polynomial layer under XRat and as "polynomial in H" records.
class FieldPoly {
public:
    FieldPoly() = default;
    FieldPoly(const AlphaRat& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
    FieldPoly(long c) : FieldPoly(AlphaRat(c)) {}                        // NOLINT
    explicit FieldPoly(std::vector<AlphaRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static FieldPoly of(std::initializer_list<AlphaRat> coeffs) {
        return FieldPoly(std::vector<AlphaRat>(coeffs));
    }
    static FieldPoly x() { return FieldPoly(std::vector<AlphaRat>{AlphaRat(0), AlphaRat(1)}); }
    static FieldPoly x_pow(int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    AlphaRat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : AlphaRat(0);
    }
    const AlphaRat& leading() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }
    AlphaRat constant_value() const { return c_.empty() ? AlphaRat(0) : c_[0]; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    FieldPoly operator-() const;
    friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
    friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
    FieldPoly& operator+=(const FieldPoly& o) { return *this = *this + o; }
    FieldPoly& operator-=(const FieldPoly& o) { return *this = *this - o; }
    FieldPoly& operator*=(const FieldPoly& o) { return *this = *this * o; }
    friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.c_ == b.c_; }

    FieldPoly scaled(const AlphaRat& r) const;
    FieldPoly monic() const;
    FieldPoly derivative() const;

    static std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
    static FieldPoly div_exact(const FieldPoly& a, const FieldPoly& b);
    // Monic gcd by the Euclidean algorithm over Q(alpha).
    static FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);

    AlphaRat eval(const AlphaRat& v) const;
    // Substitutes var -> var + shift (used for records like R(H + 2)).
    FieldPoly shifted(const AlphaRat& shift) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<AlphaRat> c_;
};

// Rational function of x over Q(alpha) in canonical form:
//   gcd(num, den) = 1 over Q(alpha)[x], den monic in x.
class XRat {
public:
    XRat() : num_(), den_(1) {}
    XRat(const AlphaRat& c) : num_(c), den_(1) {}  // NOLINT
    XRat(long c) : num_(AlphaRat(c)), den_(1) {}   // NOLINT
    XRat(const FieldPoly& p) : num_(p), den_(1) {} // NOLINT
    XRat(FieldPoly num, FieldPoly den) { assign(std::move(num), std::move(den)); }

    static XRat x() { return XRat(FieldPoly::x()); }

    const FieldPoly& num() const { return num_; }
    const FieldPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == FieldPoly(1) && num_ == FieldPoly(1); }
    bool is_polynomial() const { return den_ == FieldPoly(1); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    AlphaRat constant_value() const;

    XRat operator-() const;
    friend XRat operator+(const XRat& a, const XRat& b);
    friend XRat operator-(const XRat& a, const XRat& b);
    friend XRat operator*(const XRat& a, const XRat& b);
    friend XRat operator/(const XRat& a, const XRat& b);
    XRat& operator+=(const XRat& o) { return *this = *this + o; }
    XRat& operator-=(const XRat& o) { return *this = *this - o; }
    XRat& operator*=(const XRat& o) { return *this = *this * o; }
    XRat& operator/=(const XRat& o) { return *this = *this / o; }
    friend bool operator==(const XRat& a, const XRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    XRat inverse() const;
    XRat scaled(const AlphaRat& r) const;
    // Multiplies by x^k (k may be negative).
    XRat shifted_by_x_power(int k) const;
    XRat derivative() const;

    std::string to_string() const;

private:
    void assign(FieldPoly num, FieldPoly den);
    // Already-coprime pair; only normalizes the denominator monic.
    static XRat raw(FieldPoly num, FieldPoly den);

    FieldPoly num_, den_;
};

// Rational function of x over Q after substituting a numeric alpha.
struct QxRational {
    std::vector<Rational> num;  // by increasing degree, canonical: gcd 1, den monic
    std::vector<Rational> den;
    std::string to_string() const;
    Rational eval(const Rational& x0) const;  // throws evaluation_at_pole
};

// Evaluation homomorphism Q(alpha)(x) -> Q(x); throws degenerate_parameter when
// alpha0 annihilates an alpha-denominator or the specialized x-denominator.
QxRational alpha_specialize(const XRat& r, const Rational& alpha0);

} // namespace xladder
