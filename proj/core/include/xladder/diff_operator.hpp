#pragma once

#include <string>
#include <vector>

#include "xladder/state.hpp"

namespace xladder {

// Ordinary differential operator sum_k c_k(x, alpha) (d/dx)^k with rational
// function coefficients in canonical form.
class DiffOperator {
public:
    DiffOperator() = default;
    explicit DiffOperator(std::vector<XRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DiffOperator zero() { return DiffOperator(); }
    static DiffOperator identity() { return multiplication(XRat(1)); }
    static DiffOperator dx() { return DiffOperator({XRat(0), XRat(1)}); }
    static DiffOperator multiplication(const XRat& c) { return DiffOperator({c}); }

    bool is_zero() const { return c_.empty(); }
    // Order of the zero operator is -1.
    int order() const { return static_cast<int>(c_.size()) - 1; }
    XRat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : XRat();
    }

    DiffOperator operator-() const;
    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    DiffOperator& operator+=(const DiffOperator& o) { return *this = *this + o; }
    DiffOperator& operator-=(const DiffOperator& o) { return *this = *this - o; }
    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.c_ == b.c_;
    }

    DiffOperator scaled(const AlphaRat& r) const;

    StateSum apply(const StateSum& s) const;
    SecondKindState apply(const SecondKindState& s) const;

    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<XRat> c_;
};

// Leibniz-expanded product: apply(compose(a, b), s) = apply(a, apply(b, s)).
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);
DiffOperator operator_pow(const DiffOperator& d, int k);

// Result of expressing an operator as a polynomial in H.
struct HPolynomial {
    bool ok = false;
    std::vector<AlphaRat> coeffs;  // by increasing power of H, when ok
    DiffOperator residual;         // the nonzero obstruction, when not ok
    FieldPoly poly() const { return FieldPoly(coeffs); }
};

// Descending-degree elimination of D against powers of H (order-2, constant
// leading coefficient). Exact: on success D = sum_k coeffs[k] H^k.
HPolynomial as_h_polynomial(const DiffOperator& d, const DiffOperator& h, int max_deg = 4);

// Rebuilds sum_k coeffs[k] H^k.
DiffOperator h_polynomial_operator(const FieldPoly& p, const DiffOperator& h);

} // namespace xladder
