#include "xladder/diff_operator.hpp"

#include <algorithm>

namespace xladder {

DiffOperator DiffOperator::operator-() const {
    std::vector<XRat> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return DiffOperator(std::move(out));
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    std::vector<XRat> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return DiffOperator(std::move(out));
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
    std::vector<XRat> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    }
    return DiffOperator(std::move(out));
}

DiffOperator DiffOperator::scaled(const AlphaRat& r) const {
    if (r.is_zero()) return DiffOperator();
    std::vector<XRat> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].scaled(r);
    return DiffOperator(std::move(out));
}

StateSum DiffOperator::apply(const StateSum& s) const {
    StateSum out;
    StateSum der = s;
    for (int k = 0; k <= order(); ++k) {
        if (!c_[static_cast<size_t>(k)].is_zero()) {
            out += der.scaled(c_[static_cast<size_t>(k)]);
        }
        if (k < order()) der = der.derivative();
    }
    return out;
}

SecondKindState DiffOperator::apply(const SecondKindState& s) const {
    SecondKindState out(StateSum::zero(), StateSum::zero(), s.anchor());
    SecondKindState der = s;
    for (int k = 0; k <= order(); ++k) {
        if (!c_[static_cast<size_t>(k)].is_zero()) {
            out = out + der.scaled(c_[static_cast<size_t>(k)]);
        }
        if (k < order()) der = der.derivative();
    }
    return out;
}

std::string DiffOperator::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        const XRat& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (k > 0) {
            out += " * d^" + std::to_string(k);
        }
    }
    return out;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.is_zero() || b.is_zero()) return DiffOperator();
    // binomial table up to order(a)
    const int n = a.order();
    std::vector<std::vector<Rational>> binom(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        binom[static_cast<size_t>(i)].resize(static_cast<size_t>(i) + 1, Rational(1));
        for (int j = 1; j < i; ++j) {
            binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                binom[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] +
                binom[static_cast<size_t>(i) - 1][static_cast<size_t>(j)];
        }
    }

    std::vector<XRat> out(static_cast<size_t>(a.order() + b.order()) + 1, XRat());
    for (int m = 0; m <= b.order(); ++m) {
        const XRat d = b.coeff(m);
        if (d.is_zero()) continue;
        // successive derivatives of the coefficient of b
        std::vector<XRat> dder{d};
        for (int j = 1; j <= n; ++j) dder.push_back(dder.back().derivative());
        for (int k = 0; k <= n; ++k) {
            const XRat c = a.coeff(k);
            if (c.is_zero()) continue;
            // c D^k (d u) = sum_j C(k, j) c d^{(j)} D^{k - j + m} u
            for (int j = 0; j <= k; ++j) {
                if (dder[static_cast<size_t>(j)].is_zero()) continue;
                XRat term = c * dder[static_cast<size_t>(j)];
                const Rational& bc = binom[static_cast<size_t>(k)][static_cast<size_t>(j)];
                if (!bc.is_one()) term = term.scaled(AlphaRat(bc));
                out[static_cast<size_t>(k - j + m)] += term;
            }
        }
    }
    return DiffOperator(std::move(out));
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
    return compose(a, b) - compose(b, a);
}

DiffOperator operator_pow(const DiffOperator& d, int k) {
    DiffOperator acc = DiffOperator::identity();
    for (int i = 0; i < k; ++i) acc = compose(acc, d);
    return acc;
}

HPolynomial as_h_polynomial(const DiffOperator& d, const DiffOperator& h, int max_deg) {
    HPolynomial out;
    std::vector<DiffOperator> h_pow{DiffOperator::identity()};
    auto power = [&](int k) -> const DiffOperator& {
        while (static_cast<int>(h_pow.size()) <= k) {
            h_pow.push_back(compose(h_pow.back(), h));
        }
        return h_pow[static_cast<size_t>(k)];
    };

    std::vector<AlphaRat> coeffs(static_cast<size_t>(max_deg) + 1, AlphaRat(0));
    DiffOperator rest = d;
    const AlphaRat h_lead = h.coeff(h.order()).constant_value();
    while (!rest.is_zero()) {
        const int ord = rest.order();
        if (ord % 2 != 0 || ord / 2 > max_deg) {
            out.residual = rest;
            return out;
        }
        const int deg = ord / 2;
        const XRat lead = rest.coeff(ord);
        if (!lead.is_constant()) {
            out.residual = rest;
            return out;
        }
        const AlphaRat c = lead.constant_value() / h_lead.pow(deg);
        coeffs[static_cast<size_t>(deg)] = c;
        rest -= power(deg).scaled(c);
        if (!rest.is_zero() && rest.order() >= ord) {
            out.residual = rest;  // elimination failed to reduce the order
            return out;
        }
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    out.ok = true;
    out.coeffs = std::move(coeffs);
    return out;
}

DiffOperator h_polynomial_operator(const FieldPoly& p, const DiffOperator& h) {
    DiffOperator acc;
    for (int k = p.degree(); k >= 0; --k) {
        acc = compose(acc, h) + DiffOperator::multiplication(XRat(p.coeff(k)));
    }
    return acc;
}

} // namespace xladder
