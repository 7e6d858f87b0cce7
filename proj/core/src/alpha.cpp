#include "xladder/alpha.hpp"

#include <algorithm>
#include <cassert>

namespace xladder {

AlphaPoly AlphaPoly::operator-() const {
    std::vector<Rational> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return AlphaPoly(std::move(out));
}

AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return AlphaPoly(std::move(out));
}

AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    }
    return AlphaPoly(std::move(out));
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero()) return AlphaPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return AlphaPoly(std::move(out));
}

AlphaPoly AlphaPoly::scaled(const Rational& r) const {
    if (r.is_zero()) return AlphaPoly();
    std::vector<Rational> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * r;
    return AlphaPoly(std::move(out));
}

std::pair<AlphaPoly, AlphaPoly> AlphaPoly::divmod(const AlphaPoly& a, const AlphaPoly& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.degree() < b.degree()) return {AlphaPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational inv_lead = b.leading().inverse();
    for (int k = static_cast<int>(rem.size()) - 1; k >= b.degree(); --k) {
        if (rem[k].is_zero()) continue;
        const Rational q = rem[k] * inv_lead;
        quot[k - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            rem[k - b.degree() + j] -= q * b.c_[j];
        }
    }
    return {AlphaPoly(std::move(quot)), AlphaPoly(std::move(rem))};
}

AlphaPoly AlphaPoly::div_exact(const AlphaPoly& a, const AlphaPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw kernel_error("inexact polynomial division");
    return q;
}

Rational AlphaPoly::signed_content() const {
    if (is_zero()) return Rational(0);
    Int l(1);
    for (const auto& c : c_) l = xladder::lcm(l, c.den());
    Int g(0);
    for (const auto& c : c_) g = xladder::gcd(g, Int(c.num() * (l / c.den())));
    Rational content(g, l);
    if (leading().sign() < 0) content = -content;
    return content;
}

namespace {

// Integer-coefficient view used by the primitive PRS.
using ZPoly = std::vector<Int>;

ZPoly to_primitive_z(const AlphaPoly& p) {
    const Rational c = p.signed_content();
    ZPoly out(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational q = p.coeff(i) / c;
        assert(q.is_integer());
        out[i] = q.num();
    }
    return out;
}

void trim_z(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

ZPoly primitive_part(ZPoly p) {
    trim_z(p);
    if (p.empty()) return p;
    Int g(0);
    for (const auto& c : p) g = gcd(g, c);
    if (sgn(p.back()) < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, all over Z.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const Int& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        const Int top = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) {
            a[da - db + j] -= top * b[j];
        }
        trim_z(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

AlphaPoly AlphaPoly::gcd(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() && b.is_zero()) return AlphaPoly();
    if (a.is_zero()) return AlphaPoly::div_exact(b, AlphaPoly(b.signed_content()));
    if (b.is_zero()) return AlphaPoly::div_exact(a, AlphaPoly(a.signed_content()));
    if (a.is_constant() || b.is_constant()) return AlphaPoly(1);

    ZPoly u = to_primitive_z(a);
    ZPoly v = to_primitive_z(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        ZPoly r = primitive_part(pseudo_rem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = Rational(u[i]);
    return AlphaPoly(std::move(out));
}

Rational AlphaPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

std::string AlphaPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        Rational mag = c;
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
            mag = -c;
        } else if (!first) {
            out += " + ";
        }
        const bool unit = mag.is_one() && i > 0;
        if (!unit) out += mag.to_string();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Rational AlphaRat::rational_value() const {
    if (!is_rational_constant()) throw kernel_error("not a rational constant");
    return num_.constant_value() / den_.constant_value();
}

void AlphaRat::assign(AlphaPoly num, AlphaPoly den) {
    if (den.is_zero()) throw division_by_zero();
    if (num.is_zero()) {
        num_ = AlphaPoly();
        den_ = AlphaPoly(1);
        return;
    }
    if (den.is_constant()) {
        num_ = num.scaled(den.constant_value().inverse());
        den_ = AlphaPoly(1);
        return;
    }
    if (!num.is_constant()) {
        const AlphaPoly g = AlphaPoly::gcd(num, den);
        if (g.degree() > 0) {
            num = AlphaPoly::div_exact(num, g);
            den = AlphaPoly::div_exact(den, g);
        }
    }
    const Rational c = den.signed_content();
    num_ = num.scaled(c.inverse());
    den_ = den.scaled(c.inverse());
}

AlphaRat AlphaRat::operator-() const {
    AlphaRat out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

AlphaRat operator+(const AlphaRat& a, const AlphaRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) {
        AlphaRat out;
        out.num_ = a.num_ + b.num_;
        if (out.num_.is_zero()) out.den_ = AlphaPoly(1);
        return out;
    }
    return AlphaRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

AlphaRat operator-(const AlphaRat& a, const AlphaRat& b) {
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) {
        AlphaRat out;
        out.num_ = a.num_ - b.num_;
        return out;
    }
    return AlphaRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

AlphaRat operator*(const AlphaRat& a, const AlphaRat& b) {
    if (a.is_zero() || b.is_zero()) return AlphaRat();
    if (a.is_polynomial() && b.is_polynomial()) {
        AlphaRat out;
        out.num_ = a.num_ * b.num_;
        return out;
    }
    return AlphaRat(a.num_ * b.num_, a.den_ * b.den_);
}

AlphaRat operator/(const AlphaRat& a, const AlphaRat& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return AlphaRat();
    return AlphaRat(a.num_ * b.den_, a.den_ * b.num_);
}

AlphaRat AlphaRat::inverse() const {
    if (is_zero()) throw division_by_zero();
    return AlphaRat(den_, num_);
}

AlphaRat AlphaRat::pow(long e) const {
    if (e == 0) return AlphaRat(1);
    AlphaRat base = e < 0 ? inverse() : *this;
    long k = e < 0 ? -e : e;
    AlphaRat acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base = (k >>= 1) > 0 ? base * base : base;
    }
    return acc;
}

Rational AlphaRat::eval(const Rational& alpha0) const {
    const Rational d = den_.eval(alpha0);
    if (d.is_zero()) throw degenerate_parameter(den_.to_string());
    return num_.eval(alpha0) / d;
}

std::string AlphaRat::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    const bool wrap_num = num_.degree() > 0;
    std::string out = wrap_num ? "(" + num_.to_string(var) + ")" : num_.to_string(var);
    out += "/(" + den_.to_string(var) + ")";
    return out;
}

} // namespace xladder
