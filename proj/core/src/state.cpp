#include "xladder/state.hpp"

#include <algorithm>
#include <tuple>

#include "xladder/linalg.hpp"

namespace xladder {

namespace {

int key_compare(const QTerm& a, const QTerm& b) {
    if (a.s != b.s) return a.s < b.s ? -1 : 1;
    if (a.b.p != b.b.p) return a.b.p < b.b.p ? -1 : 1;
    if (a.b.q != b.b.q) return a.b.q < b.b.q ? -1 : 1;
    return 0;
}

} // namespace

StateSum StateSum::term(const Rational& s, const Rational& p, long q, const XRat& r) {
    if (r.is_zero()) return StateSum();
    const Int k = p.floor();
    QTerm t;
    t.s = s;
    t.b.p = p - Rational(k);
    t.b.q = q;
    t.r = r.shifted_by_x_power(static_cast<int>(k.get_si()));
    StateSum out;
    out.terms_.push_back(std::move(t));
    return out;
}

const QTerm& StateSum::single_term() const {
    if (!is_single_term()) throw kernel_error("state is not a single term");
    return terms_.front();
}

void StateSum::insert_term(QTerm t) {
    if (t.r.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [](const QTerm& a, const QTerm& b) { return key_compare(a, b) < 0; });
    if (it != terms_.end() && key_compare(*it, t) == 0) {
        it->r += t.r;
        if (it->r.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(t));
    }
}

StateSum StateSum::operator-() const {
    StateSum out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.s, t.b, -t.r});
    return out;
}

StateSum operator+(const StateSum& a, const StateSum& b) {
    StateSum out = a;
    for (const auto& t : b.terms_) out.insert_term(t);
    return out;
}

StateSum operator-(const StateSum& a, const StateSum& b) {
    StateSum out = a;
    for (const auto& t : b.terms_) out.insert_term({t.s, t.b, -t.r});
    return out;
}

StateSum operator*(const StateSum& a, const StateSum& b) {
    StateSum out;
    for (const auto& u : a.terms_) {
        for (const auto& v : b.terms_) {
            StateSum prod = StateSum::term(u.s + v.s, u.b.p + v.b.p, u.b.q + v.b.q, u.r * v.r);
            for (const auto& t : prod.terms_) out.insert_term(t);
        }
    }
    return out;
}

bool operator==(const StateSum& a, const StateSum& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        const QTerm& u = a.terms_[i];
        const QTerm& v = b.terms_[i];
        if (key_compare(u, v) != 0 || !(u.r == v.r)) return false;
    }
    return true;
}

StateSum StateSum::scaled(const AlphaRat& c) const {
    if (c.is_zero()) return StateSum();
    StateSum out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.s, t.b, t.r.scaled(c)});
    return out;
}

StateSum StateSum::scaled(const XRat& c) const {
    if (c.is_zero()) return StateSum();
    StateSum out;
    for (const auto& t : terms_) out.insert_term({t.s, t.b, t.r * c});
    return out;
}

StateSum StateSum::reciprocal() const {
    const QTerm& t = single_term();
    return term(-t.s, -t.b.p, -t.b.q, t.r.inverse());
}

StateSum StateSum::derivative() const {
    StateSum out;
    const XRat x = XRat::x();
    for (const auto& t : terms_) {
        // d/dx [e^{s x^2} x^b r] = e^{s x^2} x^b (2 s x r + (b/x) r + r')
        const AlphaRat b_exp = AlphaRat(AlphaPoly(std::vector<Rational>{
            t.b.p, Rational(t.b.q)}));
        XRat r_new = t.r.scaled(AlphaRat(Rational(2) * t.s)) * x;
        r_new += t.r.scaled(b_exp).shifted_by_x_power(-1);
        r_new += t.r.derivative();
        out.insert_term({t.s, t.b, std::move(r_new)});
    }
    return out;
}

XRat StateSum::log_derivative() const {
    const QTerm& t = single_term();
    const AlphaRat b_exp = AlphaRat(AlphaPoly(std::vector<Rational>{t.b.p, Rational(t.b.q)}));
    XRat out = XRat::x().scaled(AlphaRat(Rational(2) * t.s));
    out += XRat(b_exp).shifted_by_x_power(-1);
    out += t.r.derivative() / t.r;
    return out;
}

std::string StateSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        std::string factors;
        if (!t.s.is_zero()) {
            factors += "exp(" + t.s.to_string() + "*x^2)";
        }
        if (!t.b.p.is_zero() || t.b.q != 0) {
            if (!factors.empty()) factors += " * ";
            std::string e = t.b.p.is_zero() ? "" : t.b.p.to_string();
            if (t.b.q != 0) {
                if (!e.empty()) e += t.b.q > 0 ? " + " : " - ";
                else if (t.b.q < 0) e += "-";
                const long qa = t.b.q > 0 ? t.b.q : -t.b.q;
                if (qa != 1) e += std::to_string(qa) + "*";
                e += "a";
            }
            factors += "x^(" + e + ")";
        }
        if (!factors.empty()) factors += " * ";
        factors += "(" + t.r.num().to_string() + ")";
        if (!t.r.is_polynomial()) factors += "/(" + t.r.den().to_string() + ")";
        out += factors;
    }
    return out;
}

SecondKindState::SecondKindState(StateSum g, StateSum f, StateSum anchor)
    : g_(std::move(g)), f_(std::move(f)), anchor_(std::move(anchor)) {
    if (!anchor_.is_single_term()) throw unsupported_anchor();
}

SecondKindState operator+(const SecondKindState& a, const SecondKindState& b) {
    if (!(a.anchor_ == b.anchor_)) throw kernel_error("mismatched anchors");
    return SecondKindState(a.g_ + b.g_, a.f_ + b.f_, a.anchor_);
}

SecondKindState operator-(const SecondKindState& a, const SecondKindState& b) {
    if (!(a.anchor_ == b.anchor_)) throw kernel_error("mismatched anchors");
    return SecondKindState(a.g_ - b.g_, a.f_ - b.f_, a.anchor_);
}

bool operator==(const SecondKindState& a, const SecondKindState& b) {
    return a.anchor_ == b.anchor_ && a.g_ == b.g_ && a.f_ == b.f_;
}

SecondKindState SecondKindState::derivative() const {
    const StateSum inv_sq = (anchor_ * anchor_).reciprocal();
    return SecondKindState(g_.derivative() + f_ * inv_sq, f_.derivative(), anchor_);
}

std::string SecondKindState::to_string() const {
    return "(" + g_.to_string() + ") + (" + f_.to_string() + ") * I[" + anchor_.to_string() + "]";
}

namespace {

// Stacks the per-key polynomial identities of "sum_i c_i basis_i = target"
// into one linear system over Q(alpha).
void build_rows(const std::vector<StateSum>& basis, const StateSum& target,
                std::vector<std::vector<AlphaRat>>& rows, std::vector<AlphaRat>& rhs) {
    struct Key {
        Rational s, p;
        long q;
    };
    std::vector<Key> keys;
    auto add_key = [&](const QTerm& t) {
        for (const auto& k : keys) {
            if (k.s == t.s && k.p == t.b.p && k.q == t.b.q) return;
        }
        keys.push_back({t.s, t.b.p, t.b.q});
    };
    for (const auto& b : basis) {
        for (const auto& t : b.terms()) add_key(t);
    }
    for (const auto& t : target.terms()) add_key(t);

    for (const auto& key : keys) {
        auto coeff_of = [&](const StateSum& s) -> XRat {
            for (const auto& t : s.terms()) {
                if (t.s == key.s && t.b.p == key.p && t.b.q == key.q) return t.r;
            }
            return XRat();
        };
        // common denominator across participating rational coefficients
        FieldPoly common(1);
        auto fold_den = [&](const XRat& r) {
            if (r.is_zero()) return;
            const FieldPoly g = FieldPoly::gcd(common, r.den());
            common = common * FieldPoly::div_exact(r.den(), g);
        };
        std::vector<XRat> cols(basis.size());
        for (size_t i = 0; i < basis.size(); ++i) {
            cols[i] = coeff_of(basis[i]);
            fold_den(cols[i]);
        }
        const XRat t = coeff_of(target);
        fold_den(t);

        auto numerator = [&](const XRat& r) -> FieldPoly {
            if (r.is_zero()) return FieldPoly();
            return r.num() * FieldPoly::div_exact(common, r.den());
        };
        std::vector<FieldPoly> nums(basis.size());
        int max_deg = -1;
        for (size_t i = 0; i < basis.size(); ++i) {
            nums[i] = numerator(cols[i]);
            max_deg = std::max(max_deg, nums[i].degree());
        }
        const FieldPoly tn = numerator(t);
        max_deg = std::max(max_deg, tn.degree());
        for (int d = 0; d <= max_deg; ++d) {
            std::vector<AlphaRat> row(basis.size());
            bool nontrivial = false;
            for (size_t i = 0; i < basis.size(); ++i) {
                row[i] = nums[i].coeff(d);
                nontrivial = nontrivial || !row[i].is_zero();
            }
            const AlphaRat r = tn.coeff(d);
            if (nontrivial || !r.is_zero()) {
                rows.push_back(std::move(row));
                rhs.push_back(r);
            }
        }
    }
}

} // namespace

std::optional<std::vector<AlphaRat>> decompose(const StateSum& target,
                                               const std::vector<StateSum>& basis) {
    if (target.is_zero()) return std::vector<AlphaRat>(basis.size(), AlphaRat(0));
    std::vector<std::vector<AlphaRat>> rows;
    std::vector<AlphaRat> rhs;
    build_rows(basis, target, rows, rhs);
    auto sol = solve_linear(std::move(rows), std::move(rhs));
    if (!sol.particular) return std::nullopt;
    return sol.particular;
}

std::optional<AlphaRat> proportionality(const StateSum& target, const StateSum& reference) {
    if (target.is_zero()) return AlphaRat(0);
    if (reference.is_zero()) return std::nullopt;
    auto c = decompose(target, {reference});
    if (!c) return std::nullopt;
    return (*c)[0];
}

} // namespace xladder
