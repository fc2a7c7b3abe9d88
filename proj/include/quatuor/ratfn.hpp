#ifndef QUATUOR_RATFN_HPP
#define QUATUOR_RATFN_HPP

#include <stdexcept>
#include <utility>

#include "quatuor/polynomial.hpp"

namespace quatuor {

/// Reduced rational function num/den over a field F. Canonical form:
/// gcd(num, den) = 1 and den monic, so equality is componentwise. Zero
/// is 0/1.
template <Field F>
class RatFn {
public:
    using field_type = F;

    RatFn() : num_{}, den_{F(1)} {}
    RatFn(int c) : num_{F(c)}, den_{F(1)} {}
    RatFn(const F& c) : num_{c}, den_{F(1)} {}
    RatFn(const UniPoly<F>& p) : num_{p}, den_{F(1)} {}
    RatFn(UniPoly<F> num, UniPoly<F> den) { assign_reduced(std::move(num), std::move(den)); }

    static RatFn variable() { return RatFn(UniPoly<F>::variable()); }

    const UniPoly<F>& num() const { return num_; }
    const UniPoly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == UniPoly<F>(F(1)); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// Value as a field element; only valid for constants.
    F constant_value() const {
        if (!is_constant()) throw std::domain_error("rational function is not constant");
        return num_.coeff(0);  // den is monic constant = 1
    }

    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d.is_zero()) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFn operator-() const {
        RatFn r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Quotient-rule derivative, reduced.
    RatFn derivative() const {
        return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

private:
    UniPoly<F> num_, den_;

    void assign_reduced(UniPoly<F> num, UniPoly<F> den) {
        if (den.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num.is_zero()) {
            num_ = {};
            den_ = UniPoly<F>(F(1));
            return;
        }
        UniPoly<F> g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        F inv_lead = F(1) / den.leading();
        num_ = num * inv_lead;
        den_ = den * inv_lead;
    }
};

/// The canonical reduction entry point: num/den as a reduced,
/// monic-denominator representative.
template <Field F>
RatFn<F> ratfn_reduce(UniPoly<F> num, UniPoly<F> den) {
    return RatFn<F>(std::move(num), std::move(den));
}

/// Gcd overload for polynomials whose coefficient field is itself a
/// fraction field. The plain Euclidean algorithm is catastrophic there:
/// every coefficient operation re-reduces a nested fraction, and the
/// remainder sequence compounds those reductions. Clearing denominators
/// into the underlying polynomial ring and running a primitive
/// pseudo-remainder sequence keeps all coefficients as plain
/// polynomials, with inner gcds confined to content removal.
template <Field G>
UniPoly<RatFn<G>> poly_gcd(const UniPoly<RatFn<G>>& a0, const UniPoly<RatFn<G>>& b0) {
    using P = UniPoly<G>;
    using Vec = std::vector<P>;
    if (a0.is_zero() || b0.is_zero()) {
        const UniPoly<RatFn<G>>& nz = a0.is_zero() ? b0 : a0;
        if (nz.is_zero()) return {};
        return nz * (RatFn<G>(1) / nz.leading());
    }
    auto content = [](const Vec& v) {
        P g{};
        for (const auto& p : v) g = poly_gcd(g, p);
        return g;  // monic, or zero for the zero vector
    };
    auto divide_out = [](Vec& v, const P& d) {
        for (auto& p : v) p = divmod(p, d).first;
    };
    auto make_primitive = [&](Vec& v) {
        P cont = content(v);
        if (!cont.is_zero() && !cont.is_constant()) divide_out(v, cont);
    };
    auto trim = [](Vec& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    // multiply through by the lcm of the coefficient denominators, then
    // strip the content: the result generates the same ideal in F[t]
    auto clear = [&](const UniPoly<RatFn<G>>& f) {
        P l(G(1));
        for (const auto& c : f.coeffs()) {
            if (c.is_zero()) continue;
            P g = poly_gcd(l, c.den());
            l = divmod(l, g).first * c.den();
        }
        Vec out;
        for (const auto& c : f.coeffs())
            out.push_back(c.is_zero() ? P{} : c.num() * divmod(l, c.den()).first);
        make_primitive(out);
        return out;
    };
    auto pseudo_rem = [&](Vec u, const Vec& v) {
        while (u.size() >= v.size() && !u.empty()) {
            P lead_u = u.back();
            std::size_t shift = u.size() - v.size();
            const P& lead_v = v.back();
            for (auto& p : u) p = p * lead_v;
            for (std::size_t i = 0; i < v.size(); ++i) u[i + shift] -= v[i] * lead_u;
            trim(u);
        }
        return u;
    };
    Vec a = clear(a0), b = clear(b0);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Vec r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<RatFn<G>> coeffs;
    coeffs.reserve(a.size());
    for (auto& p : a) coeffs.emplace_back(std::move(p));
    UniPoly<RatFn<G>> out(std::move(coeffs));
    return out * (RatFn<G>(1) / out.leading());
}

}  // namespace quatuor

#endif
