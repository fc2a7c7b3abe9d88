#ifndef QUATUOR_POLYNOMIAL_HPP
#define QUATUOR_POLYNOMIAL_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatuor/rational.hpp"

namespace quatuor {

template <class F>
concept Field = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    F(0);
    F(1);
    a.is_zero();
};

/// Dense univariate polynomial over a field F. Coefficient index equals
/// degree; no trailing zeros are stored, so the zero polynomial is the
/// empty coefficient vector and its degree is reported as "no degree"
/// (std::nullopt) rather than a numeric sentinel.
template <Field F>
class UniPoly {
public:
    using field_type = F;

    UniPoly() = default;
    UniPoly(const F& c) { if (!c.is_zero()) c_.push_back(c); }
    UniPoly(int c) : UniPoly(F(c)) {}
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return monomial(1, F(1)); }
    static UniPoly monomial(std::size_t deg, const F& c) {
        if (c.is_zero()) return {};
        std::vector<F> v(deg + 1, F(0));
        v[deg] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    const F& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }

    F eval(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<int>(i));
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(v));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    UniPoly operator-() const {
        std::vector<F> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const UniPoly& a, const F& s) {
        std::vector<F> v(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i] * s;
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const F& s, const UniPoly& a) { return a * s; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

private:
    std::vector<F> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Euclidean division: a = q*b + r with deg r < deg b.
template <Field F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero() || *a.degree() < *b.degree()) return {UniPoly<F>{}, a};
    std::size_t dq = *a.degree() - *b.degree();
    std::vector<F> q(dq + 1, F(0));
    UniPoly<F> r = a;
    const F inv_lead = F(1) / b.leading();
    while (!r.is_zero() && *r.degree() >= *b.degree()) {
        std::size_t shift = *r.degree() - *b.degree();
        F c = r.leading() * inv_lead;
        q[shift] = c;
        r = r - UniPoly<F>::monomial(shift, c) * b;
    }
    return {UniPoly<F>(std::move(q)), r};
}

/// Monic gcd by the Euclidean algorithm. Degrees in this project stay
/// small, so plain remainder sequences are adequate even over nested
/// fraction fields.
template <Field F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        // renormalizing each remainder keeps nested coefficients from
        // compounding across steps
        b = b * (F(1) / b.leading());
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (F(1) / a.leading());
}

/// Over the rationals the Euclidean remainder sequence grows enormous
/// numerators and denominators. Clearing to integer coefficients and
/// running a primitive pseudo-remainder sequence keeps every
/// intermediate an integer polynomial with content stripped.
inline UniPoly<Rational> poly_gcd(const UniPoly<Rational>& a0, const UniPoly<Rational>& b0) {
    using Vec = std::vector<BigInt>;
    if (a0.is_zero() || b0.is_zero()) {
        const UniPoly<Rational>& nz = a0.is_zero() ? b0 : a0;
        if (nz.is_zero()) return {};
        return nz * (Rational(1) / nz.leading());
    }
    auto clear = [](const UniPoly<Rational>& f) {
        BigInt l = 1;
        for (const auto& c : f.coeffs()) l = l / gcd(l, c.denominator()) * c.denominator();
        Vec out;
        for (const auto& c : f.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
        BigInt cont = 0;
        for (const auto& x : out) cont = gcd(cont, x);
        for (auto& x : out) x /= cont;
        return out;
    };
    auto trim = [](Vec& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto make_primitive = [&](Vec& v) {
        trim(v);
        BigInt cont = 0;
        for (const auto& x : v) cont = gcd(cont, x);
        if (cont > 1)
            for (auto& x : v) x /= cont;
    };
    auto pseudo_rem = [&](Vec u, const Vec& v) {
        while (u.size() >= v.size() && !u.empty()) {
            BigInt lead_u = u.back();
            std::size_t shift = u.size() - v.size();
            const BigInt& lead_v = v.back();
            for (auto& x : u) x *= lead_v;
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
    std::vector<Rational> coeffs;
    coeffs.reserve(a.size());
    const BigInt& lead = a.back();
    for (const auto& x : a) coeffs.emplace_back(x, lead);
    return UniPoly<Rational>(std::move(coeffs));
}

template <Field F>
UniPoly<F> poly_pow(const UniPoly<F>& p, unsigned long e) {
    UniPoly<F> acc(F(1)), base = p;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

/// Substitution P(Q(x)) by Horner's scheme.
template <Field F>
UniPoly<F> compose(const UniPoly<F>& p, const UniPoly<F>& q) {
    UniPoly<F> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * q + UniPoly<F>(*it);
    return acc;
}

/// Returns Q with Q(w) = P(w - c), i.e. P(z) = Q(z + c); coefficient j of
/// Q is P^(j)(-c)/j!.
template <Field F>
UniPoly<F> taylor_shift(const UniPoly<F>& p, const F& c) {
    return compose(p, UniPoly<F>(std::vector<F>{-c, F(1)}));
}

}  // namespace quatuor

#endif
