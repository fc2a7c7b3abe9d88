#ifndef QUATUOR_TOWER_HPP
#define QUATUOR_TOWER_HPP

#include <stdexcept>
#include <vector>

#include "quatuor/ratfn.hpp"

namespace quatuor {

/// The two-level field tower: Q(y), then Q(y)(t). The paper's ladders
/// need exactly these two levels, so nothing more generic is built.
using YElem = RatFn<Rational>;  // rational function in y
using TElem = RatFn<YElem>;     // rational function in t over Q(y)

inline YElem y_var() { return YElem::variable(); }
inline TElem t_var() { return TElem::variable(); }

/// Embeds a rational scalar into an arbitrary tower level.
template <Field F>
F field_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<F, Rational>) {
        return r;
    } else {
        return F(field_from_rational<typename F::field_type>(r));
    }
}

inline bool is_constant_in_y(const YElem& e) { return e.is_constant(); }

inline bool is_constant_in_y(const UniPoly<YElem>& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_constant()) return false;
    return true;
}

inline bool is_constant_in_y(const TElem& e) {
    return is_constant_in_y(e.num()) && is_constant_in_y(e.den());
}

struct YPoleError : std::domain_error {
    Rational y0;
    explicit YPoleError(Rational at)
        : std::domain_error("y-specialization pole at y = " + at.to_string()), y0(std::move(at)) {}
};

namespace detail {
inline Rational eval_y(const YElem& c, const Rational& y0) {
    Rational d = c.den().eval(y0);
    if (d.is_zero()) throw YPoleError(y0);
    return c.num().eval(y0) / d;
}

inline UniPoly<Rational> specialize_poly(const UniPoly<YElem>& p, const Rational& y0) {
    std::vector<Rational> out(p.coeffs().size(), Rational(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = eval_y(p.coeffs()[i], y0);
    return UniPoly<Rational>(std::move(out));
}
}  // namespace detail

/// Evaluates every y-coefficient of e at y0 and reduces the result.
/// Throws YPoleError when any coefficient has a pole at y0 or the
/// specialized denominator vanishes.
inline RatFn<Rational> substitute_y(const TElem& e, const Rational& y0) {
    UniPoly<Rational> num = detail::specialize_poly(e.num(), y0);
    UniPoly<Rational> den = detail::specialize_poly(e.den(), y0);
    if (den.is_zero()) throw YPoleError(y0);
    return RatFn<Rational>(std::move(num), std::move(den));
}

inline TElem t_derivative(const TElem& e) { return e.derivative(); }

/// Lifts a plain Q(t) element to the tower (constant in y).
inline TElem lift_plain(const RatFn<Rational>& f) {
    auto lift_poly = [](const UniPoly<Rational>& p) {
        std::vector<YElem> c(p.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = YElem(p.coeffs()[i]);
        return UniPoly<YElem>(std::move(c));
    };
    return TElem(lift_poly(f.num()), lift_poly(f.den()));
}

/// Extracts the plain Q(t) value of a y-free element.
inline RatFn<Rational> to_plain(const TElem& e) {
    if (!is_constant_in_y(e)) throw std::domain_error("element depends on y");
    auto drop = [](const UniPoly<YElem>& p) {
        std::vector<Rational> c(p.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].constant_value();
        return UniPoly<Rational>(std::move(c));
    };
    return RatFn<Rational>(drop(e.num()), drop(e.den()));
}

enum class Twist { plain, t_power_y };

/// One closed-form ladder entry: either a plain element of Q(t) or the
/// t^y-twisted form t^y * body with body in Q(y)(t).
struct TwistedForm {
    Twist twist = Twist::plain;
    TElem body;

    friend bool operator==(const TwistedForm& a, const TwistedForm& b) = default;
};

}  // namespace quatuor

#endif
