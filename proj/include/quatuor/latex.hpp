#ifndef QUATUOR_LATEX_HPP
#define QUATUOR_LATEX_HPP

#include <string>

#include "quatuor/tower.hpp"

namespace quatuor {

namespace detail {

inline std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.numerator().str();
    return (r < Rational(0) ? "-" : "") +
           ("\\frac{" + r.abs().numerator().str() + "}{" + r.denominator().str() + "}");
}

inline std::string latex_power(const std::string& var, std::size_t d) {
    if (d == 0) return "";
    if (d == 1) return var;
    return var + "^{" + std::to_string(d) + "}";
}

/// Ascending-degree rendering: "1-t", "t-\frac{1}{2}t^{2}", ...
inline std::string latex_poly(const UniPoly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        const Rational& c = p.coeffs()[d];
        if (c.is_zero()) continue;
        std::string mag;
        Rational a = c.abs();
        if (d == 0 || a != Rational(1)) mag = latex_rational(a);
        mag += latex_power(var, d);
        if (out.empty())
            out = (c < Rational(0) ? "-" : "") + mag;
        else
            out += (c < Rational(0) ? "-" : "+") + mag;
    }
    return out;
}

inline bool is_sum(const UniPoly<Rational>& p) {
    std::size_t nonzero = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) ++nonzero;
    return nonzero > 1;
}

/// Sign-normalized display pair: flips num and den together when den's
/// lowest nonzero coefficient is negative, so 1/(t-1) prints as -1/(1-t)
/// style fractions the way the closed forms are usually written.
inline void display_normalize(UniPoly<Rational>& num, UniPoly<Rational>& den) {
    for (const auto& c : den.coeffs()) {
        if (c.is_zero()) continue;
        if (c < Rational(0)) {
            num = -num;
            den = -den;
        }
        return;
    }
}

inline std::string latex_yelem(const YElem& e) {
    if (e.is_polynomial()) return latex_poly(e.num(), "y");
    UniPoly<Rational> n = e.num(), d = e.den();
    display_normalize(n, d);
    return "\\frac{" + latex_poly(n, "y") + "}{" + latex_poly(d, "y") + "}";
}

inline std::string latex_tpoly(const UniPoly<YElem>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        const YElem& c = p.coeffs()[d];
        if (c.is_zero()) continue;
        std::string piece;
        if (c.is_constant()) {
            Rational v = c.constant_value();
            std::string mag;
            Rational a = v.abs();
            if (d == 0 || a != Rational(1)) mag = latex_rational(a);
            mag += latex_power("t", d);
            piece = (v < Rational(0) ? "-" : (out.empty() ? "" : "+")) + mag;
        } else {
            std::string coeff = latex_yelem(c);
            if (is_sum(c.num()) && c.is_polynomial())
                coeff = "\\left(" + coeff + "\\right)";
            piece = (out.empty() ? "" : "+") + coeff + latex_power("t", d);
        }
        out += piece;
    }
    return out;
}

}  // namespace detail

inline std::string to_latex(const RatFn<Rational>& f) {
    if (f.is_polynomial()) return detail::latex_poly(f.num(), "t");
    UniPoly<Rational> n = f.num(), d = f.den();
    detail::display_normalize(n, d);
    return "\\frac{" + detail::latex_poly(n, "t") + "}{" + detail::latex_poly(d, "t") + "}";
}

/// Rendering with the t^y twist merged into the numerator, so the
/// Kolberg F_0 prints as \frac{t^{y}}{1-t}.
inline std::string to_latex(const TwistedForm& f) {
    if (f.twist == Twist::plain) return to_latex(to_plain(f.body));
    auto num_is_y_free = is_constant_in_y(f.body.num());
    auto den_is_y_free = is_constant_in_y(f.body.den());
    std::string num_str, den_str;
    if (num_is_y_free && den_is_y_free) {
        RatFn<Rational> plain = to_plain(f.body);
        UniPoly<Rational> n = plain.num(), d = plain.den();
        detail::display_normalize(n, d);
        num_str = detail::latex_poly(n, "t");
        den_str = detail::latex_poly(d, "t");
    } else {
        num_str = detail::latex_tpoly(f.body.num());
        den_str = detail::latex_tpoly(f.body.den());
    }
    std::string top = "t^{y}";
    if (num_str != "1") {
        if (num_str.find('+') != std::string::npos || num_str.find('-') != std::string::npos)
            top += "\\left(" + num_str + "\\right)";
        else
            top += num_str;
    }
    if (den_str == "1") return top;
    return "\\frac{" + top + "}{" + den_str + "}";
}

}  // namespace quatuor

#endif
