#ifndef QUATUOR_SERIES_HPP
#define QUATUOR_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "quatuor/ratfn.hpp"

namespace quatuor {

/// Truncated power series: exactly the coefficients c_0..c_N of a
/// function, with no claim beyond order N.
template <Field F>
struct PowerSeries {
    std::size_t order = 0;
    std::vector<F> coefficients;  // length order + 1

    F coeff(std::size_t n) const { return n < coefficients.size() ? coefficients[n] : F(0); }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;
};

/// Taylor expansion of f at 0 to order N by exact long division of
/// series; requires den(0) != 0.
template <Field F>
PowerSeries<F> series_expand(const RatFn<F>& f, std::size_t n) {
    const F d0 = f.den().coeff(0);
    if (d0.is_zero()) throw std::domain_error("pole at origin");
    PowerSeries<F> s;
    s.order = n;
    s.coefficients.assign(n + 1, F(0));
    for (std::size_t k = 0; k <= n; ++k) {
        F acc = f.num().coeff(k);
        for (std::size_t i = 1; i <= k; ++i) acc = acc - f.den().coeff(i) * s.coefficients[k - i];
        s.coefficients[k] = acc / d0;
    }
    return s;
}

/// Product of two truncations at their common order.
template <Field F>
PowerSeries<F> series_mul(const PowerSeries<F>& a, const PowerSeries<F>& b) {
    std::size_t n = std::min(a.order, b.order);
    PowerSeries<F> s;
    s.order = n;
    s.coefficients.assign(n + 1, F(0));
    for (std::size_t k = 0; k <= n; ++k) {
        F acc(0);
        for (std::size_t i = 0; i <= k; ++i) acc = acc + a.coeff(i) * b.coeff(k - i);
        s.coefficients[k] = acc;
    }
    return s;
}

}  // namespace quatuor

#endif
