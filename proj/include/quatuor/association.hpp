#ifndef QUATUOR_ASSOCIATION_HPP
#define QUATUOR_ASSOCIATION_HPP

#include <vector>

#include "quatuor/identities.hpp"
#include "quatuor/tower.hpp"

namespace quatuor {

/// Coefficient of the u -> v transform: the k-th derivative at 0 of
/// t^n e^{-nt} / n!. Zero for k < n, C(k,n) (-n)^(k-n) otherwise.
inline Rational c_coeff(unsigned long k, unsigned long n) {
    if (k < n) return 0;
    return Rational(binomial(k, n)) *
           int_pow(Rational(-static_cast<long>(n)), static_cast<long>(k - n));
}

/// v_k = sum_{n=1}^k C(k,n) (-n)^(k-n) u_n, with v_0 = u_0. The matrix
/// is lower triangular with unit diagonal, so the transform is
/// prefix-stable: v_k depends only on u_0..u_k.
template <Field F>
std::vector<F> forward_transform(const std::vector<F>& u) {
    std::vector<F> v(u.size(), F(0));
    if (u.empty()) return v;
    v[0] = u[0];
    for (std::size_t k = 1; k < u.size(); ++k) {
        F acc(0);
        for (std::size_t n = 1; n <= k; ++n)
            acc = acc + field_from_rational<F>(c_coeff(k, n)) * u[n];
        v[k] = acc;
    }
    return v;
}

/// u_n = sum_{h=1}^n C(n-1,h-1) n^(n-h) v_h, with u_0 = v_0; the exact
/// inverse of forward_transform.
template <Field F>
std::vector<F> backward_transform(const std::vector<F>& v) {
    std::vector<F> u(v.size(), F(0));
    if (v.empty()) return u;
    u[0] = v[0];
    for (std::size_t n = 1; n < v.size(); ++n) {
        F acc(0);
        for (std::size_t h = 1; h <= n; ++h) {
            Rational w = Rational(binomial(n - 1, h - 1)) *
                         int_pow(Rational(static_cast<long>(n)), static_cast<long>(n - h));
            acc = acc + field_from_rational<F>(w) * v[h];
        }
        u[n] = acc;
    }
    return u;
}

/// The verification coefficient d_h = sum_{n=h}^k C(k,n) C(n-1,h-1)
/// (-n)^(k-n) n^(n-h); vanishes for 1 <= h < k and equals 1 at h = k.
inline Rational d_coeff(unsigned long h, unsigned long k) {
    Rational acc = 0;
    for (unsigned long n = h; n <= k; ++n) {
        acc += Rational(binomial(k, n)) * Rational(binomial(n - 1, h - 1)) *
               int_pow(Rational(-static_cast<long>(n)), static_cast<long>(k - n)) *
               int_pow(Rational(static_cast<long>(n)), static_cast<long>(n - h));
    }
    return acc;
}

}  // namespace quatuor

#endif
