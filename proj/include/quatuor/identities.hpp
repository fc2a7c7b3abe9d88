#ifndef QUATUOR_IDENTITIES_HPP
#define QUATUOR_IDENTITIES_HPP

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quatuor/polynomial.hpp"

namespace quatuor {

/// Exact binomial coefficient via the Pascal recurrence, memoized row by
/// row. The table fill is idempotent and guarded for concurrent callers.
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    static std::vector<std::vector<BigInt>> rows;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (rows.size() <= n) {
        std::size_t m = rows.size();
        std::vector<BigInt> row(m + 1, 1);
        for (std::size_t j = 1; j < m; ++j) row[j] = rows[m - 1][j - 1] + rows[m - 1][j];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

/// Integer power with the global convention 0^0 = 1.
inline Rational int_pow(const Rational& base, long e) {
    if (e == 0) return 1;
    return base.pow(e);
}

/// The alternating binomial polynomial sum_{n=0}^{s+1} (-1)^n C(s+1,n) (x+n)^s.
/// Identically zero for every s; computed term by term so tests can
/// confirm that fact instead of assuming it.
inline UniPoly<Rational> p_poly(unsigned long s) {
    UniPoly<Rational> acc;
    UniPoly<Rational> xs = UniPoly<Rational>::monomial(s, Rational(1));
    for (unsigned long n = 0; n <= s + 1; ++n) {
        // (x+n)^s  =  taylor_shift(x^s, -n)
        UniPoly<Rational> term = taylor_shift(xs, Rational(-static_cast<long>(n)));
        Rational c = Rational(binomial(s + 1, n));
        if (n % 2 == 1) c = -c;
        acc += term * c;
    }
    return acc;
}

/// b(q,s) = sum_{n=0}^{s+1} (-1)^n C(s+1,n) n^q, with 0^0 = 1.
inline Rational b_coeff(unsigned long q, unsigned long s) {
    Rational acc = 0;
    for (unsigned long n = 0; n <= s + 1; ++n) {
        Rational term = Rational(binomial(s + 1, n)) * int_pow(Rational(static_cast<long>(n)),
                                                              static_cast<long>(q));
        acc += (n % 2 == 1) ? -term : term;
    }
    return acc;
}

/// a(q,s) = C(s,q) b(q,s); equals the coefficient of x^(s-q) in p_poly(s).
inline Rational a_coeff(unsigned long q, unsigned long s) {
    if (q > s) throw std::domain_error("index out of range");
    return Rational(binomial(s, q)) * b_coeff(q, s);
}

struct IdentityViolation {
    std::string what;  // human-readable first counterexample
};

/// Checks the full identity block up to max_s: p_poly vanishing, the
/// b-recurrence, and a(q,s) against direct coefficient extraction
/// (capped at s <= 25, where the cross-check is priced in the tests).
inline std::optional<IdentityViolation> verify_identities(unsigned long max_s) {
    for (unsigned long s = 0; s <= max_s; ++s) {
        if (!p_poly(s).is_zero())
            return IdentityViolation{"p_poly(" + std::to_string(s) + ") != 0"};
    }
    for (unsigned long s = 1; s <= max_s; ++s) {
        for (unsigned long q = 1; q <= s; ++q) {
            if (b_coeff(q, s) != Rational(-static_cast<long>(s + 1)) * b_coeff(q - 1, s - 1))
                return IdentityViolation{"b(" + std::to_string(q) + "," + std::to_string(s) +
                                         ") != -(s+1) b(q-1,s-1)"};
        }
    }
    for (unsigned long s = 0; s <= std::min<unsigned long>(max_s, 25); ++s) {
        UniPoly<Rational> p = p_poly(s);
        for (unsigned long q = 0; q <= s; ++q) {
            if (a_coeff(q, s) != p.coeff(s - q))
                return IdentityViolation{"a(" + std::to_string(q) + "," + std::to_string(s) +
                                         ") != [x^" + std::to_string(s - q) + "] p_poly(s)"};
        }
    }
    return std::nullopt;
}

}  // namespace quatuor

#endif
