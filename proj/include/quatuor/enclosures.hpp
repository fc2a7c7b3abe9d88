#ifndef QUATUOR_ENCLOSURES_HPP
#define QUATUOR_ENCLOSURES_HPP

#include <functional>

#include "quatuor/interval.hpp"
#include "quatuor/pipeline.hpp"

namespace quatuor {

/// Encloses e^(-t0) for 0 <= t0 <= 1 with width <= eps. Consecutive
/// partial sums of the alternating Taylor series bracket the limit once
/// the term magnitudes decrease, which holds from n = 1 on this domain.
inline IntervalReal exp_neg_enclosure(const Rational& t0, const Rational& eps) {
    if (t0 < Rational(0) || t0 > Rational(1))
        throw std::domain_error("exp_neg_enclosure requires 0 <= t0 <= 1");
    if (eps <= Rational(0)) throw std::invalid_argument("eps must be positive");
    if (t0.is_zero()) return IntervalReal::point(1);
    Rational sum = 1, term = 1;
    unsigned long n = 0;
    while (true) {
        ++n;
        term = term * -t0 / Rational(static_cast<long>(n));
        Rational prev = sum;
        sum += term;
        if (n >= 2 && term.abs() <= eps) {
            // limit lies between the last two partial sums
            return {std::min(prev, sum), std::max(prev, sum)};
        }
    }
}

/// Enclosure of e itself, by reciprocating an enclosure of 1/e.
inline IntervalReal e_enclosure(const Rational& eps) {
    Rational inner = eps / 16;
    for (int i = 0; i < 64; ++i) {
        IntervalReal e = exp_neg_enclosure(1, inner).reciprocal();
        if (e.width() <= eps) return e;
        inner = inner / 16;
    }
    throw std::logic_error("e enclosure failed to converge");
}

namespace detail {
/// Bisection bracket [a, b] with a^q <= c <= b^q, shrunk to width tol.
inline IntervalReal nth_root_bracket(const Rational& c, unsigned long q, const Rational& tol) {
    if (c < Rational(0)) throw std::domain_error("root of negative value");
    if (c.is_zero()) return IntervalReal::point(0);
    Rational a = std::min(c, Rational(1)), b = std::max(c, Rational(1));
    while (b - a > tol) {
        Rational mid = (a + b) / 2;
        if (mid.pow(static_cast<long>(q)) <= c)
            a = mid;
        else
            b = mid;
    }
    return {a, b};
}
}  // namespace detail

/// Enclosure of v^r for a strictly positive interval v and rational
/// r = p/q, via a certified q-th root and directed integer powers.
inline IntervalReal pow_rational_enclosure(const IntervalReal& v, const Rational& r,
                                           const Rational& eps) {
    if (v.lo <= Rational(0)) throw std::domain_error("power of nonpositive interval");
    if (r.is_zero()) return IntervalReal::point(1);
    const long p = r.numerator().convert_to<long>();
    const unsigned long q = r.denominator().convert_to<unsigned long>();
    Rational tol = eps / 8;
    for (int attempt = 0; attempt < 64; ++attempt) {
        IntervalReal root{detail::nth_root_bracket(v.lo, q, tol).lo,
                          detail::nth_root_bracket(v.hi, q, tol).hi};
        IntervalReal out = root.pow_int(p);
        if (out.width() <= eps) return out;
        tol = tol / 64;
    }
    throw std::logic_error("rational power enclosure failed to converge");
}

/// Certified geometric tail data for a series sum u_n x^n / n!: for all
/// n >= start, |term_{n+1}| <= ratio * |term_n| with ratio < 1.
struct TailPolicy {
    unsigned long start = 1;
    Rational ratio;
};

/// Tail policy for the power-family coefficients u_n = (n+y)^(n-k) with
/// y >= 0. The term ratio is x (n+1+y) (1 + 1/(n+y))^(n-k) / (n+1); the
/// middle factor is below e^(j/m) with j/m <= 1 + delta for n >= N0, and
/// e^delta <= 1 + 2 delta for delta <= 1, giving the rational bound
/// ratio <= x_hi * e_up * (1 + 2 delta) * (1 + y/(N0+1)).
inline TailPolicy power_family_tail(const Rational& y, long k, const IntervalReal& x) {
    if (y < Rational(0))
        throw std::domain_error("tail bound failed: negative shift unsupported");
    static const Rational e_up = [] { return e_enclosure(Rational(1, 1 << 20)).hi; }();
    long n0 = std::max<long>({20, k + 1, 1});
    if (y + Rational(k) < Rational(0)) {
        // keep delta = (N0-k)/(N0+y) - 1 at most 1
        Rational need = -Rational(k) - y * 2;
        n0 = std::max<long>(n0, (ceil(need) + 2).convert_to<long>());
    }
    for (; n0 <= (1L << 22); n0 *= 2) {
        Rational n0r(n0);
        Rational delta = (n0r - Rational(k)) / (n0r + y) - Rational(1);
        if (delta < Rational(0)) delta = 0;
        Rational ratio = x.hi * e_up * (Rational(1) + delta * 2) *
                         (Rational(1) + y / (n0r + Rational(1)));
        if (ratio < Rational(1)) return {static_cast<unsigned long>(n0), ratio};
    }
    throw std::domain_error("tail bound failed: x too close to 1/e");
}

/// Encloses sum_{n>=1} u_n x^n / n! with width <= eps for x >= 0, using
/// the supplied certified tail policy to close the series.
inline IntervalReal partial_sum_enclosure(const std::function<Rational(unsigned long)>& u,
                                          const IntervalReal& x, const Rational& eps,
                                          const TailPolicy& tail) {
    if (x.lo < Rational(0)) throw std::domain_error("negative x unsupported");
    if (eps <= Rational(0)) throw std::invalid_argument("eps must be positive");
    if (!(tail.ratio < Rational(1)))
        throw std::domain_error("tail bound failed: ratio >= 1");
    IntervalReal acc = IntervalReal::point(0);
    IntervalReal xpow = IntervalReal::point(1);
    Rational inv_fact = 1;
    const Rational amp = tail.ratio / (Rational(1) - tail.ratio);
    for (unsigned long n = 1; n <= 200000; ++n) {
        xpow = outward_round_rel(xpow * x, 512);
        inv_fact /= Rational(static_cast<long>(n));
        IntervalReal term = xpow * (u(n) * inv_fact);
        acc = outward_round(acc + term, 512);
        if (n >= tail.start) {
            // the tail contributes at most eps to the width; whatever
            // width x itself carries propagates into acc and is the
            // caller's to control
            Rational tb = term.mag() * amp;
            if (tb * 2 <= eps) return acc + IntervalReal{-tb, tb};
        }
    }
    throw std::domain_error("tail bound failed: series did not close");
}

/// Enclosure of sum_{n>=1} n^(n-k) e^(-n) / n!, the opus-2 value at the
/// boundary t = 1 (x = 1/e), for k >= 1. The geometric tail bound does
/// not apply on the boundary; instead n! >= sqrt(6n) (n/e)^n gives
/// term_n <= n^(-k) / sqrt(6n), and the integral comparison yields
/// tail <= (5/6) M^(1-2k) / (2k-1) after N = M^2 terms.
inline IntervalReal opus2_boundary_enclosure(long k, unsigned long sqrt_terms) {
    if (k < 1) throw std::domain_error("divergent at t = 1");
    const unsigned long N = sqrt_terms * sqrt_terms;
    IntervalReal einv = exp_neg_enclosure(1, Rational(1, BigInt(1) << 130));
    IntervalReal acc = IntervalReal::point(0);
    IntervalReal epow = IntervalReal::point(1);
    Rational inv_fact = 1;
    // e^{-n} reaches 2^(-1.45 N); magnitude-relative rounding keeps the
    // grid below the value instead of collapsing it to the grid size
    for (unsigned long n = 1; n <= N; ++n) {
        epow = outward_round_rel(epow * einv, 400);
        inv_fact /= Rational(static_cast<long>(n));
        Rational coeff = int_pow(Rational(static_cast<long>(n)),
                                 static_cast<long>(n) - k) * inv_fact;
        // n^(n-k)/n! has ten-thousand-bit numerators; rounding it before
        // the interval multiply keeps every product gcd small
        IntervalReal c = outward_round_rel(IntervalReal::point(coeff), 500);
        acc = outward_round(acc + epow * c, 400);
    }
    Rational tailhi = Rational(5, 6) *
                      Rational(BigInt(sqrt_terms)).pow(1 - 2 * k) /
                      Rational(2 * k - 1);
    return acc + IntervalReal{Rational(0), tailhi};
}

/// Certified residual |t0^r g(t0) - x0^r (S(x0) + offset)| (or the
/// untwisted analogue for r = 0) at x0 = t0 e^(-t0); returns an
/// enclosure of width <= eps which must contain 0 when the pipeline is
/// consistent.
inline IntervalReal residual_check(const PipelineResult& res, const Rational& t0,
                                   const Rational& eps) {
    if (t0 <= Rational(0) || t0 >= Rational(1))
        throw std::domain_error("t0 must lie in (0,1)");
    if (eps <= Rational(0)) throw std::invalid_argument("eps must be positive");
    const Rational g_val = res.g.eval(t0);
    std::size_t nterms = 0;
    for (const auto& [k, a] : res.A)
        if (!a.is_zero()) ++nterms;
    // The series inherits the width of x0 amplified by its derivative, so
    // the x0 tolerance must shrink across retries while the per-term
    // width budget stays pinned to eps.
    const Rational per_term =
        eps / (Rational(8) * Rational(static_cast<long>(std::max<std::size_t>(nterms, 1))));
    const Rational inner = eps / 8;
    Rational x_tol = eps / 64;
    for (int attempt = 0; attempt < 40; ++attempt) {
        IntervalReal x0 = IntervalReal::point(t0) * exp_neg_enclosure(t0, x_tol);
        IntervalReal series = IntervalReal::point(0);
        const Rational shift = res.kase == PipelineResult::Case::r_nonzero ? res.r : Rational(0);
        for (const auto& [k, a] : res.A) {
            if (a.is_zero()) continue;
            auto gen = [&shift, k = k](unsigned long n) {
                return int_pow(shift + Rational(static_cast<long>(n)),
                               static_cast<long>(n) - k);
            };
            TailPolicy tp = power_family_tail(shift, k, x0);
            series = series + partial_sum_enclosure(gen, x0, per_term, tp) * a;
        }
        IntervalReal residual;
        if (res.kase == PipelineResult::Case::r_nonzero) {
            IntervalReal tr = pow_rational_enclosure(IntervalReal::point(t0), res.r, inner);
            IntervalReal xr = pow_rational_enclosure(x0, res.r, inner);
            residual = tr * g_val - xr * (series + IntervalReal::point(res.offset));
        } else {
            residual = IntervalReal::point(g_val) - series;
        }
        if (residual.width() <= eps) return residual;
        x_tol = x_tol / 1024;
    }
    throw std::logic_error("residual enclosure failed to converge");
}

}  // namespace quatuor

#endif
