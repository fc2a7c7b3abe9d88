#ifndef QUATUOR_PIPELINE_HPP
#define QUATUOR_PIPELINE_HPP

#include <map>
#include <utility>

#include "quatuor/ladder.hpp"

namespace quatuor {

/// Integers n for which s^n g(s) is constant. Structurally this is all
/// of Z when g = 0, the single point -m when g is the monomial c s^m,
/// and empty otherwise.
struct ExceptionalSet {
    enum class Kind { empty, singleton, all_integers };
    Kind kind = Kind::empty;
    long n = 0;  // meaningful for singleton only

    bool contains(const Rational& r) const {
        if (!r.is_integer()) return false;
        switch (kind) {
            case Kind::empty: return false;
            case Kind::all_integers: return true;
            case Kind::singleton: return r.numerator() == n;
        }
        return false;
    }

    friend bool operator==(const ExceptionalSet& a, const ExceptionalSet& b) = default;
};

namespace detail {
inline bool is_monomial(const UniPoly<Rational>& p, std::size_t& deg) {
    if (p.is_zero()) return false;
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i)
        if (!p.coeffs()[i].is_zero()) return false;
    deg = *p.degree();
    return true;
}
}  // namespace detail

inline ExceptionalSet exceptional_set(const RatFn<Rational>& g) {
    if (g.is_zero()) return {ExceptionalSet::Kind::all_integers, 0};
    std::size_t dn = 0, dd = 0;
    if (detail::is_monomial(g.num(), dn) && detail::is_monomial(g.den(), dd))
        return {ExceptionalSet::Kind::singleton, static_cast<long>(dd) - static_cast<long>(dn)};
    return {ExceptionalSet::Kind::empty, 0};
}

/// The polynomial with the candidate value t as a root if t^r g(t) = d
/// held for algebraic d: s^p u^q - d^q v^q (r > 0), u - d v (r = 0), or
/// u^q - d^q s^(-p) v^q (r < 0), with g = u/v and r = p/q reduced.
/// Never the zero polynomial when r avoids the exceptional set.
inline UniPoly<Rational> witness_polynomial(const RatFn<Rational>& g, const Rational& r,
                                            const Rational& d) {
    if (exceptional_set(g).contains(r) ||
        (g.is_zero()))
        throw std::domain_error("degenerate: witness vanishes identically");
    const BigInt p = r.numerator();
    const unsigned long q = r.denominator().convert_to<unsigned long>();
    const UniPoly<Rational>& u = g.num();
    const UniPoly<Rational>& v = g.den();
    if (r.is_zero()) return u - v * d;
    UniPoly<Rational> uq = poly_pow(u, q);
    UniPoly<Rational> vq = poly_pow(v, q) * d.pow(static_cast<long>(q));
    if (r > Rational(0))
        return UniPoly<Rational>::monomial(p.convert_to<unsigned long>(), Rational(1)) * uq - vq;
    return uq - UniPoly<Rational>::monomial((-p).convert_to<unsigned long>(), Rational(1)) * vq;
}

struct Rebase {
    long q = 0;                  // lowest index with p_q != 0
    long m = 0;                  // degree of P
    std::map<long, Rational> p;  // p_j for q <= j <= m (possibly zero inside)
};

/// Rewrites P(z) = sum_{j=q}^m p_j (z+r)^j via a Taylor shift.
inline Rebase rebase_poly(const UniPoly<Rational>& P, const Rational& r) {
    if (P.is_zero()) throw std::domain_error("zero polynomial");
    UniPoly<Rational> shifted = taylor_shift(P, r);  // coefficients of (z+r)^j
    Rebase out;
    out.m = static_cast<long>(*shifted.degree());
    long q = 0;
    while (shifted.coeff(static_cast<std::size_t>(q)).is_zero()) ++q;
    out.q = q;
    for (long j = q; j <= out.m; ++j)
        out.p[j] = shifted.coeff(static_cast<std::size_t>(j));
    return out;
}

/// Remark-1 reduction for a <= 0: the series for (a, r, P) equals the
/// series for (1, r, Q) with Q(z) = (z+r)^(1-a) P(z).
inline std::pair<long, UniPoly<Rational>> negative_a_reduction(long a, const Rational& r,
                                                              const UniPoly<Rational>& P) {
    if (a > 0) throw std::domain_error("reduction applies to a <= 0 only");
    if (P.is_zero()) throw std::domain_error("zero polynomial");
    UniPoly<Rational> shift(std::vector<Rational>{r, Rational(1)});  // z + r
    return {1, poly_pow(shift, static_cast<unsigned long>(1 - a)) * P};
}

struct PipelineResult {
    enum class Case { r_nonzero, r_zero };
    Case kase = Case::r_zero;
    Rational r;
    RatFn<Rational> g;
    long b = 0, c = 0;
    std::map<long, Rational> A;  // A_k = p_{a-k}, b <= k <= c
    Rational offset;             // the n = 0 correction r^(-a) P(0); 0 when r = 0
    ExceptionalSet E;
    bool criterion_ok = false;
};

/// The full theorem pipeline: rebase P around r, read off the ladder
/// combination L = sum A_k F_k, and specialize to g(t) with L = t^r g(t)
/// (r != 0, Kolberg ladder at y = r) or L = g(t) (r = 0, opus-2 ladder).
inline PipelineResult kolberg_pipeline(long a, const Rational& r, UniPoly<Rational> P) {
    if (P.is_zero()) throw std::domain_error("zero polynomial");
    const Rational offset_keep = r.is_zero() ? Rational(0)
                                             : r.pow(-a) * P.eval(Rational(0));
    if (a <= 0) std::tie(a, P) = negative_a_reduction(a, r, P);
    if (r.is_integer() && r < Rational(0) && r > Rational(-a))
        throw std::domain_error("r = " + r.to_string() +
                                " violates the hypothesis r != -1, ..., -(a-1)");
    Rebase rb = rebase_poly(P, r);
    PipelineResult out;
    out.r = r;
    out.b = a - rb.m;
    out.c = a - rb.q;
    std::vector<std::pair<Rational, int>> terms;
    for (long k = out.b; k <= out.c; ++k) {
        auto it = rb.p.find(a - k);
        Rational Ak = (it == rb.p.end()) ? Rational(0) : it->second;
        out.A[k] = Ak;
        if (!Ak.is_zero()) terms.emplace_back(Ak, static_cast<int>(k));
    }
    if (r.is_zero()) {
        out.kase = PipelineResult::Case::r_zero;
        out.offset = 0;
        out.g = linear_combination(terms, Ladder(FamilySpec::opus2()), std::nullopt);
    } else {
        out.kase = PipelineResult::Case::r_nonzero;
        out.offset = offset_keep;
        out.g = linear_combination(terms, Ladder(FamilySpec::kolberg()), r);
    }
    out.E = exceptional_set(out.g);
    out.criterion_ok = !out.E.contains(r);
    return out;
}

/// Remark 2: for k >= 1 the opus-2 series converges at x = 1/e (t = 1)
/// and its sum is the rational number F_k(1), a polynomial evaluation.
inline Rational rational_value_at_one(long k) {
    if (k < 1) throw std::domain_error("divergent at t = 1");
    Ladder ladder(FamilySpec::opus2());
    RatFn<Rational> f = to_plain(ladder.entry(static_cast<int>(k)).body);
    return f.eval(Rational(1));
}

}  // namespace quatuor

#endif
