#ifndef QUATUOR_INTERVAL_HPP
#define QUATUOR_INTERVAL_HPP

#include <algorithm>
#include <stdexcept>

#include "quatuor/rational.hpp"

namespace quatuor {

/// Closed interval with exact rational endpoints; every operation
/// returns an enclosure of the exact real result.
struct IntervalReal {
    Rational lo, hi;

    IntervalReal() = default;
    IntervalReal(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }
    static IntervalReal point(const Rational& r) { return {r, r}; }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains_zero() const { return contains(Rational(0)); }
    Rational mag() const { return std::max(lo.abs(), hi.abs()); }

    friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    IntervalReal operator-() const { return {-hi, -lo}; }
    friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
    }
    friend IntervalReal operator*(const IntervalReal& a, const Rational& s) {
        return a * point(s);
    }

    /// Reciprocal of an interval that excludes zero.
    IntervalReal reciprocal() const {
        if (contains_zero()) throw std::domain_error("reciprocal of interval containing zero");
        return {hi.reciprocal(), lo.reciprocal()};
    }

    /// Integer power; negative exponents require the interval to exclude zero.
    IntervalReal pow_int(long e) const {
        if (e < 0) return reciprocal().pow_int(-e);
        IntervalReal acc = point(1), base = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool disjoint(const IntervalReal& o) const { return hi < o.lo || o.hi < lo; }

    friend bool operator==(const IntervalReal& a, const IntervalReal& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Rounds endpoints outward onto the grid with denominator 2^bits; keeps
/// denominators from blowing up across long computations while staying
/// sound.
inline IntervalReal outward_round(const IntervalReal& v, unsigned bits = 128) {
    BigInt scale = BigInt(1) << bits;
    auto snap = [&](const Rational& r, bool up) {
        Rational scaled = r * Rational(scale);
        BigInt n = up ? ceil(scaled) : floor(scaled);
        return Rational(n, scale);
    };
    if (v.lo.denominator() <= scale && v.hi.denominator() <= scale) return v;
    return {snap(v.lo, false), snap(v.hi, true)};
}

/// Outward rounding relative to the interval's own magnitude: the grid
/// is 2^-bits scaled down to sit below |v|, so exponentially small
/// values keep their leading bits instead of collapsing onto the
/// absolute grid.
inline IntervalReal outward_round_rel(const IntervalReal& v, unsigned bits = 128) {
    Rational m = v.mag();
    if (m.is_zero() || m >= Rational(1)) return outward_round(v, bits);
    const unsigned num_bits = static_cast<unsigned>(boost::multiprecision::msb(m.numerator()));
    const unsigned den_bits = static_cast<unsigned>(boost::multiprecision::msb(m.denominator()));
    const unsigned shift = den_bits > num_bits ? den_bits - num_bits : 0;
    return outward_round(v, bits + shift + 1);
}

}  // namespace quatuor

#endif
