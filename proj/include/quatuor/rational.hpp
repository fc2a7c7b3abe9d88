#ifndef QUATUOR_RATIONAL_HPP
#define QUATUOR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quatuor {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always kept reduced with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0)
            v_ = boost::multiprecision::cpp_rational(-n, -d);
        else
            v_ = boost::multiprecision::cpp_rational(n, d);
    }
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    /// Parses "p", "-p", "p/q"; throws std::invalid_argument on junk.
    static Rational from_string(std::string_view s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(-v_); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }
    Rational reciprocal() const { return Rational(1) / *this; }

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string to_string() const;

    const boost::multiprecision::cpp_rational& raw() const { return v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("zero to a negative power");
        return reciprocal().pow(-e);
    }
    Rational base = *this, acc = 1;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline Rational Rational::from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> BigInt {
        if (t.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t i = 0;
        if (t[0] == '+' || t[0] == '-') i = 1;
        if (i == t.size()) throw std::invalid_argument("bare sign in rational literal");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                throw std::invalid_argument("malformed rational literal: " + std::string(t));
        return BigInt(std::string(t));
    };
    // trim spaces
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational literal with zero denominator");
    return Rational(num, den);
}

inline std::string Rational::to_string() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

/// Floor of n/d as exact integer division toward minus infinity.
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d, r = n % d;
    if (r != 0 && ((r < 0) != (d < 0))) --q;
    return q;
}

inline BigInt floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
inline BigInt ceil(const Rational& r) { return -floor_div(-r.numerator(), r.denominator()); }

}  // namespace quatuor

#endif
