#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quatuor/enclosures.hpp"
#include "test_util.hpp"

using namespace quatuor;
using namespace quatuor::testutil;

namespace {
Rational two_pow_neg(unsigned bits) { return Rational(1, BigInt(1) << bits); }
}  // namespace

TEST_CASE("exp_neg_enclosure examples") {
    CHECK(exp_neg_enclosure(0, Rational(1, 100)) == IntervalReal::point(1));
    SUBCASE("t0 = 1 against decimal bounds on 1/e") {
        IntervalReal e = exp_neg_enclosure(1, Rational(1, 1000000000));
        CHECK(e.lo > Rational(367879441, 1000000000));
        CHECK(e.hi < Rational(367879442, 1000000000));
    }
    SUBCASE("tight request is honoured") {
        IntervalReal e = exp_neg_enclosure(Rational(1, 2), two_pow_neg(40));
        CHECK(e.width() <= two_pow_neg(40));
        CHECK(e.lo > Rational(0));
        CHECK(e.lo < e.hi);
    }
    CHECK_THROWS_AS(exp_neg_enclosure(Rational(3, 2), Rational(1, 10)), std::domain_error);
    CHECK_THROWS_AS(exp_neg_enclosure(Rational(1, 2), Rational(0)), std::invalid_argument);
}

TEST_CASE("refined enclosures stay consistent") {
    IntervalReal coarse = exp_neg_enclosure(Rational(1, 3), Rational(1, 100));
    IntervalReal fine = exp_neg_enclosure(Rational(1, 3), two_pow_neg(60));
    CHECK(!coarse.disjoint(fine));
    CHECK(fine.width() < coarse.width());
    CHECK(coarse.contains(fine.lo));
    CHECK(coarse.contains(fine.hi));
}

TEST_CASE("pow_rational_enclosure examples") {
    SUBCASE("square root of 4") {
        IntervalReal v = pow_rational_enclosure(IntervalReal::point(4), Rational(1, 2),
                                                two_pow_neg(30));
        CHECK(v.contains(Rational(2)));
        CHECK(v.width() <= two_pow_neg(30));
    }
    SUBCASE("exponent zero") {
        CHECK(pow_rational_enclosure(IntervalReal{Rational(1, 3), Rational(3)}, Rational(0),
                                     Rational(1)) == IntervalReal::point(1));
    }
    SUBCASE("integer exponents are exact on points") {
        IntervalReal v = pow_rational_enclosure(IntervalReal::point(Rational(2, 3)),
                                                Rational(-2), two_pow_neg(20));
        CHECK(v.contains(Rational(9, 4)));
    }
    SUBCASE("(1/e)^(-1) agrees with the direct e enclosure") {
        IntervalReal einv = exp_neg_enclosure(1, two_pow_neg(50));
        IntervalReal e1 = pow_rational_enclosure(einv, Rational(-1), two_pow_neg(20));
        CHECK(!e1.disjoint(e_enclosure(two_pow_neg(20))));
    }
    CHECK_THROWS_AS(pow_rational_enclosure(IntervalReal{Rational(-1), Rational(1)},
                                           Rational(1, 2), Rational(1, 10)),
                    std::domain_error);
}

TEST_CASE("rational power soundness on random samples") {
    for (int i = 0; i < 25; ++i) {
        // base b = (num/den)^q so the exact q-th root is rational
        long num = 1 + i % 7, den = 2 + i % 5;
        unsigned long q = 1 + static_cast<unsigned long>(i % 4);
        long p = (i % 5) - 2;
        if (p == 0) p = 3;
        Rational root(num, den);
        Rational base = root.pow(static_cast<long>(q));
        IntervalReal v = pow_rational_enclosure(IntervalReal::point(base),
                                                Rational(p, static_cast<long>(q)),
                                                two_pow_neg(40));
        CHECK(v.contains(root.pow(p)));
    }
}

TEST_CASE("outward_round returns a superset") {
    for (int i = 0; i < 40; ++i) {
        Rational a = rand_rational(1000000, 999983);
        Rational b = a + rand_rational(100, 99991).abs();
        IntervalReal v{a, b};
        IntervalReal r = outward_round(v, 64);
        CHECK(r.lo <= v.lo);
        CHECK(r.hi >= v.hi);
        CHECK(r.lo.denominator() <= (BigInt(1) << 64));
        CHECK(r.width() - v.width() <= two_pow_neg(62));
    }
}

TEST_CASE("interval arithmetic soundness catalog") {
    for (int i = 0; i < 60; ++i) {
        Rational a = rand_rational(), b = rand_rational(), c = rand_rational(),
                 d = rand_rational();
        IntervalReal u{std::min(a, b), std::max(a, b)};
        IntervalReal v{std::min(c, d), std::max(c, d)};
        Rational pu = (a + b) / 2, pv = (c + d) / 2;  // interior points
        CHECK((u + v).contains(pu + pv));
        CHECK((u - v).contains(pu - pv));
        CHECK((u * v).contains(pu * pv));
        if (!v.contains_zero()) CHECK(v.reciprocal().contains(pv.reciprocal()));
        CHECK(u.pow_int(3).contains(pu.pow(3)));
    }
}

TEST_CASE("power-family tail policy certifies a contracting ratio") {
    IntervalReal x = IntervalReal::point(Rational(1, 4));
    for (long k = -2; k <= 3; ++k) {
        for (const Rational& y : {Rational(0), Rational(1, 2), Rational(1), Rational(3)}) {
            TailPolicy tp = power_family_tail(y, k, x);
            CHECK(tp.ratio < Rational(1));
            // empirical check: actual successive-term ratios beyond start
            // are below the certified bound
            for (unsigned long n = tp.start; n < tp.start + 40; ++n) {
                Rational un = int_pow(y + Rational(static_cast<long>(n)),
                                      static_cast<long>(n) - k);
                Rational un1 = int_pow(y + Rational(static_cast<long>(n) + 1),
                                       static_cast<long>(n) + 1 - k);
                Rational actual = un1 * x.hi / (un * Rational(static_cast<long>(n) + 1));
                CHECK(actual <= tp.ratio);
            }
        }
    }
    CHECK_THROWS_AS(power_family_tail(Rational(-1), 1, x), std::domain_error);
    CHECK_THROWS_WITH_AS(power_family_tail(Rational(0), 1, IntervalReal::point(Rational(1, 2))),
                         "tail bound failed: x too close to 1/e", std::domain_error);
}

TEST_CASE("partial_sum_enclosure recovers exact fixed points") {
    // x0 = (1/2) e^{-1/2}: the inverse-tree series sum n^{n-1} x^n / n!
    // evaluates to 1/2 there, and sum n^n x^n / n! to t/(1-t) = 1.
    IntervalReal x0 = IntervalReal::point(Rational(1, 2)) *
                      exp_neg_enclosure(Rational(1, 2), two_pow_neg(80));
    SUBCASE("k = 1") {
        auto u = [](unsigned long n) {
            return int_pow(Rational(static_cast<long>(n)), static_cast<long>(n) - 1);
        };
        TailPolicy tp = power_family_tail(0, 1, x0);
        IntervalReal s = partial_sum_enclosure(u, x0, two_pow_neg(30), tp);
        CHECK(s.width() <= two_pow_neg(30));
        CHECK(s.contains(Rational(1, 2)));
    }
    SUBCASE("k = 0") {
        auto u = [](unsigned long n) {
            return int_pow(Rational(static_cast<long>(n)), static_cast<long>(n));
        };
        TailPolicy tp = power_family_tail(0, 0, x0);
        IntervalReal s = partial_sum_enclosure(u, x0, two_pow_neg(30), tp);
        CHECK(s.contains(Rational(1)));
    }
    SUBCASE("zero generator") {
        auto u = [](unsigned long) { return Rational(0); };
        IntervalReal s = partial_sum_enclosure(u, x0, Rational(1, 10),
                                               TailPolicy{1, Rational(1, 2)});
        CHECK(s.contains_zero());
    }
    SUBCASE("rejects an uncontracting policy") {
        auto u = [](unsigned long) { return Rational(1); };
        CHECK_THROWS_WITH_AS(
            partial_sum_enclosure(u, x0, Rational(1, 10), TailPolicy{1, Rational(2)}),
            "tail bound failed: ratio >= 1", std::domain_error);
    }
}

TEST_CASE("term-ratio convergence toward e") {
    // r_n = (1 + 1/n)^n increases toward e; the certified upper bound on
    // e must dominate every r_n.
    Rational e_up = e_enclosure(two_pow_neg(30)).hi;
    Rational prev = 0;
    for (long n = 1; n <= 200; ++n) {
        Rational rn = (Rational(1) + Rational(1, n)).pow(n);
        CHECK(rn > prev);
        CHECK(rn < e_up);
        prev = rn;
    }
}

TEST_CASE("boundary enclosures contain the exact closed-form values") {
    for (long k = 1; k <= 3; ++k) {
        IntervalReal v = opus2_boundary_enclosure(k, 32);
        CHECK(v.width() <= Rational(1, 20));
        CHECK(v.contains(rational_value_at_one(k)));
    }
    CHECK_THROWS_WITH_AS(opus2_boundary_enclosure(0, 8), "divergent at t = 1",
                         std::domain_error);
}

TEST_CASE("residual_check certifies pipeline consistency") {
    using Poly = UniPoly<Rational>;
    const Poly t = Poly::variable();
    SUBCASE("r = 0, P = 1") {
        IntervalReal res = residual_check(kolberg_pipeline(1, Rational(0), Poly(1)),
                                          Rational(1, 2), two_pow_neg(30));
        CHECK(res.width() <= two_pow_neg(30));
        CHECK(res.contains_zero());
    }
    SUBCASE("r = 0, P = z") {
        IntervalReal res = residual_check(kolberg_pipeline(1, Rational(0), t),
                                          Rational(1, 3), two_pow_neg(30));
        CHECK(res.contains_zero());
    }
    SUBCASE("r = 1/2, P = 1, a = 2") {
        IntervalReal res = residual_check(kolberg_pipeline(2, Rational(1, 2), Poly(1)),
                                          Rational(1, 2), two_pow_neg(30));
        CHECK(res.width() <= two_pow_neg(30));
        CHECK(res.contains_zero());
    }
    SUBCASE("r = 1, quadratic P") {
        Poly P(std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(2)});
        IntervalReal res = residual_check(kolberg_pipeline(2, Rational(1), P),
                                          Rational(2, 5), two_pow_neg(25));
        CHECK(res.contains_zero());
    }
    SUBCASE("a perturbed result fails the zero test") {
        PipelineResult r = kolberg_pipeline(1, Rational(0), Poly(1));
        r.offset = Rational(0);
        r.g = r.g + RatFn<Rational>(Poly(Rational(1, 100)));
        IntervalReal res = residual_check(r, Rational(1, 2), two_pow_neg(20));
        CHECK(!res.contains_zero());
    }
    CHECK_THROWS_AS(residual_check(kolberg_pipeline(1, Rational(0), Poly(1)), Rational(1),
                                   Rational(1, 10)),
                    std::domain_error);
}
