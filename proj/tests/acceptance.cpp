// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "quatuor/enclosures.hpp"
#include "quatuor/identities.hpp"
#include "quatuor/ladder.hpp"

using namespace quatuor;

namespace {

using Poly = UniPoly<Rational>;
using Fn = RatFn<Rational>;

int failures = 0;

void criterion(int n, const std::string& label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << label << "  ["
         << static_cast<int>(secs * 1000) << " ms]";
    if (!ok && !detail.empty()) line << "  -- " << detail;
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
}

bool identity_suite(std::string& detail) {
    for (unsigned long s = 0; s <= 40; ++s)
        if (!p_poly(s).is_zero()) {
            detail = "p_poly(" + std::to_string(s) + ") != 0";
            return false;
        }
    for (unsigned long s = 1; s <= 40; ++s)
        for (unsigned long q = 1; q <= s; ++q)
            if (b_coeff(q, s) != Rational(-static_cast<long>(s + 1)) * b_coeff(q - 1, s - 1)) {
                detail = "b recurrence fails at q=" + std::to_string(q) +
                         " s=" + std::to_string(s);
                return false;
            }
    return true;
}

bool transform_round_trip(std::string& detail) {
    std::mt19937 gen(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    std::uniform_int_distribution<std::size_t> len(1, 25);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> u(len(gen));
        for (auto& x : u) x = Rational(num(gen), den(gen));
        if (backward_transform(forward_transform(u)) != u ||
            forward_transform(backward_transform(u)) != u) {
            detail = "round trip broke on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool prototype_reproduction(std::string& detail) {
    for (const Rational& y0 : {Rational(1), Rational(2), Rational(3, 7)}) {
        std::vector<Rational> u(16);
        u[0] = Rational(1) / y0;
        for (long n = 1; n <= 15; ++n) u[n] = (y0 + Rational(n)).pow(n - 1);
        std::vector<Rational> v = forward_transform(u);
        for (long n = 0; n <= 15; ++n) {
            Rational expect = n == 0 ? Rational(1) / y0 : y0.pow(n - 1);
            if (v[n] != expect) {
                detail = "v_" + std::to_string(n) + " wrong at y0 = " + y0.to_string();
                return false;
            }
        }
    }
    return true;
}

bool closed_form_catalog(std::string& detail) {
    Ladder kol(FamilySpec::kolberg());
    Ladder op(FamilySpec::opus2());
    const TElem t = t_var();
    const TElem one_minus_t = TElem(1) - t;
    const TElem y = TElem(y_var());
    auto inv = [](const TElem& e) { return TElem(1) / e; };

    if (kol.entry(0) != TwistedForm{Twist::t_power_y, inv(one_minus_t)}) {
        detail = "index 0 twisted form";
        return false;
    }
    TElem grouped =
        (y - TElem(1) + inv(one_minus_t)) / (one_minus_t * one_minus_t);
    if (kol.entry(-1) != TwistedForm{Twist::t_power_y, grouped}) {
        detail = "index -1 twisted form";
        return false;
    }
    TElem r2 = inv(y) * (inv(y) - t / (y + TElem(1)));
    if (kol.entry(2) != TwistedForm{Twist::t_power_y, r2}) {
        detail = "index 2 twisted form";
        return false;
    }
    TElem y1 = y + TElem(1), y2 = y + TElem(2);
    TElem r3 = inv(y) * (inv(y * y) - (inv(y) + inv(y1)) * t / y1 + t * t / (y1 * y2));
    if (kol.entry(3) != TwistedForm{Twist::t_power_y, r3}) {
        detail = "index 3 three-term form";
        return false;
    }
    Poly tp = Poly::variable();
    if (to_plain(op.entry(0).body) != ratfn_reduce(tp, Poly(1) - tp)) {
        detail = "plain index 0";
        return false;
    }
    if (to_plain(op.entry(-1).body) != ratfn_reduce(tp, poly_pow(Poly(1) - tp, 3))) {
        detail = "plain index -1";
        return false;
    }
    if (to_plain(op.entry(2).body) !=
        Fn(Poly(std::vector<Rational>{Rational(0), Rational(1), Rational(-1, 2)}))) {
        detail = "plain index 2";
        return false;
    }
    return true;
}

bool structure_theorems(std::string& detail) {
    Ladder kol(FamilySpec::kolberg());
    for (int k = 1; k <= 6; ++k) {
        TwistedForm f = kol.entry(k);
        if (!f.body.is_polynomial() ||
            f.body.num().degree() != static_cast<std::size_t>(k - 1)) {
            detail = "ascent side at k = " + std::to_string(k);
            return false;
        }
    }
    const TElem one_minus_t = TElem(1) - t_var();
    for (int k = 0; k >= -5; --k) {
        // R_k = (1-t)^{k-1} P_k(1/(1-t)) with P_k of degree <= -k over
        // Q[y]; equivalently R_k (1-t)^{1-2k} is a polynomial in t of
        // degree <= -k with polynomial y-coefficients.
        TElem scaled = kol.entry(k).body;
        for (int i = 0; i < 1 - 2 * k; ++i) scaled = scaled * one_minus_t;
        bool ok = scaled.is_polynomial() &&
                  *scaled.num().degree() <= static_cast<std::size_t>(-k);
        if (ok)
            for (const auto& c : scaled.num().coeffs()) ok = ok && c.is_polynomial();
        if (!ok) {
            detail = "descent side at k = " + std::to_string(k);
            return false;
        }
    }
    Ladder op(FamilySpec::opus2());
    for (int k = -5; k <= 6; ++k) {
        try {
            to_plain(op.entry(k).body);
        } catch (const std::exception&) {
            detail = "plain family left Q(t) at k = " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool taylor_oracles(std::string& detail) {
    Ladder kol(FamilySpec::kolberg());
    Ladder op(FamilySpec::opus2());
    Ladder seed(FamilySpec::seeded(0, Poly::monomial(2, Rational(1, 2))));
    for (int k = -3; k <= 4; ++k) {
        for (const Rational& y0 : {Rational(1), Rational(2), Rational(1, 2), Rational(3, 7)})
            if (!taylor_oracle_check(kol, k, y0, 20).ok) {
                detail = "twisted oracle k = " + std::to_string(k) + " y0 = " + y0.to_string();
                return false;
            }
        if (!taylor_oracle_check(op, k, std::nullopt, 20).ok) {
            detail = "plain oracle k = " + std::to_string(k);
            return false;
        }
        if (!taylor_oracle_check(seed, k, std::nullopt, 20).ok) {
            detail = "seeded oracle k = " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool pipeline_identities(std::string& detail) {
    const Poly t = Poly::variable();
    struct Case {
        long a;
        Rational r;
        Poly P;
        Fn g;
    };
    const Case cases[] = {
        {1, Rational(0), Poly(1), Fn(t)},
        {1, Rational(0), t, ratfn_reduce(t, Poly(1) - t)},
        {2, Rational(1, 2), Poly(1),
         Fn(Poly(std::vector<Rational>{Rational(4), Rational(-4, 3)}))},
        {1, Rational(1), Poly(1), Fn(Poly(1))},
    };
    for (const Case& c : cases) {
        PipelineResult res = kolberg_pipeline(c.a, c.r, c.P);
        if (res.g != c.g) {
            detail = "wrong g for a = " + std::to_string(c.a) + ", r = " + c.r.to_string();
            return false;
        }
    }
    return true;
}

bool boundary_rationals(std::string& detail) {
    const Rational expect[] = {Rational(1), Rational(1, 2), Rational(5, 12)};
    for (long k = 1; k <= 3; ++k) {
        if (rational_value_at_one(k) != expect[k - 1]) {
            detail = "exact value at k = " + std::to_string(k);
            return false;
        }
        IntervalReal v = opus2_boundary_enclosure(k, 32);
        if (!v.contains(expect[k - 1]) || v.width() > Rational(1, 20)) {
            detail = "enclosure at k = " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool certified_residuals(std::string& detail) {
    const Poly t = Poly::variable();
    const Rational eps(1, 1L << 30);
    const PipelineResult cases[] = {
        kolberg_pipeline(1, Rational(0), Poly(1)),
        kolberg_pipeline(1, Rational(0), t),
        kolberg_pipeline(2, Rational(1, 2), Poly(1)),
    };
    for (const PipelineResult& res : cases) {
        for (const Rational& t0 : {Rational(1, 3), Rational(1, 2)}) {
            IntervalReal v = residual_check(res, t0, eps);
            if (!v.contains_zero() || v.width() > eps) {
                detail = "residual at r = " + res.r.to_string() + ", t0 = " + t0.to_string();
                return false;
            }
        }
    }
    return true;
}

bool exceptional_and_witness(std::string& detail) {
    const Poly t = Poly::variable();
    if (exceptional_set(Fn{}).kind != ExceptionalSet::Kind::all_integers) {
        detail = "zero classification";
        return false;
    }
    if (exceptional_set(Fn(Poly(1), t)) !=
        ExceptionalSet{ExceptionalSet::Kind::singleton, 1}) {
        detail = "reciprocal classification";
        return false;
    }
    for (long m = -3; m <= 3; ++m) {
        Fn g = m >= 0
                   ? Fn(Poly::monomial(static_cast<std::size_t>(m), Rational(5, 2)))
                   : Fn(Poly(Rational(5, 2)), Poly::monomial(static_cast<std::size_t>(-m),
                                                             Rational(1)));
        if (exceptional_set(g) != ExceptionalSet{ExceptionalSet::Kind::singleton, -m}) {
            detail = "monomial classification at m = " + std::to_string(m);
            return false;
        }
    }
    if (exceptional_set(ratfn_reduce(t, Poly(1) - t)).kind != ExceptionalSet::Kind::empty ||
        exceptional_set(ratfn_reduce(Poly(1) + t, Poly(1) - t)).kind !=
            ExceptionalSet::Kind::empty) {
        detail = "non-monomial classification";
        return false;
    }
    std::mt19937 gen(11);
    std::uniform_int_distribution<long> coeff(-9, 9), rnum(-8, 8), rden(1, 5),
        tnum(1, 6);
    int done = 0;
    while (done < 50) {
        std::vector<Rational> nc(3), dc(3);
        for (auto& x : nc) x = Rational(coeff(gen));
        for (auto& x : dc) x = Rational(coeff(gen));
        Poly num(nc), den(dc);
        if (num.is_zero() || den.is_zero()) continue;
        Fn g(num, den);
        if (g.is_zero()) continue;
        Rational r(rnum(gen), rden(gen));
        if (exceptional_set(g).contains(r)) continue;
        Rational t0(tnum(gen), 7);
        if (g.den().eval(t0).is_zero()) continue;
        if (witness_polynomial(g, r, Rational(3, 4)).is_zero()) {
            detail = "witness vanished on sample " + std::to_string(done);
            return false;
        }
        if (!exceptional_set(g).contains(Rational(0)) &&
            witness_polynomial(g, Rational(0), g.eval(t0)).eval(t0) != Rational(0)) {
            detail = "witness failed to vanish at its defining point";
            return false;
        }
        ++done;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "binomial identity suite up to s = 40", 10, identity_suite);
    criterion(2, "transform round trips on 200 random sequences", 10, transform_round_trip);
    criterion(3, "prototype sequence collapses to powers", 0, prototype_reproduction);
    criterion(4, "closed-form catalog matches exactly", 0, closed_form_catalog);
    criterion(5, "structure theorems on both sides of the ladder", 0, structure_theorems);
    criterion(6, "Taylor oracle across families and specializations", 30, taylor_oracles);
    criterion(7, "pipeline identities", 0, pipeline_identities);
    criterion(8, "boundary values, exact and enclosed", 60, boundary_rationals);
    criterion(9, "certified residuals contain zero", 60, certified_residuals);
    criterion(10, "exceptional sets and witnesses", 0, exceptional_and_witness);
    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
