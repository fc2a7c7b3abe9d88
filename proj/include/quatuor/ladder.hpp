#ifndef QUATUOR_LADDER_HPP
#define QUATUOR_LADDER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "quatuor/association.hpp"
#include "quatuor/series.hpp"
#include "quatuor/tower.hpp"

namespace quatuor {

/// Which quatuor family a ladder generates, plus the seed data for
/// user-supplied families. The seed polynomial is G_{k0}(t) itself
/// (coefficients v_n/n!), with zero constant term so the series starts
/// at n >= 1.
struct FamilySpec {
    enum class Kind { kolberg, opus2, seeded };

    Kind kind = Kind::kolberg;
    int seed_level = 0;
    UniPoly<Rational> seed_poly;

    static FamilySpec kolberg() { return FamilySpec{Kind::kolberg, 0, {}}; }
    static FamilySpec opus2() { return FamilySpec{Kind::opus2, 0, {}}; }
    static FamilySpec seeded(int level, UniPoly<Rational> g) {
        if (!g.coeff(0).is_zero())
            throw std::domain_error("seed polynomial must vanish at 0");
        return FamilySpec{Kind::seeded, level, std::move(g)};
    }

    /// Index of the generator entry each family is grown from.
    int anchor() const { return kind == Kind::seeded ? seed_level : 1; }

    bool is_twisted() const { return kind == Kind::kolberg; }

    friend bool operator==(const FamilySpec& a, const FamilySpec& b) = default;
};

/// One application of the derivative recurrence: F_k = (t/(1-t)) dF_{k+1}/dt.
/// For t^y-twisted bodies this is (y R + t R')/(1-t); for plain bodies,
/// (t/(1-t)) R'.
inline TwistedForm descend_step(const TwistedForm& next) {
    const TElem t = t_var();
    const TElem one_minus_t = TElem(1) - t;
    if (next.twist == Twist::t_power_y) {
        TElem y = TElem(YElem::variable());
        TElem body = (y * next.body + t * t_derivative(next.body)) / one_minus_t;
        return {Twist::t_power_y, std::move(body)};
    }
    return {Twist::plain, t / one_minus_t * t_derivative(next.body)};
}

/// One application of the integral recurrence F_{k+1} = int_0^t (1-z)/z F_k dz,
/// valid only when the body is a polynomial part the integral closes on.
inline TwistedForm ascend_step(const TwistedForm& cur) {
    if (!cur.body.is_polynomial())
        throw std::domain_error("ascent requires polynomial part");
    const auto& coeffs = cur.body.num().coeffs();
    if (cur.twist == Twist::t_power_y) {
        // sum_j c_j(y) (t^j/(y+j) - t^{j+1}/(y+j+1))
        std::vector<YElem> out(coeffs.size() + 1, YElem(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            YElem yj(UniPoly<Rational>(
                std::vector<Rational>{Rational(static_cast<long>(j)), Rational(1)}));
            YElem yj1(UniPoly<Rational>(
                std::vector<Rational>{Rational(static_cast<long>(j) + 1), Rational(1)}));
            out[j] = out[j] + coeffs[j] / yj;
            out[j + 1] = out[j + 1] - coeffs[j] / yj1;
        }
        return {Twist::t_power_y, TElem(UniPoly<YElem>(std::move(out)))};
    }
    if (!coeffs.empty() && !coeffs[0].is_zero())
        throw std::domain_error("ascent requires zero constant term");
    // t^n -> t^n/n - t^{n+1}/(n+1)
    std::vector<YElem> out(coeffs.size() + 1, YElem(0));
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        Rational cn = coeffs[n].constant_value();
        out[n] = out[n] + YElem(cn / Rational(static_cast<long>(n)));
        out[n + 1] = out[n + 1] - YElem(cn / Rational(static_cast<long>(n) + 1));
    }
    return {Twist::plain, TElem(UniPoly<YElem>(std::move(out)))};
}

struct LadderPoleError : std::domain_error {
    int k;
    Rational y0;
    LadderPoleError(int at_k, Rational at_y)
        : std::domain_error("specialization pole at y = " + at_y.to_string() +
                            " in ladder entry k = " + std::to_string(at_k)),
          k(at_k),
          y0(std::move(at_y)) {}
};

/// Lazily extended map k -> closed form for one quatuor family. Entries
/// are cached; extension is serialized by a mutex so concurrent readers
/// see each entry computed exactly once. Shifted views share the cache.
class Ladder {
public:
    explicit Ladder(FamilySpec family)
        : state_(std::make_shared<State>(std::move(family))) {}

    const FamilySpec& family() const { return state_->family; }
    int shift() const { return shift_; }

    /// Closed form F_{k}: descent below the anchor, ascent above it.
    TwistedForm entry(int k) const {
        const int j = k + shift_;
        std::lock_guard<std::mutex> lock(state_->mu);
        return entry_locked(j);
    }

    /// Relabeled view: entry(k) of the result is entry(k + d) of this.
    Ladder shifted(int d) const {
        Ladder out = *this;
        out.shift_ += d;
        return out;
    }

private:
    struct State {
        explicit State(FamilySpec f) : family(std::move(f)) {}
        FamilySpec family;
        std::map<int, TwistedForm> cache;
        std::mutex mu;
    };

    std::shared_ptr<State> state_;
    int shift_ = 0;

    TwistedForm anchor_form() const {
        switch (state_->family.kind) {
            case FamilySpec::Kind::kolberg:
                // F_1 = t^y / y
                return {Twist::t_power_y, TElem(YElem(1) / y_var())};
            case FamilySpec::Kind::opus2:
                // F_1 = t
                return {Twist::plain, t_var()};
            case FamilySpec::Kind::seeded:
                return {Twist::plain, lift_plain(RatFn<Rational>(state_->family.seed_poly))};
        }
        throw std::logic_error("unreachable");
    }

    TwistedForm entry_locked(int k) const {
        auto it = state_->cache.find(k);
        if (it != state_->cache.end()) return it->second;
        const int anchor = state_->family.anchor();
        // Walk from the nearest computed index between k and the anchor.
        int from = anchor;
        TwistedForm cur;
        if (auto hit = state_->cache.find(anchor); hit != state_->cache.end()) {
            cur = hit->second;
        } else {
            cur = anchor_form();
            state_->cache.emplace(anchor, cur);
        }
        if (k < anchor) {
            for (int j = from - 1; j >= k; --j) {
                if (auto c = state_->cache.find(j); c != state_->cache.end()) {
                    cur = c->second;
                } else {
                    cur = descend_step(cur);
                    state_->cache.emplace(j, cur);
                }
            }
        } else {
            for (int j = from + 1; j <= k; ++j) {
                if (auto c = state_->cache.find(j); c != state_->cache.end()) {
                    cur = c->second;
                } else {
                    cur = ascend_step(cur);
                    state_->cache.emplace(j, cur);
                }
            }
        }
        return cur;
    }
};

/// g(t) = sum A_k R_k(t, y0) for twisted families (with y0 specialized),
/// or sum A_k F_k(t) for plain ones. Pole violations carry the offending k.
inline RatFn<Rational> linear_combination(const std::vector<std::pair<Rational, int>>& terms,
                                          const Ladder& ladder,
                                          const std::optional<Rational>& y0) {
    RatFn<Rational> acc;
    for (const auto& [a, k] : terms) {
        TwistedForm form = ladder.entry(k);
        RatFn<Rational> gk;
        if (form.twist == Twist::t_power_y) {
            if (!y0) throw std::invalid_argument("y0 required for a t^y-twisted family");
            try {
                gk = substitute_y(form.body, *y0);
            } catch (const YPoleError& e) {
                throw LadderPoleError(k, e.y0);
            }
        } else {
            gk = to_plain(form.body);
        }
        acc += RatFn<Rational>(a) * gk;
    }
    return acc;
}

/// The u_n coefficient sequence of H_k for a family: (y0+n)^(n-k) for
/// the Kolberg family, n^(n-k) for opus 2 (starting at n = 1), and the
/// backward transform of the seed coefficients propagated through the
/// derivative relation u_{k,n} = n^{k0-k} u_{k0,n} for seeded families.
inline std::vector<Rational> family_u_sequence(const FamilySpec& family, int k,
                                               const std::optional<Rational>& y0,
                                               std::size_t order) {
    std::vector<Rational> u(order + 1, Rational(0));
    switch (family.kind) {
        case FamilySpec::Kind::kolberg: {
            if (!y0) throw std::invalid_argument("y0 required for the Kolberg family");
            for (std::size_t n = 0; n <= order; ++n)
                u[n] = int_pow(*y0 + Rational(static_cast<long>(n)),
                               static_cast<long>(n) - k);
            break;
        }
        case FamilySpec::Kind::opus2: {
            for (std::size_t n = 1; n <= order; ++n)
                u[n] = int_pow(Rational(static_cast<long>(n)), static_cast<long>(n) - k);
            break;
        }
        case FamilySpec::Kind::seeded: {
            Rational fact = 1;
            std::vector<Rational> v(order + 1, Rational(0));
            for (std::size_t n = 0; n <= order; ++n) {
                if (n > 0) fact *= Rational(static_cast<long>(n));
                v[n] = family.seed_poly.coeff(n) * fact;
            }
            std::vector<Rational> base = backward_transform(v);
            for (std::size_t n = 1; n <= order; ++n)
                u[n] = base[n] *
                       int_pow(Rational(static_cast<long>(n)), family.seed_level - k);
            break;
        }
    }
    return u;
}

struct OracleReport {
    bool ok = true;
    std::size_t first_mismatch = 0;
    Rational expected, actual;
};

/// Checks that the closed form's Taylor coefficients match the
/// associated-series transform of the family's u_n sequence: for
/// twisted entries the expansion of R_k(t, y0) is multiplied by the
/// exact series of e^{y0 t} (since G_k = e^{yt} R_k), then n! [t^n]
/// must equal (forward_transform u)_n for every n <= order.
inline OracleReport taylor_oracle_check(const Ladder& ladder, int k,
                                        const std::optional<Rational>& y0,
                                        std::size_t order) {
    TwistedForm form = ladder.entry(k);
    PowerSeries<Rational> s;
    if (form.twist == Twist::t_power_y) {
        if (!y0) throw std::invalid_argument("y0 required for a t^y-twisted family");
        RatFn<Rational> g = substitute_y(form.body, *y0);
        s = series_expand(g, order);
        PowerSeries<Rational> expy;
        expy.order = order;
        expy.coefficients.assign(order + 1, Rational(0));
        Rational term = 1;
        for (std::size_t n = 0; n <= order; ++n) {
            expy.coefficients[n] = term;
            term = term * *y0 / Rational(static_cast<long>(n) + 1);
        }
        s = series_mul(s, expy);
    } else {
        s = series_expand(to_plain(form.body), order);
    }
    std::vector<Rational> u = family_u_sequence(ladder.family(), k + ladder.shift(), y0, order);
    std::vector<Rational> v = forward_transform(u);
    Rational fact = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) fact *= Rational(static_cast<long>(n));
        Rational actual = s.coefficients[n] * fact;
        if (actual != v[n]) return {false, n, v[n], actual};
    }
    return {};
}

}  // namespace quatuor

#endif
