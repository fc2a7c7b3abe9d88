#ifndef QUATUOR_JSON_IO_HPP
#define QUATUOR_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "quatuor/pipeline.hpp"
#include "quatuor/tower.hpp"

// Bit-exact JSON wire format. Rationals always cross the boundary as
// strings "p/q" (or "p"), never as JSON numbers; a rational function is
// {"num": [coeff...], "den": [coeff...]} with coefficients ascending by
// degree, and a Q(y)(t) element nests one more level of the same shape.

namespace quatuor {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
    return Rational::from_string(j.get<std::string>());
}

inline json to_json(const UniPoly<Rational>& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

inline UniPoly<Rational> unipoly_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return UniPoly<Rational>(std::move(c));
}

inline json to_json(const RatFn<Rational>& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline RatFn<Rational> ratfn_from_json(const json& j) {
    return {unipoly_from_json(j.at("num")), unipoly_from_json(j.at("den"))};
}

inline json to_json(const UniPoly<YElem>& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

inline json to_json(const TElem& e) {
    return {{"num", to_json(e.num())}, {"den", to_json(e.den())}};
}

inline TElem telem_from_json(const json& j) {
    auto poly = [](const json& arr) {
        std::vector<YElem> c;
        for (const auto& e : arr) c.push_back(ratfn_from_json(e));
        return UniPoly<YElem>(std::move(c));
    };
    return {poly(j.at("num")), poly(j.at("den"))};
}

inline json to_json(const TwistedForm& f) {
    return {{"twist", f.twist == Twist::t_power_y ? "t_power_y" : "plain"},
            {"body", to_json(f.body)}};
}

inline TwistedForm twisted_from_json(const json& j) {
    std::string t = j.at("twist").get<std::string>();
    if (t != "plain" && t != "t_power_y") throw std::invalid_argument("bad twist tag");
    return {t == "plain" ? Twist::plain : Twist::t_power_y, telem_from_json(j.at("body"))};
}

inline json to_json(const ExceptionalSet& e) {
    switch (e.kind) {
        case ExceptionalSet::Kind::empty: return {{"kind", "empty"}};
        case ExceptionalSet::Kind::all_integers: return {{"kind", "all_integers"}};
        case ExceptionalSet::Kind::singleton: return {{"kind", "singleton"}, {"n", e.n}};
    }
    return {};
}

inline json to_json(const PipelineResult& r) {
    json a = json::object();
    for (const auto& [k, v] : r.A) a[std::to_string(k)] = v.to_string();
    return {{"case", r.kase == PipelineResult::Case::r_nonzero ? "r_nonzero" : "r_zero"},
            {"r", r.r.to_string()},
            {"g", to_json(r.g)},
            {"b", r.b},
            {"c", r.c},
            {"A", a},
            {"offset", r.offset.to_string()},
            {"E", to_json(r.E)},
            {"criterion_ok", r.criterion_ok}};
}

}  // namespace quatuor

#endif
