// qk: command-line front end for the exact quatuor/transcendence toolkit.
// Every invocation prints exactly one JSON envelope on standard output:
//   {"schema_version", "command", "status", "result", "error_message"}
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "quatuor/enclosures.hpp"
#include "quatuor/identities.hpp"
#include "quatuor/json_io.hpp"
#include "quatuor/ladder.hpp"
#include "quatuor/latex.hpp"

namespace {

using namespace quatuor;

constexpr const char* kSchemaVersion = "1";

/// Input problems that should surface as exit code 2 rather than 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t max_degree() {
    if (const char* env = std::getenv("QUATUOR_MAX_DEGREE")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw UsageError("QUATUOR_MAX_DEGREE must be a positive integer");
    }
    return 512;
}

Rational parse_rational(const std::string& s) {
    try {
        return Rational::from_string(s);
    } catch (const std::exception& e) {
        throw UsageError("malformed rational \"" + s + "\": " + e.what());
    }
}

std::vector<Rational> parse_coeffs(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw UsageError("empty coefficient in \"" + s + "\"");
        out.push_back(parse_rational(item.substr(a, b - a + 1)));
    }
    if (out.empty()) throw UsageError("empty coefficient list");
    if (out.size() > max_degree() + 1)
        throw UsageError("degree exceeds QUATUOR_MAX_DEGREE");
    return out;
}

UniPoly<Rational> parse_poly(const std::string& s) { return UniPoly<Rational>(parse_coeffs(s)); }

/// Accepts either "2^-K" or a plain rational "p/q".
Rational parse_eps(const std::string& s) {
    if (s.rfind("2^-", 0) == 0) {
        char* end = nullptr;
        unsigned long k = std::strtoul(s.c_str() + 3, &end, 10);
        if (!end || *end != '\0' || k == 0 || k > 4096)
            throw UsageError("malformed tolerance \"" + s + "\"");
        return Rational(1, BigInt(1) << k);
    }
    Rational eps = parse_rational(s);
    if (eps <= Rational(0)) throw UsageError("tolerance must be positive");
    return eps;
}

/// Seed entered as the associated sequence v_1, v_2, ...: the seed
/// polynomial is sum v_n t^n / n!.
UniPoly<Rational> seed_from_sequence(const std::vector<Rational>& v) {
    std::vector<Rational> c(v.size() + 1, Rational(0));
    Rational fact = 1;
    for (std::size_t n = 1; n <= v.size(); ++n) {
        fact *= Rational(static_cast<long>(n));
        c[n] = v[n - 1] / fact;
    }
    return UniPoly<Rational>(std::move(c));
}

FamilySpec parse_family(const std::string& name, const std::string& seed, int seed_level) {
    if (name == "kolberg") return FamilySpec::kolberg();
    if (name == "opus2") return FamilySpec::opus2();
    if (name == "seeded") {
        if (seed.empty()) throw UsageError("seeded family requires --seed");
        return FamilySpec::seeded(seed_level, seed_from_sequence(parse_coeffs(seed)));
    }
    throw UsageError("unknown family \"" + name + "\"");
}

int emit(const std::string& command, const std::string& status, json result,
         const std::string& error_message, int code) {
    json envelope = {{"schema_version", kSchemaVersion},
                     {"command", command},
                     {"status", status},
                     {"result", std::move(result)}};
    if (!error_message.empty()) envelope["error_message"] = error_message;
    std::cout << envelope.dump() << "\n";
    return code;
}

int emit_ok(const std::string& command, json result) {
    return emit(command, "ok", std::move(result), "", 0);
}

int emit_domain_failure(const std::string& command, json result, const std::string& msg) {
    return emit(command, "error", std::move(result), msg, 1);
}

json coeff_strings(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.to_string());
    return arr;
}

struct Options {
    unsigned long max_s = 40;
    std::string coeffs;
    std::string family = "kolberg";
    int k = 0;
    std::string seed;
    int seed_level = 0;
    bool latex = false;
    std::string y;
    unsigned long order = 20;
    long a = 1;
    std::string r;
    std::string poly;
    std::string g_num, g_den;
    std::string d;
    std::string t0;
    std::string eps = "2^-30";
};

int run_command(const std::string& command, const Options& opt) {
    if (command == "identities verify") {
        if (auto violation = verify_identities(opt.max_s))
            return emit_domain_failure(command, {{"ok", false}}, violation->what);
        return emit_ok(command, {{"ok", true}, {"max_s", opt.max_s}});
    }
    if (command == "assoc forward" || command == "assoc backward") {
        std::vector<Rational> u = parse_coeffs(opt.coeffs);
        std::vector<Rational> v =
            command == "assoc forward" ? forward_transform(u) : backward_transform(u);
        return emit_ok(command, coeff_strings(v));
    }
    if (command == "quatuor closed-form") {
        Ladder ladder(parse_family(opt.family, opt.seed, opt.seed_level));
        if (static_cast<unsigned long>(std::abs(opt.k)) > max_degree())
            throw UsageError("k exceeds QUATUOR_MAX_DEGREE");
        TwistedForm form = ladder.entry(opt.k);
        if (opt.latex) return emit_ok(command, to_latex(form));
        return emit_ok(command, to_json(form));
    }
    if (command == "quatuor oracle") {
        Ladder ladder(parse_family(opt.family, opt.seed, opt.seed_level));
        std::optional<Rational> y0;
        if (opt.family == "kolberg") {
            if (opt.y.empty()) throw UsageError("kolberg oracle requires --y");
            y0 = parse_rational(opt.y);
        }
        if (opt.order > max_degree()) throw UsageError("order exceeds QUATUOR_MAX_DEGREE");
        OracleReport rep = taylor_oracle_check(ladder, opt.k, y0, opt.order);
        if (rep.ok) return emit_ok(command, {{"ok", true}, {"order", opt.order}});
        return emit_domain_failure(
            command,
            {{"ok", false},
             {"first_mismatch", rep.first_mismatch},
             {"expected", rep.expected.to_string()},
             {"actual", rep.actual.to_string()}},
            "oracle mismatch at n = " + std::to_string(rep.first_mismatch));
    }
    if (command == "kolberg pipeline") {
        PipelineResult res =
            kolberg_pipeline(opt.a, parse_rational(opt.r), parse_poly(opt.poly));
        return emit_ok(command, to_json(res));
    }
    if (command == "kolberg witness") {
        RatFn<Rational> g(parse_poly(opt.g_num), parse_poly(opt.g_den));
        UniPoly<Rational> w =
            witness_polynomial(g, parse_rational(opt.r), parse_rational(opt.d));
        return emit_ok(command, to_json(w));
    }
    if (command == "kolberg rational-at-1")
        return emit_ok(command, rational_value_at_one(opt.k).to_string());
    if (command == "eval residual") {
        PipelineResult res =
            kolberg_pipeline(opt.a, parse_rational(opt.r), parse_poly(opt.poly));
        IntervalReal v = residual_check(res, parse_rational(opt.t0), parse_eps(opt.eps));
        return emit_ok(command, {{"lo", v.lo.to_string()},
                                 {"hi", v.hi.to_string()},
                                 {"contains_zero", v.contains_zero()}});
    }
    throw std::logic_error("unreachable command dispatch");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quatuor ladders, associated-series transforms, and certified residuals"};
    app.require_subcommand(1);
    Options opt;
    std::string command;
    auto bind = [&command](CLI::App* sub, const std::string& name) {
        sub->callback([&command, name] { command = name; });
        return sub;
    };

    CLI::App* identities = app.add_subcommand("identities", "binomial identity block");
    identities->require_subcommand(1);
    CLI::App* verify = bind(identities->add_subcommand("verify", "check the identity block"),
                            "identities verify");
    verify->add_option("--max-s", opt.max_s, "largest exponent checked");

    CLI::App* assoc = app.add_subcommand("assoc", "associated-series transforms");
    assoc->require_subcommand(1);
    for (const char* dir : {"forward", "backward"}) {
        CLI::App* sub = bind(assoc->add_subcommand(dir, "apply the transform"),
                             std::string("assoc ") + dir);
        sub->add_option("--coeffs", opt.coeffs, "comma-separated rationals u_0,u_1,...")
            ->required();
    }

    CLI::App* quat = app.add_subcommand("quatuor", "function-family ladders");
    quat->require_subcommand(1);
    CLI::App* closed = bind(quat->add_subcommand("closed-form", "closed form of one entry"),
                            "quatuor closed-form");
    CLI::App* oracle = bind(quat->add_subcommand("oracle", "Taylor-coefficient cross-check"),
                            "quatuor oracle");
    for (CLI::App* sub : {closed, oracle}) {
        sub->add_option("--family", opt.family, "kolberg | opus2 | seeded");
        sub->add_option("--k", opt.k, "ladder index")->required();
        sub->add_option("--seed", opt.seed, "seed sequence v_1,v_2,... for seeded families");
        sub->add_option("--seed-level", opt.seed_level, "index the seed lives at");
    }
    closed->add_flag("--latex", opt.latex, "render as a LaTeX fraction");
    oracle->add_option("--y", opt.y, "specialization point for twisted families");
    oracle->add_option("--order", opt.order, "number of Taylor coefficients compared");

    CLI::App* kol = app.add_subcommand("kolberg", "transcendence pipeline");
    kol->require_subcommand(1);
    CLI::App* pipe = bind(kol->add_subcommand("pipeline", "decompose a series"),
                          "kolberg pipeline");
    pipe->add_option("--a", opt.a, "exponent shift a")->required();
    pipe->add_option("--r", opt.r, "base point r")->required();
    pipe->add_option("--poly", opt.poly, "coefficients of P, ascending")->required();
    CLI::App* wit = bind(kol->add_subcommand("witness", "algebraicity witness polynomial"),
                         "kolberg witness");
    wit->add_option("--g-num", opt.g_num, "numerator coefficients of g")->required();
    wit->add_option("--g-den", opt.g_den, "denominator coefficients of g")->required();
    wit->add_option("--r", opt.r, "base point r")->required();
    wit->add_option("--d", opt.d, "candidate value d")->required();
    CLI::App* rat1 = bind(kol->add_subcommand("rational-at-1", "exact boundary value"),
                          "kolberg rational-at-1");
    rat1->add_option("--k", opt.k, "family index, k >= 1")->required();

    CLI::App* ev = app.add_subcommand("eval", "certified numerics");
    ev->require_subcommand(1);
    CLI::App* res = bind(ev->add_subcommand("residual", "certified residual at a sample point"),
                         "eval residual");
    res->add_option("--a", opt.a, "exponent shift a")->required();
    res->add_option("--r", opt.r, "base point r")->required();
    res->add_option("--poly", opt.poly, "coefficients of P, ascending")->required();
    res->add_option("--t", opt.t0, "sample point in (0,1)")->required();
    res->add_option("--eps", opt.eps, "tolerance, \"2^-K\" or \"p/q\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string joined;
        for (int i = 1; i < argc; ++i) joined += std::string(i > 1 ? " " : "") + argv[i];
        return emit(joined, "error", nullptr, e.what(), 2);
    }

    try {
        return run_command(command, opt);
    } catch (const UsageError& e) {
        return emit(command, "error", nullptr, e.what(), 2);
    } catch (const std::exception& e) {
        return emit(command, "error", nullptr, e.what(), 1);
    }
}
