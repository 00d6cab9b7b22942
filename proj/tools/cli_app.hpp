#pragma once

// The pellipse command line: solve, simulate, certify and checks.
// Exit codes: 0 ok, 2 invalid input, 3 reflection undefined or degenerate
// chord, 4 no certificate, 5 certificate invalid, 6 a check failed.

#include "figure_data.hpp"
#include "json_io.hpp"
#include "svg.hpp"

#include <pellipse/caustics.hpp>
#include <pellipse/dynamics.hpp>
#include <pellipse/extremal.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pellipse::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInvalid = 2,
    kStep = 3,
    kNoCertificate = 4,
    kCertificateInvalid = 5,
    kChecksFailed = 6,
};

struct RunConfig {
    std::string a, b;
    double epsilon = 1e-9;
    std::string mode = "auto"; // auto, rational, floating
    std::string output = "json";
    std::uint64_t seed = 1;

    bool exact(std::initializer_list<std::string> values) const {
        if (mode == "floating") return false;
        bool all = is_exact_literal(a) && is_exact_literal(b);
        for (const auto& v : values) all = all && (v.empty() || is_exact_literal(v));
        if (mode == "rational" && !all) throw DomainError("rational mode needs rational literals");
        return all;
    }
};

inline double epsilon_from_env(double fallback) {
    const char* e = std::getenv("PELLIPSE_EPSILON");
    if (!e || !*e) return fallback;
    return parse_real(e);
}

namespace detail {

inline void emit(std::ostream& out, const io::json& j) { out << j.dump(2) << '\n'; }

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Rational random_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(1, 40), den(1, 9);
    Rational q(num(g), den(g));
    q.canonicalize();
    return q;
}

} // namespace detail

// ---------------------------------------------------------------- solve

struct SolveArgs {
    int n = 0;
    bool elliptic = false;
    bool scan = false;
};

inline int cmd_solve(const RunConfig& cfg, const SolveArgs& s, std::ostream& out) {
    if (s.elliptic ? s.n < 2 : s.n < 3)
        throw DomainError(s.elliptic ? "elliptic periods start at n = 2" : "periods start at n = 3");
    if (cfg.output != "json" && cfg.output != "csv") throw DomainError("solve writes json or csv");
    const bool exact = cfg.exact({});
    const bool explicit_form = s.elliptic ? s.n <= 5 : s.n <= 8;
    CausticList L;
    if (s.scan || !explicit_form) {
        BoundaryEllipse<double> E(parse_real(cfg.a), parse_real(cfg.b));
        L = s.elliptic ? generic_elliptic_scan(E, s.n) : generic_caustic_scan(E, s.n);
    } else if (exact) {
        BoundaryEllipse<Rational> E(parse_rational(cfg.a), parse_rational(cfg.b));
        L = s.elliptic ? elliptic_caustics(E, s.n) : periodic_caustics(E, s.n);
    } else {
        BoundaryEllipse<double> E(parse_real(cfg.a), parse_real(cfg.b));
        L = s.elliptic ? elliptic_caustics(E, s.n) : periodic_caustics(E, s.n);
    }
    if (cfg.output == "csv") {
        out << io::caustic_list_csv(L);
    } else {
        io::json j = io::caustic_list(L);
        j["mode"] = exact && !s.scan && explicit_form ? "rational" : "floating";
        detail::emit(out, j);
    }
    return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string x0, y0, dx, dy;
    std::string gamma;
    double t0 = 0.37;
    int branch = 0;
    int steps = 10;
    double closure_eps = 1e-6;
    std::string svg_path;
};

template <class T>
int finish_simulation(const RunConfig& cfg, const SimulateArgs& s, const Trajectory<T>& tr, std::ostream& out) {
    ClosureStatus st = first_closure(tr, tr.steps(), s.closure_eps);
    if (!s.svg_path.empty()) {
        std::ofstream f(s.svg_path);
        if (!f) throw DomainError("cannot write " + s.svg_path);
        f << svg::figure(tr);
    }
    if (cfg.output == "csv")
        out << io::trajectory_csv(tr);
    else if (cfg.output == "svg")
        out << svg::figure(tr);
    else {
        io::json j = io::trajectory(tr, st);
        // Cartesian closure regardless of an earlier elliptic-coordinate return
        ClosureStatus cart = first_closure(tr, tr.steps(), s.closure_eps, false);
        const bool closed = cart.kind == ClosureStatus::Kind::Periodic;
        j["closed"] = closed;
        j["period"] = closed ? io::json(cart.n) : io::json(nullptr);
        detail::emit(out, j);
    }
    return kOk;
}

inline int cmd_simulate(const RunConfig& cfg, const SimulateArgs& s, std::ostream& out) {
    if (s.steps < 0) throw DomainError("steps must be nonnegative");
    const Tolerance tol = Tolerance::with_epsilon(cfg.epsilon);
    if (!s.gamma.empty()) {
        // start tangent to C_gamma; x0 (with the sign of y0) or t0 picks the point
        BoundaryEllipse<double> E(parse_real(cfg.a), parse_real(cfg.b));
        const double g = parse_real(s.gamma);
        MVec2<double> P;
        if (!s.x0.empty()) {
            const double x = parse_real(s.x0);
            const double y2 = E.b * (1 - x * x / E.a);
            if (y2 < 0) throw DomainError("x0 outside the ellipse");
            const double sy = !s.y0.empty() && parse_real(s.y0) < 0 ? -1.0 : 1.0;
            P = {x, sy * std::sqrt(y2)};
        } else {
            P = boundary_point(E, s.t0);
        }
        auto dirs = caustic_start_directions(P, g, E);
        if (dirs.empty()) throw DomainError("no tangent to the caustic from the start point");
        const MVec2<double> d = dirs[static_cast<std::size_t>(s.branch) % dirs.size()];
        return finish_simulation(cfg, s, simulate(P, d, s.steps, E, tol), out);
    }
    if (s.x0.empty() || s.y0.empty() || s.dx.empty() || s.dy.empty())
        throw DomainError("simulate needs --x0 --y0 --dx --dy, or --gamma");
    if (cfg.exact({s.x0, s.y0, s.dx, s.dy})) {
        BoundaryEllipse<Rational> E(parse_rational(cfg.a), parse_rational(cfg.b));
        MVec2<Rational> P{parse_rational(s.x0), parse_rational(s.y0)};
        MVec2<Rational> d{parse_rational(s.dx), parse_rational(s.dy)};
        return finish_simulation(cfg, s, simulate(P, d, s.steps, E, tol), out);
    }
    BoundaryEllipse<double> E(parse_real(cfg.a), parse_real(cfg.b));
    MVec2<double> P{parse_real(s.x0), parse_real(s.y0)};
    MVec2<double> d{parse_real(s.dx), parse_real(s.dy)};
    return finish_simulation(cfg, s, simulate(P, d, s.steps, E, tol), out);
}

// ---------------------------------------------------------------- certify

struct CertifyArgs {
    std::string gamma;
    int n = 0;
    std::string case_id;
    double snap = 1e-3;
};

inline int cmd_certify(const RunConfig& cfg, const CertifyArgs& s, std::ostream& out) {
    if (s.n < 2) throw DomainError("n must be at least 2");
    const bool exact = cfg.exact({s.gamma});
    if (!s.case_id.empty()) {
        if (s.case_id.size() != 1 || s.case_id[0] < 'a' || s.case_id[0] > 'e') throw DomainError("case is one of a..e");
        const char cs = s.case_id[0];
        io::json j;
        double residual;
        if (exact) {
            BoundaryEllipse<Rational> E(parse_rational(cfg.a), parse_rational(cfg.b));
            auto p = elliptic_pell_check(E, parse_rational(s.gamma), s.n, cs);
            residual = p.residual;
            j = io::elliptic_certificate(p, parse_real(s.gamma));
        } else {
            BoundaryEllipse<double> E(parse_real(cfg.a), parse_real(cfg.b));
            auto p = elliptic_pell_check(E, parse_real(s.gamma), s.n, cs);
            residual = p.residual;
            j = io::elliptic_certificate(p, parse_real(s.gamma));
        }
        detail::emit(out, j);
        return residual <= 1e-8 ? kOk : kCertificateInvalid;
    }
    if (s.n < 3) throw DomainError("periodic certificates start at n = 3");
    const double a = parse_real(cfg.a), b = parse_real(cfg.b);
    io::json j;
    bool ok;
    if (exact) {
        BoundaryEllipse<Rational> E(parse_rational(cfg.a), parse_rational(cfg.b));
        const Rational g = parse_rational(s.gamma);
        auto c = certify(E, g, s.n);
        KlnResult kln = kln_partition(a, b, c.gamma);
        j = io::certificate(c, kln);
        ok = c.alternates && c.alternation_count == s.n + 2 && c.signature_matches_partition() && c.bounded;
    } else {
        auto c = certify_floating(a, b, parse_real(s.gamma), s.n, s.snap);
        KlnResult kln = kln_partition(a, b, c.gamma);
        j = io::certificate(c, kln);
        j["gamma_input"] = parse_real(s.gamma);
        ok = c.alternates && c.alternation_count == s.n + 2 && c.signature_matches_partition() && c.bounded;
    }
    j["mode"] = exact ? "rational" : "floating";
    detail::emit(out, j);
    return ok ? kOk : kCertificateInvalid;
}

// ---------------------------------------------------------------- checks

struct ChecksArgs {
    std::string suite;
    int count = 10;
};

inline bool check_discriminants(const ChecksArgs& s, std::uint64_t seed, io::json& report) {
    auto g = detail::rng(seed);
    bool all = true;
    io::json rows = io::json::array();
    for (int i = 0; i < s.count; ++i) {
        const Rational a = detail::random_rational(g), b = detail::random_rational(g);
        for (ConditionId id : discriminant_identity_ids()) {
            const bool zero = sgn(discriminant_identity_check(id, a, b)) == 0;
            all = all && zero;
            io::json r{{"a", a.get_str()}, {"b", b.get_str()}, {"polynomial", to_string(id)}, {"residual_zero", zero}};
            if (id == ConditionId::G5e)
                r["matches_computed_form"] =
                    formal_discriminant(condition_polynomial(id, a, b), generic_degree(id)) ==
                    computed_g5e_discriminant(a, b);
            rows.push_back(r);
        }
    }
    const Rational spot = discriminant(condition_polynomial(ConditionId::G2, Rational(3), Rational(2)));
    report["spot_disc_G2_3_2"] = spot.get_str();
    all = all && spot == 10944;
    report["rows"] = rows;
    return all;
}

inline bool check_zolotarev(const ChecksArgs& s, std::uint64_t seed, io::json& report) {
    auto g = detail::rng(seed);
    bool all = true;
    io::json rows = io::json::array();
    for (int i = 0; i < s.count; ++i) {
        const Rational a = detail::random_rational(g), b = detail::random_rational(g);
        Zolotarev3Report z = zolotarev3_consistency(a, b);
        const bool ok = z.max_residual() <= 1e-9 && z.alpha_exact && z.gamma_exact;
        all = all && ok;
        rows.push_back({{"a", a.get_str()},
                        {"b", b.get_str()},
                        {"alpha_residual", z.alpha_residual},
                        {"sn_residual", z.sn_residual},
                        {"gamma_residual", z.gamma_residual},
                        {"alpha_exact", z.alpha_exact},
                        {"gamma_exact", z.gamma_exact},
                        {"pass", ok}});
    }
    report["rows"] = rows;
    return all;
}

inline bool check_lightlike(io::json& report) {
    bool all = true;
    io::json rows = io::json::array();
    for (int n = 4; n <= 12; n += 2)
        for (int k = 1; 2 * k < n; ++k) {
            if (std::gcd(k, n / 2) != 1) continue;
            const double c = 1 / std::tan(k * M_PI / n);
            const double a = c * c, b = 1;
            auto found = lightlike_periodic(a, b, 100);
            ClosureStatus st = first_closure(lightlike_trajectory({a, b}, n), n, 1e-8, false);
            const double q0 = lightlike_pell_check(a, b, n / 2).q_at_zero;
            const bool ok = found && found->n == n && found->k == k &&
                            st.kind == ClosureStatus::Kind::Periodic && st.n == n && q0 <= 1e-10;
            all = all && ok;
            rows.push_back({{"n", n},
                            {"k", k},
                            {"a", a},
                            {"b", b},
                            {"closure_n", st.kind == ClosureStatus::Kind::Periodic ? st.n : -1},
                            {"q_at_zero", q0},
                            {"pass", ok}});
        }
    const bool none = !lightlike_periodic(2.0, 3.0, 100).has_value();
    report["a2_b3_no_closure_to_100"] = none;
    report["rows"] = rows;
    return all && none;
}

inline bool check_table(std::uint64_t seed, io::json& report) {
    auto g = detail::rng(seed);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    std::uniform_int_distribution<int> branch(0, 1);
    bool all = true;
    io::json rows = io::json::array();
    for (const auto& row : figures::periodic_rows()) {
        BoundaryEllipse<Rational> E(row.a, row.b);
        CausticList L = periodic_caustics(E, row.n);
        std::optional<double> gamma;
        for (const auto& r : L.gammas)
            if (std::fabs(r.gamma - row.gamma) <= 1e-3) gamma = r.gamma;
        bool ok = gamma.has_value();
        int agree = 0;
        if (gamma) {
            for (int i = 0; i < 20; ++i) {
                ValidationOptions opt;
                opt.start_angle = angle(g);
                auto v = validation_trajectory(E.to_floating(), *gamma, row.n, opt, branch(g));
                if (v && v->second.kind == ClosureStatus::Kind::Periodic &&
                    partition_counts(v->first, row.n, 1e-6) == std::make_pair(row.n1, row.n2))
                    ++agree;
            }
            ok = agree == 20;
        }
        all = all && ok;
        rows.push_back({{"n", row.n},
                        {"a", row.a},
                        {"b", row.b},
                        {"gamma", gamma ? *gamma : NAN},
                        {"n1", row.n1},
                        {"n2", row.n2},
                        {"starts_agreeing", agree},
                        {"pass", ok}});
    }
    report["rows"] = rows;
    return all;
}

inline int cmd_checks(const RunConfig& cfg, const ChecksArgs& s, std::ostream& out) {
    io::json report;
    report["suite"] = s.suite;
    report["seed"] = cfg.seed;
    bool ok;
    if (s.suite == "discriminants")
        ok = check_discriminants(s, cfg.seed, report);
    else if (s.suite == "zolotarev3")
        ok = check_zolotarev(s, cfg.seed, report);
    else if (s.suite == "lightlike")
        ok = check_lightlike(report);
    else if (s.suite == "table")
        ok = check_table(cfg.seed, report);
    else
        throw DomainError("unknown suite " + s.suite);
    report["passed"] = ok;
    detail::emit(out, report);
    return ok ? kOk : kChecksFailed;
}

// ---------------------------------------------------------------- entry

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minkowski billiards in an ellipse: caustics, closure, Pell certificates"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::optional<double> eps_flag;
    app.add_option("--epsilon", eps_flag, "tolerance for floating tests (default: PELLIPSE_EPSILON or 1e-9)");
    app.add_option("--mode", cfg.mode, "number kernel")->check(CLI::IsMember({"auto", "rational", "floating"}));
    app.add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"json", "csv", "svg"}));
    app.add_option("--seed", cfg.seed, "seed for randomized starts and samples");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "caustic parameters of n-periodic trajectories");
    solve->add_option("--n", solve_args.n, "period")->required();
    solve->add_option("--a", cfg.a, "ellipse parameter a")->required();
    solve->add_option("--b", cfg.b, "ellipse parameter b")->required();
    solve->add_flag("--elliptic", solve_args.elliptic, "n-elliptic periodic instead of n-periodic");
    solve->add_flag("--scan", solve_args.scan, "numeric Hankel scan instead of the explicit polynomial");

    SimulateArgs sim_args;
    auto* sim = app.add_subcommand("simulate", "iterate the billiard map");
    sim->add_option("--a", cfg.a, "ellipse parameter a")->required();
    sim->add_option("--b", cfg.b, "ellipse parameter b")->required();
    sim->add_option("--x0", sim_args.x0, "start x");
    sim->add_option("--y0", sim_args.y0, "start y (with --gamma only its sign is used)");
    sim->add_option("--dx", sim_args.dx, "start direction x");
    sim->add_option("--dy", sim_args.dy, "start direction y");
    sim->add_option("--gamma", sim_args.gamma, "start tangent to this caustic");
    sim->add_option("--t0", sim_args.t0, "boundary angle of the start when --x0 is absent");
    sim->add_option("--branch", sim_args.branch, "which of the two tangents (0 or 1)");
    sim->add_option("--steps", sim_args.steps, "number of reflections");
    sim->add_option("--closure-eps", sim_args.closure_eps, "closure tolerance");
    sim->add_option("--svg", sim_args.svg_path, "also write an SVG figure to this file");

    CertifyArgs cert_args;
    auto* cert = app.add_subcommand("certify", "Pell certificate for a periodic caustic");
    cert->add_option("--a", cfg.a, "ellipse parameter a")->required();
    cert->add_option("--b", cfg.b, "ellipse parameter b")->required();
    cert->add_option("--gamma", cert_args.gamma, "caustic parameter")->required();
    cert->add_option("--n", cert_args.n, "period")->required();
    cert->add_option("--case", cert_args.case_id, "elliptic case a..e for the case identity");
    cert->add_option("--snap", cert_args.snap, "relative distance within which gamma is refined to a root");

    ChecksArgs check_args;
    auto* checks = app.add_subcommand("checks", "identity and fixture suites");
    checks->add_option("--suite", check_args.suite, "suite")
        ->required()
        ->check(CLI::IsMember({"discriminants", "zolotarev3", "lightlike", "table"}));
    checks->add_option("--count", check_args.count, "random samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        cfg.epsilon = eps_flag ? *eps_flag : epsilon_from_env(1e-9);
        if (!(cfg.epsilon > 0)) throw DomainError("epsilon must be positive");
        if (*solve) return cmd_solve(cfg, solve_args, out);
        if (*sim) return cmd_simulate(cfg, sim_args, out);
        if (*cert) return cmd_certify(cfg, cert_args, out);
        if (*checks) return cmd_checks(cfg, check_args, out);
    } catch (const StepError& e) {
        err << "error: " << e.what() << " at step " << e.step << '\n';
        return kStep;
    } catch (const NoCertificate& e) {
        err << "error: no certificate: " << e.what() << '\n';
        return kNoCertificate;
    } catch (const CertificateInvalid& e) {
        err << "error: certificate invalid: " << e.what() << '\n';
        return kCertificateInvalid;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kInvalid;
}

} // namespace pellipse::cli
