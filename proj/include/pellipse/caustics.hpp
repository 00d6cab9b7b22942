#pragma once

// Caustic parameters gamma for n-periodic (n = 3..8) and n-elliptic-periodic
// (n = 2..5) trajectories: explicit condition polynomials in gamma with
// coefficients in (a, b), closed forms for n = 3, 4, a generic Hankel scan,
// and exact discriminant identities.

#include "cayley.hpp"
#include "dynamics.hpp"
#include "polynomial.hpp"
#include "roots.hpp"
#include "surd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace pellipse {

enum class ConditionId {
    // periodic: n = 3, 4, 5, 6, 7, 8
    G2,
    G3,
    G6,
    G8,
    G12,
    G15,
    // elliptic: n = 2 (D1, E1, C1), 3 (G1e = E2, G2e = D2), 4 (G3e = D, G4e = E, G5e = C), 5 (E5a, D5b)
    D1,
    E1,
    C1,
    G1e,
    G2e,
    G3e,
    G4e,
    G5e,
    E5a,
    D5b,
    // factor of G8 without real roots
    G8NeverReal
};

inline std::string to_string(ConditionId id) {
    switch (id) {
        case ConditionId::G2: return "G2";
        case ConditionId::G3: return "G3";
        case ConditionId::G6: return "G6";
        case ConditionId::G8: return "G8";
        case ConditionId::G12: return "G12";
        case ConditionId::G15: return "G15";
        case ConditionId::D1: return "D1";
        case ConditionId::E1: return "E1";
        case ConditionId::C1: return "C1";
        case ConditionId::G1e: return "G1e";
        case ConditionId::G2e: return "G2e";
        case ConditionId::G3e: return "G3e";
        case ConditionId::G4e: return "G4e";
        case ConditionId::G5e: return "G5e";
        case ConditionId::E5a: return "E5a";
        case ConditionId::D5b: return "D5b";
        case ConditionId::G8NeverReal: return "G8NeverReal";
    }
    return "?";
}

namespace detail {

template <class T>
T pw(const T& x, int k) {
    T r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

template <class T>
Polynomial<T> poly(std::vector<T> c) {
    return Polynomial<T>(std::move(c));
}

} // namespace detail

/// Condition polynomial in gamma for the given (a, b).
template <class T>
Polynomial<T> condition_polynomial(ConditionId id, const T& a, const T& b) {
    using detail::pw;
    using detail::poly;
    const T s = a + b, d = a - b, ab = a * b;
    switch (id) {
        case ConditionId::G2:
            return poly<T>({T(3 * ab * ab), T(2 * ab * d), T(-s * s)});
        case ConditionId::G3: {
            // -(ab + a g + b g)(ab + a g - b g)(ab - a g - b g)
            Polynomial<T> l1 = poly<T>({ab, s}), l2 = poly<T>({ab, d}), l3 = poly<T>({ab, T(-s)});
            return -(l1 * l2 * l3);
        }
        case ConditionId::G6:
            return poly<T>({
                T(5 * pw(ab, 6)),
                T(10 * pw(ab, 5) * d),
                T(-pw(ab, 4) * (9 * a * a + 34 * ab + 9 * b * b)),
                T(-36 * pw(ab, 3) * d * s * s),
                T(-pw(ab, 2) * (29 * a * a - 54 * ab + 29 * b * b) * s * s),
                T(-2 * ab * d * (a - 3 * b) * (3 * a - b) * s * s),
                pw(s, 6),
            });
        case ConditionId::G8:
            return poly<T>({
                T(3 * pw(ab, 8)),
                T(8 * pw(ab, 7) * d),
                T(-4 * pw(ab, 6) * (a + 3 * b) * (3 * a + b)),
                T(-72 * pw(ab, 5) * d * s * s),
                T(-10 * pw(ab, 4) * (11 * a * a - 18 * ab + 11 * b * b) * s * s),
                T(-8 * pw(ab, 3) * d * (9 * a * a - 14 * ab + 9 * b * b) * s * s),
                T(-4 * pw(ab, 2) * (3 * pw(a, 4) - 24 * pw(a, 3) * b + 10 * a * a * b * b - 24 * a * pw(b, 3) + 3 * pw(b, 4)) *
                  s * s),
                T(8 * ab * d * pw(s, 6)),
                T((3 * a - b) * (a - 3 * b) * pw(s, 6)),
            });
        case ConditionId::G12: {
            const T s2 = s * s, s6 = pw(s, 6);
            return poly<T>({
                T(7 * pw(ab, 12)),
                T(28 * pw(ab, 11) * d),
                T(-14 * pw(ab, 10) * (3 * a * a + 14 * ab + 3 * b * b)),
                T(-4 * pw(ab, 9) * d * (121 * a * a + 250 * ab + 121 * b * b)),
                T(-3 * pw(ab, 8) * (437 * a * a - 726 * ab + 437 * b * b) * s2),
                T(-24 * pw(ab, 7) * d * (75 * a * a - 106 * ab + 75 * b * b) * s2),
                T(-12 * pw(ab, 6) *
                  (105 * pw(a, 4) - 420 * pw(a, 3) * b + 422 * a * a * b * b - 420 * a * pw(b, 3) + 105 * pw(b, 4)) * s2),
                T(-8 * pw(ab, 5) * d *
                  (21 * pw(a, 4) - 420 * pw(a, 3) * b - 50 * a * a * b * b - 420 * a * pw(b, 3) + 21 * pw(b, 4)) * s2),
                T(pw(ab, 4) * (7 * a * a + 30 * ab + 7 * b * b) *
                  (63 * pw(a, 4) - 84 * pw(a, 3) * b - 38 * a * a * b * b - 84 * a * pw(b, 3) + 63 * pw(b, 4)) * s2),
                T(28 * pw(ab, 3) * d * (13 * a * a - 38 * ab + 13 * b * b) * s6),
                T(2 * pw(ab, 2) *
                  (59 * pw(a, 4) - 332 * pw(a, 3) * b + 626 * a * a * b * b - 332 * a * pw(b, 3) + 59 * pw(b, 4)) * s6),
                T(4 * ab * d * (a - 3 * b) * (3 * a - b) * (a * a - 6 * ab + b * b) * s6),
                T(-pw(s, 12)),
            });
        }
        case ConditionId::G15: {
            // (ab - a g - b g)(ab + a g + b g)(ab + a g - b g) G3e G4e G5e.
            // The printed last factor has a stray lambda^4, read as gamma^4.
            Polynomial<T> l1 = poly<T>({ab, T(-s)}), l2 = poly<T>({ab, s}), l3 = poly<T>({ab, d});
            return l1 * l2 * l3 * condition_polynomial(ConditionId::G3e, a, b) *
                   condition_polynomial(ConditionId::G4e, a, b) * condition_polynomial(ConditionId::G5e, a, b);
        }
        case ConditionId::D1:
            return poly<T>({T(-ab), s});
        case ConditionId::E1:
            return poly<T>({ab, s});
        case ConditionId::C1:
            return poly<T>({ab, d});
        case ConditionId::G1e:
            return poly<T>({T(ab * ab), T(-2 * ab * s), T(-s * (3 * a - b))});
        case ConditionId::G2e:
            return poly<T>({T(ab * ab), T(2 * ab * s), T(s * (a - 3 * b))});
        case ConditionId::G3e:
            return poly<T>({pw(ab, 4), T(-4 * pw(ab, 3) * s), T(-2 * ab * ab * s * (5 * a - 3 * b)),
                            T(-4 * ab * s * d * d), pw(s, 4)});
        case ConditionId::G4e:
            return poly<T>({pw(ab, 4), T(4 * pw(ab, 3) * s), T(2 * ab * ab * s * (3 * a - 5 * b)), T(4 * ab * s * d * d),
                            pw(s, 4)});
        case ConditionId::G5e:
            return poly<T>({pw(ab, 4), T(4 * pw(ab, 3) * d), T(2 * ab * ab * (3 * a * a + 2 * ab + 3 * b * b)),
                            T(4 * ab * d * s * s), T((a * a - 6 * ab + b * b) * s * s)});
        case ConditionId::E5a:
            return poly<T>({
                pw(ab, 6),
                T(-6 * pw(ab, 5) * s),
                T(-pw(ab, 4) * s * (29 * a - 15 * b)),
                T(-4 * pw(ab, 3) * s * (9 * a * a - 10 * ab + 5 * b * b)),
                T(-ab * ab * s * (9 * pw(a, 3) - 45 * a * a * b - 5 * a * b * b - 15 * pw(b, 3))),
                T(2 * ab * (5 * a - 3 * b) * pw(s, 4)),
                T((5 * a * a - 10 * ab + b * b) * pw(s, 4)),
            });
        case ConditionId::D5b:
            return poly<T>({
                pw(ab, 6),
                T(6 * pw(ab, 5) * s),
                T(pw(ab, 4) * s * (15 * a - 29 * b)),
                T(4 * pw(ab, 3) * s * (5 * a * a - 10 * ab + 9 * b * b)),
                T(ab * ab * s * (15 * pw(a, 3) + 5 * a * a * b + 45 * a * b * b - 9 * pw(b, 3))),
                T(2 * ab * (3 * a - 5 * b) * pw(s, 4)),
                T((a * a - 10 * ab + 5 * b * b) * pw(s, 4)),
            });
        case ConditionId::G8NeverReal:
            return poly<T>({T(ab * ab), T(2 * ab * d), T(s * s)});
    }
    throw DomainError("unknown condition polynomial");
}

/// Explicit periodic condition for n = 3..8.
inline ConditionId periodic_condition_id(int n) {
    switch (n) {
        case 3: return ConditionId::G2;
        case 4: return ConditionId::G3;
        case 5: return ConditionId::G6;
        case 6: return ConditionId::G8;
        case 7: return ConditionId::G12;
        case 8: return ConditionId::G15;
    }
    throw DomainError("explicit periodic conditions cover n = 3..8");
}

/// Lower-period factor contained in the n-periodic condition (n = 6, 8).
inline std::optional<ConditionId> lower_period_factor(int n) {
    if (n == 6) return ConditionId::G2;
    if (n == 8) return ConditionId::G3;
    return std::nullopt;
}

struct EllipticCondition {
    ConditionId id;
    Variant variant;
};

inline std::vector<EllipticCondition> elliptic_conditions(int n) {
    switch (n) {
        case 2:
            return {{ConditionId::D1, Variant::D}, {ConditionId::E1, Variant::E}, {ConditionId::C1, Variant::C}};
        case 3: return {{ConditionId::G1e, Variant::E}, {ConditionId::G2e, Variant::D}};
        case 4:
            return {{ConditionId::G3e, Variant::D}, {ConditionId::G4e, Variant::E}, {ConditionId::G5e, Variant::C}};
        case 5: return {{ConditionId::E5a, Variant::E}, {ConditionId::D5b, Variant::D}};
    }
    throw DomainError("explicit elliptic conditions cover n = 2..5");
}

/// Case letter for a root of a condition over the given series variant, or 0
/// when the parameter range admits none.
inline char elliptic_case_for(Variant v, int n, ConicClass cls, double gamma) {
    const bool even = n % 2 == 0;
    const bool ellipse = cls == ConicClass::EllipseOfFamily;
    const bool hyper = is_hyperbola(cls);
    switch (v) {
        case Variant::D:
            if (ellipse && gamma > 0 && even) return 'a';
            if (ellipse && gamma < 0 && !even) return 'b';
            if (hyper && !even) return 'd';
            return 0;
        case Variant::E:
            if (ellipse && gamma < 0 && even) return 'b';
            if (ellipse && gamma > 0 && !even) return 'a';
            if (hyper && !even) return 'e';
            return 0;
        case Variant::C:
            if (hyper && even) return 'c';
            return 0;
        case Variant::B: return 0;
    }
    return 0;
}

// ---------------------------------------------------------------- closed forms

/// n = 3: gamma_{1,2} = ab/(a+b)^2 (a - b +- 2 sqrt(a^2+ab+b^2));
/// n = 4: {-ab/(a+b), -ab/(a-b), ab/(a+b)}, the middle one dropped when a = b.
template <class T>
std::vector<double> closed_form_caustics(const BoundaryEllipse<T>& E, int n) {
    const double a = E.ad(), b = E.bd();
    if (n == 3) {
        const double k = a * b / ((a + b) * (a + b));
        const double r = 2 * std::sqrt(a * a + a * b + b * b);
        return {k * (a - b + r), k * (a - b - r)};
    }
    if (n == 4) {
        std::vector<double> out{-a * b / (a + b)};
        if (!(E.a == E.b)) out.push_back(-a * b / (a - b));
        out.push_back(a * b / (a + b));
        return out;
    }
    throw DomainError("closed forms exist for n = 3 and n = 4");
}

/// Exact n = 3 closed forms in Q(sqrt(a^2+ab+b^2)).
inline std::vector<Surd> closed_form_caustics_exact3(const Rational& a, const Rational& b) {
    const Rational D = a * a + a * b + b * b;
    const Rational k = a * b / ((a + b) * (a + b));
    return {Surd(k * (a - b), 2 * k, D), Surd(k * (a - b), -2 * k, D)};
}

/// Exact n = 4 closed forms.
inline std::vector<Rational> closed_form_caustics_exact4(const Rational& a, const Rational& b) {
    std::vector<Rational> out{Rational(-a * b / (a + b))};
    if (a != b) out.push_back(Rational(-a * b / (a - b)));
    out.push_back(Rational(a * b / (a + b)));
    return out;
}

/// Evaluate a rational polynomial at a surd.
inline Surd evaluate(const Polynomial<Rational>& p, const Surd& x) {
    Surd r = Surd::rational(0, x.radicand());
    for (int k = p.degree(); k >= 0; --k) r = r * x + Surd::rational(p.coeff(k), x.radicand());
    return r;
}

// ---------------------------------------------------------------- validation

struct CausticRecord {
    double gamma = 0;
    ConicClass conic = ConicClass::EllipseOfFamily;
    int n1 = -1, n2 = -1;
    bool hankel_ok = false;     // is_periodic / elliptic_case_test agrees
    bool simulation_ok = false; // validation trajectory closes as predicted
    bool validated = false;     // both of the above
    char case_id = 0;           // elliptic case, 0 for periodic lists
    Sigma sigma = Sigma::Identity;
    std::string source;         // condition polynomial or scan
};

struct DiscardedRoot {
    double gamma;
    std::string reason;
};

struct CausticList {
    int n = 0;
    std::string kind; // "periodic" or "elliptic"
    std::vector<CausticRecord> gammas;
    std::vector<CausticRecord> lower_period;
    std::vector<DiscardedRoot> discarded;
};

struct ValidationOptions {
    double closure_eps = 1e-6;
    double start_angle = 0.37;
    double degenerate_eps = 1e-9;
};

/// Simulate n steps from a tangent start and report the closure at step n.
inline std::optional<std::pair<Trajectory<double>, ClosureStatus>>
validation_trajectory(const BoundaryEllipse<double>& E, double gamma, int n, const ValidationOptions& opt,
                      int branch = 0) {
    auto start = find_caustic_start(E, gamma, opt.start_angle, branch);
    if (!start) return std::nullopt;
    try {
        Tolerance tol;
        Trajectory<double> tr = simulate(start->point, start->direction, n, E, tol);
        ClosureStatus st = closure_status(tr, n, opt.closure_eps);
        return std::make_pair(std::move(tr), st);
    } catch (const StepError&) {
        return std::nullopt;
    }
}

namespace detail {

inline bool near_degenerate(double g, double a, double b, double eps) {
    const double scale = std::max({1.0, a, b});
    return std::fabs(g) <= eps * scale || std::fabs(g - a) <= eps * scale || std::fabs(g + b) <= eps * scale;
}

inline bool contains_close(const std::vector<double>& xs, double x, double rel) {
    for (double y : xs)
        if (std::fabs(x - y) <= rel * std::max(1.0, std::fabs(x))) return true;
    return false;
}

inline CausticRecord validate_periodic_root(const BoundaryEllipse<double>& Ed, double g, int n,
                                            const ValidationOptions& opt) {
    CausticRecord rec;
    rec.gamma = g;
    rec.conic = classify_conic(g, Ed);
    rec.hankel_ok = is_periodic(Ed, g, n).periodic;
    if (auto v = validation_trajectory(Ed, g, n, opt)) {
        if (v->second.kind == ClosureStatus::Kind::Periodic) {
            rec.simulation_ok = true;
            auto [n1, n2] = partition_counts(v->first, n, opt.closure_eps);
            rec.n1 = n1;
            rec.n2 = n2;
        }
    }
    rec.validated = rec.hankel_ok && rec.simulation_ok;
    return rec;
}

inline CausticRecord validate_elliptic_root(const BoundaryEllipse<double>& Ed, double g, int n, char expected,
                                            const ValidationOptions& opt) {
    CausticRecord rec;
    rec.gamma = g;
    rec.conic = classify_conic(g, Ed);
    rec.case_id = expected;
    rec.sigma = case_symmetry(expected);
    rec.hankel_ok = elliptic_case_test(Ed, g, n).case_id == expected;
    if (auto v = validation_trajectory(Ed, g, n, opt)) {
        rec.simulation_ok = v->second.kind == ClosureStatus::Kind::EllipticPeriodic && v->second.sigma == rec.sigma;
    }
    rec.validated = rec.hankel_ok && rec.simulation_ok;
    return rec;
}

inline void sort_records(std::vector<CausticRecord>& v) {
    std::sort(v.begin(), v.end(), [](const CausticRecord& x, const CausticRecord& y) { return x.gamma < y.gamma; });
}

} // namespace detail

/// Real roots of the explicit n-periodic condition, filtered and validated.
template <class T>
CausticList periodic_caustics(const BoundaryEllipse<T>& E, int n, const ValidationOptions& opt = {}) {
    const ConditionId id = periodic_condition_id(n);
    CausticList out;
    out.n = n;
    out.kind = "periodic";
    const BoundaryEllipse<double> Ed = E.to_floating();
    const double a = Ed.a, b = Ed.b;
    std::vector<double> roots = real_roots(condition_polynomial(id, E.a, E.b));
    std::vector<double> lower;
    if (auto f = lower_period_factor(n)) lower = real_roots(condition_polynomial(*f, E.a, E.b));
    for (double g : roots) {
        if (detail::near_degenerate(g, a, b, opt.degenerate_eps)) {
            out.discarded.push_back({g, "degenerate caustic parameter"});
            continue;
        }
        ConicClass cls = classify_conic(g, Ed);
        if (n % 2 == 1 && cls != ConicClass::EllipseOfFamily) {
            out.discarded.push_back({g, "odd period requires an ellipse caustic"});
            continue;
        }
        CausticRecord rec = detail::validate_periodic_root(Ed, g, n, opt);
        rec.source = to_string(id);
        if (detail::contains_close(lower, g, 1e-9)) {
            rec.source = to_string(*lower_period_factor(n));
            out.lower_period.push_back(rec);
        } else {
            out.gammas.push_back(rec);
        }
    }
    return out;
}

/// Real roots of the case conditions for n-elliptic periodicity, n = 2..5.
template <class T>
CausticList elliptic_caustics(const BoundaryEllipse<T>& E, int n, const ValidationOptions& opt = {}) {
    CausticList out;
    out.n = n;
    out.kind = "elliptic";
    const BoundaryEllipse<double> Ed = E.to_floating();
    for (const auto& cond : elliptic_conditions(n)) {
        for (double g : real_roots(condition_polynomial(cond.id, E.a, E.b))) {
            if (detail::near_degenerate(g, Ed.a, Ed.b, opt.degenerate_eps)) {
                out.discarded.push_back({g, "degenerate caustic parameter"});
                continue;
            }
            ConicClass cls = classify_conic(g, Ed);
            char c = elliptic_case_for(cond.variant, n, cls, g);
            if (c == 0) {
                out.discarded.push_back({g, to_string(cond.id) + " root outside its case range"});
                continue;
            }
            CausticRecord rec = detail::validate_elliptic_root(Ed, g, n, c, opt);
            rec.source = to_string(cond.id);
            out.gammas.push_back(rec);
        }
    }
    detail::sort_records(out.gammas);
    return out;
}

// ---------------------------------------------------------------- generic scan

struct ScanSpec {
    int points = 4000;       // grid points per parameter range
    double margin = 1e-7;    // relative distance kept from 0, a, -b
};

namespace detail {

// Sign-change scan of f over (lo, hi) in the variable u, with gamma = map(u).
template <class F, class Map>
void scan_range(F&& f, Map&& map, double lo, double hi, int points, std::vector<double>& out) {
    double prev_u = lo;
    double prev = f(map(lo));
    for (int i = 1; i <= points; ++i) {
        double u = lo + (hi - lo) * i / points;
        double v = f(map(u));
        if (std::isfinite(prev) && std::isfinite(v) && prev != 0 && v != 0 && (prev > 0) != (v > 0)) {
            double root_u = bisect([&](double w) { return f(map(w)); }, prev_u, u);
            out.push_back(map(root_u));
        } else if (v == 0) {
            out.push_back(map(u));
        }
        prev = v;
        prev_u = u;
    }
}

template <class F>
std::vector<double> scan_all_ranges(F&& f, double a, double b, const ScanSpec& spec) {
    std::vector<double> out;
    const double m = spec.margin;
    auto id = [](double u) { return u; };
    auto inv = [](double u) { return 1.0 / u; };
    scan_range(f, id, -b * (1 - m), -b * m, spec.points, out);       // (-b, 0)
    scan_range(f, id, a * m, a * (1 - m), spec.points, out);          // (0, a)
    scan_range(f, inv, -(1 - m) / b, -m / b, spec.points, out);       // gamma < -b
    scan_range(f, inv, m / a, (1 - m) / a, spec.points, out);         // gamma > a
    std::sort(out.begin(), out.end());
    std::vector<double> dedup;
    for (double g : out)
        if (!contains_close(dedup, g, 1e-7)) dedup.push_back(g);
    return dedup;
}

inline double scaled_hankel(const BoundaryEllipse<double>& E, double g, const HankelLayout& L, int order) {
    try {
        TruncatedSeries<double> S = series_variant(E, g, L.variant, order);
        return hankel_det(S, L.dp, L.dq);
    } catch (const DomainError&) {
        return NAN;
    }
}

} // namespace detail

/// Numeric fallback: sign-change scan of the periodic Hankel determinant.
inline CausticList generic_caustic_scan(const BoundaryEllipse<double>& E, int n, const ScanSpec& spec = {},
                                        const ValidationOptions& opt = {}) {
    if (n < 3) throw DomainError("generic scan needs n >= 3");
    CausticList out;
    out.n = n;
    out.kind = "periodic";
    const HankelLayout L = periodic_layout(n);
    auto f = [&](double g) { return detail::scaled_hankel(E, g, L, default_order(n)); };
    for (double g : detail::scan_all_ranges(f, E.a, E.b, spec)) {
        ConicClass cls = classify_conic(g, E);
        if (n % 2 == 1 && cls != ConicClass::EllipseOfFamily) {
            out.discarded.push_back({g, "odd period requires an ellipse caustic"});
            continue;
        }
        CausticRecord rec = detail::validate_periodic_root(E, g, n, opt);
        rec.source = "scan";
        bool lower = false;
        for (int d = 3; d < n; ++d)
            if (n % d == 0 && is_periodic(E, g, d).periodic) lower = true;
        if (lower)
            out.lower_period.push_back(rec);
        else
            out.gammas.push_back(rec);
    }
    return out;
}

/// Numeric fallback for elliptic periodicity: scan every case ladder.
inline CausticList generic_elliptic_scan(const BoundaryEllipse<double>& E, int n, const ScanSpec& spec = {},
                                         const ValidationOptions& opt = {}) {
    if (n < 2) throw DomainError("elliptic scan needs n >= 2");
    CausticList out;
    out.n = n;
    out.kind = "elliptic";
    const int m = n / 2;
    const bool even = n % 2 == 0;
    std::vector<HankelLayout> layouts;
    if (even) {
        layouts = {{Variant::D, m - 1, m - 1}, {Variant::E, m - 1, m - 1}, {Variant::C, m - 1, m - 1}};
    } else {
        layouts = {{Variant::D, m, m - 1}, {Variant::E, m, m - 1}};
    }
    for (const auto& L : layouts) {
        auto f = [&](double g) { return detail::scaled_hankel(E, g, L, default_order(n)); };
        for (double g : detail::scan_all_ranges(f, E.a, E.b, spec)) {
            char c = elliptic_case_for(L.variant, n, classify_conic(g, E), g);
            if (c == 0) {
                out.discarded.push_back({g, to_string(L.variant) + "-ladder root outside its case range"});
                continue;
            }
            CausticRecord rec = detail::validate_elliptic_root(E, g, n, c, opt);
            rec.source = "scan";
            out.gammas.push_back(rec);
        }
    }
    detail::sort_records(out.gammas);
    return out;
}

// ---------------------------------------------------------------- discriminants

/// Resultant via the Sylvester matrix.
template <class T>
T resultant(const Polynomial<T>& f, const Polynomial<T>& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return T(0);
    if (m == 0 && n == 0) return T(1);
    const int N = m + n;
    Matrix<T> S(static_cast<std::size_t>(N), std::vector<T>(static_cast<std::size_t>(N), T(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            S[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            S[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = g.coeff(n - k);
    return determinant(std::move(S));
}

/// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f).
template <class T>
T discriminant(const Polynomial<T>& f) {
    const int d = f.degree();
    if (d < 1) throw DomainError("discriminant needs degree >= 1");
    if (d == 1) return T(1);
    T r = resultant(f, f.derivative()) / f.leading();
    if ((d * (d - 1) / 2) % 2 == 1) r = -r;
    return r;
}

/// Discriminant of f read as a polynomial of formal degree d >= deg f:
/// a vanishing leading coefficient contributes lc^2 once, and 0 beyond that.
template <class T>
T formal_discriminant(const Polynomial<T>& f, int d) {
    const int deg = f.degree();
    if (d == deg) return discriminant(f);
    if (d == deg + 1) return T(f.leading() * f.leading() * discriminant(f));
    return T(0);
}

/// Degree in gamma of a condition polynomial at generic (a, b).
inline int generic_degree(ConditionId id) {
    return std::max(condition_polynomial(id, Rational(1), Rational(17, 13)).degree(),
                    condition_polynomial(id, Rational(5, 7), Rational(3)).degree());
}

/// Closed forms of the discriminants as stated with the condition polynomials.
inline Rational stated_discriminant(ConditionId id, const Rational& a, const Rational& b) {
    using detail::pw;
    const Rational s = a + b, ab = a * b;
    const Rational two(2);
    switch (id) {
        case ConditionId::G2: return pw(two, 4) * (a * a + ab + b * b) * ab * ab;
        case ConditionId::G3: return pw(two, 6) * pw(ab, 8) * s * s;
        case ConditionId::G6:
            return Rational(-5) * pw(two, 44) *
                   (27 * pw(a, 6) + 81 * pw(a, 5) * b + 322 * pw(a, 4) * pw(b, 2) + 509 * pw(a, 3) * pw(b, 3) +
                    322 * pw(a, 2) * pw(b, 4) + 81 * a * pw(b, 5) + 27 * pw(b, 6)) *
                   pw(s, 8) * pw(ab, 38);
        case ConditionId::G8: return -pw(two, 88) * (a * a + ab + b * b) * pw(s, 18) * pw(ab, 74);
        case ConditionId::G12: {
            const long c[13] = {84375,    506250,   4266243, 16690590, 34989622, 45383698, 46564971,
                                45383698, 34989622, 16690590, 4266243, 506250,   84375};
            Rational p(0);
            for (int k = 0; k <= 12; ++k) p += Rational(c[k]) * pw(a, 12 - k) * pw(b, k);
            return -pw(two, 184) * Rational(49) * pw(s, 40) * pw(ab, 172) * p;
        }
        case ConditionId::G15: {
            // coefficients of a^{26-k} b^k
            const long c[27] = {8,        200,      2427,     19048,    108652,   479688,  1703702,
                                4993208,  12286692, 25688608, 46007797, 70961808, 94556312, 108998288,
                                108671412, 93545968, 69297712, 43955208, 23703317, 10761608, 4059132,
                                1248808,  305302,   57048,    7652,     656,      27};
            Rational p1(0), p2(0);
            for (int k = 0; k <= 26; ++k) {
                p1 += Rational(c[k]) * pw(a, 26 - k) * pw(b, k);
                p2 += Rational(c[k]) * pw(b, 26 - k) * pw(a, k);
            }
            return -pw(two, 246) * pw(ab, 278) * (27 * a * a + 46 * ab + 27 * b * b) * pw(s, 8) * pw(s, 5) *
                   pw(s, 7) * p1 * p2;
        }
        case ConditionId::G1e: return Rational(16) * pw(a, 3) * pw(b, 2) * s;
        case ConditionId::G2e: return Rational(16) * pw(b, 3) * pw(a, 2) * s;
        case ConditionId::G3e:
            return -pw(two, 16) * pw(a, 16) * pw(b, 14) * (8 * a * a + 8 * ab + 27 * b * b) * pw(s, 4);
        case ConditionId::G4e:
            return -pw(two, 16) * pw(a, 14) * pw(b, 16) * (27 * a * a + 8 * ab + 8 * b * b) * pw(s, 4);
        case ConditionId::G5e:
            return pw(two, 12) *
                   (32 * pw(a, 6) - 491 * pw(a, 5) * b - 439 * pw(a, 4) * pw(b, 2) + 194 * pw(a, 3) * pw(b, 3) -
                    62 * pw(a, 2) * pw(b, 4) - 39 * a * pw(b, 5) + 5 * pw(b, 6)) *
                   pw(s, 3) * pw(b, 15) * pw(a, 12);
        default: break;
    }
    throw DomainError("no stated discriminant for " + to_string(id));
}

/// Factored discriminant of G5e as computed here; differs from the stated form.
inline Rational computed_g5e_discriminant(const Rational& a, const Rational& b) {
    using detail::pw;
    return -pw(Rational(2), 16) * pw(a, 16) * pw(b, 16) * pw(Rational(a + b), 2) *
           (27 * a * a + 46 * a * b + 27 * b * b);
}

inline const std::vector<ConditionId>& discriminant_identity_ids() {
    static const std::vector<ConditionId> ids{ConditionId::G2,  ConditionId::G3,  ConditionId::G6,  ConditionId::G8,
                                              ConditionId::G12, ConditionId::G15, ConditionId::G1e, ConditionId::G2e,
                                              ConditionId::G3e, ConditionId::G4e, ConditionId::G5e};
    return ids;
}

/// disc_gamma(condition) - stated closed form, exactly.
inline Rational discriminant_identity_check(ConditionId id, const Rational& a, const Rational& b) {
    if (sgn(a) <= 0 || sgn(b) <= 0) throw DomainError("discriminant identities need positive a, b");
    return formal_discriminant(condition_polynomial(id, a, b), generic_degree(id)) - stated_discriminant(id, a, b);
}

} // namespace pellipse
