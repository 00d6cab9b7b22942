#pragma once

// Polynomial Pell equations for periodic and elliptic-periodic caustics,
// generalized Chebyshev certificates on two intervals (equioscillation,
// signature, partition), the interval integral ratio, the n = 3 Zolotarev
// chain, quartic Akhiezer compositions and light-like Chebyshev closure.

#include "cayley.hpp"
#include "caustics.hpp"
#include "jacobi.hpp"
#include "polynomial.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "surd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace pellipse {

// ---------------------------------------------------------------- Pell pairs

/// A P^2 - Bq Q^2 = c in the variable s = 1/x.
template <class T>
struct PellPair {
    int n = 0;
    HankelLayout layout{Variant::B, 0, 0};
    char case_id = 0; // 0 for the periodic identity
    Polynomial<T> P, Q, A, Bq;
    T c{0};
    double residual = 0; // max |coefficient| of A P^2 - Bq Q^2 - c, over |c|
};

namespace detail {

// Factors (1 - x/a), (1 + x/b), (1 - x/gamma) split as ltilde and the rest.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> variant_factors(Variant v, const T& a, const T& b, const T& g) {
    const Polynomial<T> fa{T(1), T(T(-1) / a)}, fb{T(1), T(T(1) / b)}, fg{T(1), T(T(-1) / g)};
    const Polynomial<T> one = Polynomial<T>::constant(T(1));
    switch (v) {
        case Variant::B: return {one, fa * fb * fg};
        case Variant::C: return {fg, fa * fb};
        case Variant::D: return {fa, fb * fg};
        case Variant::E: return {fb, fa * fg};
    }
    return {one, one};
}

template <class T>
double pell_residual(const Polynomial<T>& lhs, const T& c) {
    Polynomial<T> r = lhs - Polynomial<T>::constant(c);
    const double cc = std::fabs(to_double(c));
    return r.max_abs_coeff() / (cc > 0 ? cc : 1.0);
}

template <class T>
PellPair<T> pell_from_layout(const BoundaryEllipse<T>& E, const T& gamma, const HankelLayout& L) {
    const int dp = L.dp, dq = L.dq;
    const int N = dp + dq + 2;
    TruncatedSeries<T> S = series_variant(E, gamma, L.variant, std::max(N + 1, default_order(1)));
    std::vector<T> q = null_vector(hankel_matrix(S, dp, dq));
    std::vector<T> p(static_cast<std::size_t>(dp) + 1, T(0));
    for (int k = 0; k <= dp; ++k)
        for (int j = 0; j <= dq && j <= k; ++j)
            p[static_cast<std::size_t>(k)] += q[static_cast<std::size_t>(j)] * S.coeffs[static_cast<std::size_t>(k - j)];
    auto [ell, rest] = variant_factors(L.variant, E.a, E.b, gamma);

    PellPair<T> out;
    out.layout = L;
    out.P = Polynomial<T>(p).reversed(dp);
    out.Q = Polynomial<T>(q).reversed(dq);
    out.A = ell.reversed(N - 2 * dp);
    out.Bq = rest.reversed(N - 2 * dq);
    out.c = out.A.coeff(0) * out.P.coeff(0) * out.P.coeff(0) - out.Bq.coeff(0) * out.Q.coeff(0) * out.Q.coeff(0);
    if (sign_of(out.c) == 0) throw NoCertificate("Pell constant vanishes");
    out.residual = pell_residual(out.A * out.P * out.P - out.Bq * out.Q * out.Q, out.c);
    return out;
}

} // namespace detail

/// Pell pair for an n-periodic caustic: even n = 2m gives P_m, Q_{m-2} with
/// P^2 - E4 Q^2 = c; odd n = 2m+1 gives P_m, Q_{m-1} with
/// (s - 1/gamma) P^2 - s(s-1/a)(s+1/b) Q^2 = c, sign c = -sign gamma.
template <class T>
PellPair<T> pell_construct(const BoundaryEllipse<T>& E, const T& gamma, int n, double tol = 1e-9) {
    if (!is_periodic(E, gamma, n, tol).periodic) throw NoCertificate("caustic is not n-periodic");
    PellPair<T> out = detail::pell_from_layout(E, gamma, periodic_layout(n));
    out.n = n;
    return out;
}

/// Case identity for an elliptic n-periodic caustic, e.g. even case (a):
/// s(s-1/a) P^2 - (s+1/b)(s-1/gamma) Q^2 = c.
template <class T>
PellPair<T> elliptic_pell_check(const BoundaryEllipse<T>& E, const T& gamma, int n, char case_id, double tol = 1e-9) {
    EllipticVerdict<T> v = elliptic_case_test(E, gamma, n, tol);
    if (v.case_id != case_id)
        throw DomainError(std::string("case mismatch: expected ") + case_id + ", found " +
                          (v.case_id ? std::string(1, v.case_id) : std::string("none")));
    PellPair<T> out = detail::pell_from_layout(E, gamma, v.layout);
    out.n = n;
    out.case_id = case_id;
    return out;
}

// ---------------------------------------------------------------- certificates

struct IntervalSystem {
    std::array<double, 4> c{}; // c1 < c2 < c3 < c4
};

inline IntervalSystem interval_system(double a, double b, double gamma) {
    IntervalSystem s;
    s.c = {0.0, 1 / a, -1 / b, 1 / gamma};
    std::sort(s.c.begin(), s.c.end());
    return s;
}

/// E4(s) = s (s - 1/a)(s + 1/b)(s - 1/gamma).
template <class T>
Polynomial<T> e4_polynomial(const T& a, const T& b, const T& g) {
    return Polynomial<T>{T(0), T(1)} * Polynomial<T>::linear_root(T(T(1) / a)) *
           Polynomial<T>::linear_root(T(T(-1) / b)) * Polynomial<T>::linear_root(T(T(1) / g));
}

template <class T>
struct PellCertificate {
    int n = 0;
    double gamma = 0;
    IntervalSystem intervals;
    Polynomial<T> p_hat, q_hat;
    double residual = 0;
    int tau1 = 0, tau2 = 0;           // internal extrema at level 1 in [c3,c4] and [c1,c2]
    int tau1_by_roots = 0, tau2_by_roots = 0; // zeros of q_hat in the same open intervals
    std::vector<double> alternation_points;
    int alternation_count = 0;
    bool alternates = false;   // strict sign alternation inside each interval
    bool bounded = false;      // |p_hat| <= 1 + eps on both intervals, = 1 at each c_i
    bool gap_exceeds = false;  // |p_hat| > 1 strictly between the intervals
    int n1 = -1;               // from a validation trajectory
    PellPair<T> pair;

    bool signature_matches_partition() const { return n1 >= 0 && tau2 == n1 - 1 && tau1 == n - n1 - 1; }
};

namespace detail {

template <class T>
std::vector<double> roots_inside(const Polynomial<T>& p, double lo, double hi) {
    std::vector<double> out;
    if (p.degree() < 1) return out;
    const double margin = 1e-10 * std::max({1.0, std::fabs(lo), std::fabs(hi)});
    std::vector<double> all;
    if constexpr (is_exact_v<T>)
        all = real_roots(p);
    else
        all = real_roots(p.to_double_poly());
    for (double r : all)
        if (r > lo + margin && r < hi - margin) out.push_back(r);
    return out;
}

template <class T>
double eval_at(const Polynomial<T>& p, double s) {
    return to_double(p(T(s)));
}

} // namespace detail

/// Lift a periodic Pell pair to p_hat^2 - E4 q_hat^2 = 1 with
/// p_hat = 2 A P^2 / |c| - sign c, q_hat = 2 P Q / |c|, then certify
/// equioscillation and the signature.
template <class T>
PellCertificate<T> pell_lift(const PellPair<T>& pair, const BoundaryEllipse<T>& E, const T& gamma,
                             double residual_tol = 1e-8) {
    if (pair.case_id != 0) throw DomainError("pell_lift expects a periodic pair");
    PellCertificate<T> cert;
    cert.n = pair.n;
    cert.pair = pair;
    cert.gamma = to_double(gamma);
    const T abs_c = abs_of(pair.c);
    const T two_over = T(2) / abs_c;
    cert.p_hat = two_over * (pair.A * pair.P * pair.P) - T(sign_of(pair.c));
    cert.q_hat = two_over * (pair.P * pair.Q);
    const Polynomial<T> e4 = e4_polynomial(E.a, E.b, gamma);
    Polynomial<T> r = cert.p_hat * cert.p_hat - e4 * cert.q_hat * cert.q_hat - T(1);
    cert.residual = r.max_abs_coeff();
    if constexpr (is_exact_v<T>) {
        if (!r.is_zero()) throw CertificateInvalid("Pell residual is not exactly zero");
    } else {
        if (!(cert.residual <= residual_tol)) throw CertificateInvalid("Pell residual above tolerance");
    }

    cert.intervals = interval_system(E.ad(), E.bd(), cert.gamma);
    const auto& c = cert.intervals.c;
    const Polynomial<T> dp = cert.p_hat.derivative();
    auto val = [&](double s) { return detail::eval_at(cert.p_hat, s); };
    auto at_level = [&](double s) { return std::fabs(std::fabs(val(s)) - 1) <= 1e-7; };
    auto extrema = [&](double lo, double hi) {
        std::vector<double> pts;
        for (double s : detail::roots_inside(dp, lo, hi))
            if (at_level(s) && (pts.empty() || s - pts.back() > 1e-7 * std::max(1.0, std::fabs(s)))) pts.push_back(s);
        return pts;
    };
    std::vector<double> first = extrema(c[0], c[1]), second = extrema(c[2], c[3]);
    cert.tau2 = static_cast<int>(first.size());
    cert.tau1 = static_cast<int>(second.size());
    cert.tau2_by_roots = static_cast<int>(detail::roots_inside(cert.q_hat, c[0], c[1]).size());
    cert.tau1_by_roots = static_cast<int>(detail::roots_inside(cert.q_hat, c[2], c[3]).size());

    bool endpoints = true;
    for (double ci : c) endpoints = endpoints && at_level(ci);
    auto alternating = [&](double lo, const std::vector<double>& mid, double hi) {
        std::vector<double> pts{lo};
        pts.insert(pts.end(), mid.begin(), mid.end());
        pts.push_back(hi);
        for (std::size_t i = 1; i < pts.size(); ++i)
            if ((val(pts[i]) > 0) == (val(pts[i - 1]) > 0)) return false;
        return true;
    };
    cert.alternates = endpoints && alternating(c[0], first, c[1]) && alternating(c[2], second, c[3]);
    cert.alternation_points.push_back(c[0]);
    cert.alternation_points.insert(cert.alternation_points.end(), first.begin(), first.end());
    cert.alternation_points.push_back(c[1]);
    cert.alternation_points.push_back(c[2]);
    cert.alternation_points.insert(cert.alternation_points.end(), second.begin(), second.end());
    cert.alternation_points.push_back(c[3]);
    cert.alternation_count = endpoints ? static_cast<int>(cert.alternation_points.size()) : 0;

    const int samples = 400;
    bool bounded = endpoints, gap = true;
    for (int i = 1; i < samples; ++i) {
        const double w = static_cast<double>(i) / samples;
        bounded = bounded && std::fabs(val(c[0] + w * (c[1] - c[0]))) <= 1 + 1e-7;
        bounded = bounded && std::fabs(val(c[2] + w * (c[3] - c[2]))) <= 1 + 1e-7;
        gap = gap && std::fabs(val(c[1] + w * (c[2] - c[1]))) > 1;
    }
    cert.bounded = bounded;
    cert.gap_exceeds = gap;

    if (auto v = validation_trajectory(E.to_floating(), cert.gamma, cert.n, ValidationOptions{})) {
        if (v->second.kind == ClosureStatus::Kind::Periodic) cert.n1 = partition_counts(v->first, cert.n, 1e-6).first;
    }
    return cert;
}

template <class T>
PellCertificate<T> certify(const BoundaryEllipse<T>& E, const T& gamma, int n) {
    return pell_lift(pell_construct(E, gamma, n), E, gamma);
}

/// Secant iteration on the periodic Hankel determinant in multiprecision,
/// starting from an approximate caustic parameter.
inline BigFloat polish_gamma(const BoundaryEllipse<BigFloat>& E, double gamma, int n, int max_iter = 80) {
    const HankelLayout L = periodic_layout(n);
    auto det = [&](const BigFloat& g) {
        return hankel_det(series_variant(E, g, L.variant, default_order(n)), L.dp, L.dq);
    };
    BigFloat g0(gamma), g1(gamma * (1 + 1e-7));
    BigFloat f0 = det(g0), f1 = det(g1);
    const BigFloat stop = BigFloat(std::fabs(gamma) + 1) * BigFloat("1e-85");
    for (int it = 0; it < max_iter; ++it) {
        if (sgn(f1) == 0) return g1;
        BigFloat den = f1 - f0;
        if (sgn(den) == 0) break;
        BigFloat g2 = g1 - f1 * (g1 - g0) / den;
        g0 = g1;
        f0 = f1;
        g1 = g2;
        const double gd = to_double(g1);
        if (!std::isfinite(gd) || gd == 0 || gd == to_double(E.a) || gd == -to_double(E.b))
            throw NoCertificate("secant left the admissible parameter range");
        f1 = det(g1);
        if (abs(g1 - g0) <= stop) return g1;
    }
    throw NoCertificate("caustic parameter did not converge to a Hankel root");
}

/// Floating certificate: gamma is refined to the nearest Hankel root (which
/// must lie within snap * max(1, |gamma|)), and the Pell pair is built in
/// multiprecision, since p_hat coefficients grow like (c4 - c1)^-n.
inline PellCertificate<BigFloat> certify_floating(double a, double b, double gamma, int n, double snap = 0) {
    BoundaryEllipse<BigFloat> E{BigFloat(a), BigFloat(b)};
    if (snap <= 0 && !is_periodic(BoundaryEllipse<double>(a, b), gamma, n).periodic)
        throw NoCertificate("caustic is not n-periodic");
    BigFloat g = polish_gamma(E, gamma, n);
    const double gd = to_double(g);
    if (std::fabs(gd - gamma) > std::max(snap, 1e-9) * std::max(1.0, std::fabs(gamma)))
        throw NoCertificate("no n-periodic caustic near the given parameter");
    return pell_lift(pell_construct(E, g, n), E, g);
}

// ---------------------------------------------------------------- integral ratio

struct KlnResult {
    IntervalSystem intervals;
    double I1 = 0; // over [c2, c3]
    double I2 = 0; // over [c4, inf)
    double ratio = 0;
    std::vector<std::pair<long, long>> convergents; // (num, den) of the ratio
};

/// Continued-fraction convergents of x with denominators up to max_den.
inline std::vector<std::pair<long, long>> convergents(double x, long max_den = 1000000) {
    std::vector<std::pair<long, long>> out;
    long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(x)), q1 = 1;
    out.push_back({p1, q1});
    double frac = x - std::floor(x);
    for (int it = 0; it < 40 && frac > 1e-15; ++it) {
        double inv = 1 / frac;
        long ai = static_cast<long>(std::floor(inv));
        frac = inv - ai;
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        out.push_back({p2, q2});
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return out;
}

/// A convergent with denominator <= max_den within tol of x, if any.
inline std::optional<std::pair<long, long>> small_convergent(double x, long max_den, double tol) {
    for (auto [p, q] : convergents(x, max_den))
        if (std::fabs(x - static_cast<double>(p) / static_cast<double>(q)) <= tol) return std::make_pair(p, q);
    return std::nullopt;
}

/// I1 = int_{c2}^{c3} ds / sqrt|prod (s - c_i)| and I2 = int_{c4}^{inf} (same).
/// I1 uses s = mid + half sin(theta); I2 uses s = c4 + t^2, t = L tan(phi).
inline KlnResult kln_partition(double a, double b, double gamma) {
    if (!(a > 0) || !(b > 0)) throw DomainError("ellipse parameters must be positive");
    if (gamma == 0 || gamma == a || gamma == -b) throw DomainError("degenerate caustic parameter (0, a or -b)");
    KlnResult r;
    r.intervals = interval_system(a, b, gamma);
    const auto c = r.intervals.c;
    const double mid = 0.5 * (c[1] + c[2]), half = 0.5 * (c[2] - c[1]);
    auto f1 = [&](double th) {
        double s = mid + half * std::sin(th);
        return 1 / std::sqrt(std::fabs((s - c[0]) * (s - c[3])));
    };
    const double L = std::sqrt(c[3] - c[0]);
    auto f2 = [&](double ph) {
        double t = L * std::tan(ph);
        double s = c[3] + t * t;
        double sec = 1 / std::cos(ph);
        return 2 * L * sec * sec / std::sqrt(std::fabs((s - c[0]) * (s - c[1]) * (s - c[2])));
    };
    r.I1 = integrate(f1, -M_PI / 2, M_PI / 2).value;
    r.I2 = integrate(f2, 0, M_PI / 2).value;
    r.ratio = r.I2 / r.I1;
    r.convergents = convergents(r.ratio);
    return r;
}

template <class T>
KlnResult kln_partition(const BoundaryEllipse<T>& E, const T& gamma) {
    return kln_partition(E.ad(), E.bd(), to_double(gamma));
}

// ---------------------------------------------------------------- Zolotarev n = 3

struct Zolotarev3Report {
    double t = 0, Y = 0, kappa2 = 0, alpha = 0, beta = 0;
    double gamma_chain = 0; // 2b / (beta - 1)
    double gamma1 = 0;      // larger root of the 3-periodic condition
    double alpha_residual = 0, sn_residual = 0, gamma_residual = 0;
    bool alpha_exact = false; // alpha == 2t + 1 in Q(sqrt(1 + t + t^2))
    bool gamma_exact = false; // 2b/(beta - 1) == gamma1 in the same field
    double max_residual() const { return std::max({alpha_residual, sn_residual, gamma_residual}); }
};

/// Y = (-1 + sqrt(1+t+t^2))/t, kappa^2 = (2Y-1)/(Y^3(2-Y)),
/// alpha = (Y^2-4Y+1)/(Y^2-1), beta = (1+Y^2)/(1-Y^2), t = b/a.
inline Zolotarev3Report zolotarev3_consistency(const Rational& a, const Rational& b) {
    if (sgn(a) <= 0 || sgn(b) <= 0) throw DomainError("ellipse parameters must be positive");
    const Rational t = b / a;
    const Rational D = 1 + t + t * t;
    const Surd Y(Rational(-1 / t), Rational(1 / t), D);
    const Surd one = Surd::rational(1, D);
    const Surd Y2 = Y * Y;
    const Surd alpha = (Y2 - Rational(4) * Y + one) / (Y2 - one);
    const Surd beta = (one + Y2) / (one - Y2);
    const Surd kappa2 = (Rational(2) * Y - one) / (Y2 * Y * (Rational(2) + (-Y)));
    const Surd gamma_chain = Surd::rational(2 * b, D) / (beta - one);
    const Rational k = a * b / ((a + b) * (a + b));
    const Surd gamma1(k * (a - b), 2 * k * a, D); // sqrt(a^2+ab+b^2) = a sqrt(D)

    Zolotarev3Report r;
    r.t = t.get_d();
    r.Y = Y.to_double();
    r.kappa2 = kappa2.to_double();
    if (!(r.Y > 0 && r.Y < 1)) throw DomainError("Y outside (0, 1)");
    if (!(r.kappa2 > 0 && r.kappa2 < 1)) throw DomainError("kappa^2 outside (0, 1)");
    r.alpha = alpha.to_double();
    r.beta = beta.to_double();
    r.gamma_chain = gamma_chain.to_double();
    r.gamma1 = gamma1.to_double();
    r.alpha_exact = (alpha - Rational(2 * t + 1)).is_zero();
    r.gamma_exact = (gamma_chain - gamma1).is_zero();

    // floating chain, independent of the exact field arithmetic
    const double td = r.t;
    const double Yd = (-1 + std::sqrt(1 + td + td * td)) / td;
    const double k2 = (2 * Yd - 1) / (Yd * Yd * Yd * (2 - Yd));
    const double al = (Yd * Yd - 4 * Yd + 1) / (Yd * Yd - 1);
    const double be = (1 + Yd * Yd) / (1 - Yd * Yd);
    const double ad = a.get_d(), bd = b.get_d();
    const double g1 = ad * bd / ((ad + bd) * (ad + bd)) * (ad - bd + 2 * std::sqrt(ad * ad + ad * bd + bd * bd));
    const double kap = std::sqrt(k2);
    r.alpha_residual = std::fabs(al - (2 * td + 1));
    r.gamma_residual = std::fabs(2 * bd / (be - 1) - g1) / std::max(1.0, std::fabs(g1));
    r.sn_residual = std::fabs(jacobi_elliptic(complete_K(kap) / 3, kap).sn - Yd);
    return r;
}

inline Zolotarev3Report zolotarev3_consistency(double a, double b) {
    return zolotarev3_consistency(Rational(a), Rational(b));
}

// ---------------------------------------------------------------- Akhiezer quartics

enum class AkhiezerRegime { T2, T3, T4, T5 };

inline std::string to_string(AkhiezerRegime r) {
    switch (r) {
        case AkhiezerRegime::T2: return "t2";
        case AkhiezerRegime::T3: return "t3";
        case AkhiezerRegime::T4: return "t4";
        case AkhiezerRegime::T5: return "t5";
    }
    return "?";
}

template <class T>
struct AkhiezerReport {
    AkhiezerRegime regime;
    T gamma{0};
    T alpha{0};                       // symmetric-interval parameter
    Polynomial<T> affine;             // x(s)
    Polynomial<T> composition;        // T2((2 x^2 - 1 - alpha^2)/(1 - alpha^2))
    Polynomial<T> stated;             // closed form as written
    Polynomial<T> p_hat4;             // from the Pell certificate
    double composition_residual = 0;  // constant-ratio residual vs p_hat4
    double stated_residual = 0;
    std::string matching;             // "composition", "stated", "both" or "none"
};

/// max |p - r q| / max |p| for the best constant r taken at the largest |q|.
template <class T>
double constant_ratio_residual(const Polynomial<T>& p, const Polynomial<T>& q) {
    if (p.is_zero() || q.is_zero() || p.degree() != q.degree()) return INFINITY;
    int i = 0;
    for (int k = 0; k <= q.degree(); ++k)
        if (std::fabs(to_double(q.coeff(k))) > std::fabs(to_double(q.coeff(i)))) i = k;
    const T r = p.coeff(i) / q.coeff(i);
    return (p - r * q).max_abs_coeff() / p.max_abs_coeff();
}

/// Regime parameters: t2 (a > b) and t3 (a < b) at gamma = ab/(b-a),
/// t4 at gamma = -ab/(a+b), t5 at gamma = ab/(a+b).
template <class T>
AkhiezerReport<T> akhiezer_p4(const BoundaryEllipse<T>& E, AkhiezerRegime regime) {
    const T a = E.a, b = E.b, s = a + b, ab = a * b;
    AkhiezerReport<T> r;
    r.regime = regime;
    Polynomial<T> inner; // argument of T2 as printed
    switch (regime) {
        case AkhiezerRegime::T2:
        case AkhiezerRegime::T3:
            if (regime == AkhiezerRegime::T2 && !(a > b)) throw DomainError("regime t2 needs a > b");
            if (regime == AkhiezerRegime::T3 && !(a < b)) throw DomainError("regime t3 needs a < b");
            r.gamma = ab / (b - a);
            r.alpha = regime == AkhiezerRegime::T2 ? T((a - b) / s) : T((b - a) / s);
            r.affine = Polynomial<T>{T((a - b) / s), T(2 * ab / s)};
            inner = Polynomial<T>{T(1), T(2 * (a - b)), T(2 * ab)};
            break;
        case AkhiezerRegime::T4:
            r.gamma = -ab / s;
            r.alpha = a / (a + 2 * b);
            r.affine = Polynomial<T>{T(a / (a + 2 * b)), T(2 * ab / (a + 2 * b))};
            inner = Polynomial<T>{T(-1), T(2 * a * a / s), T(2 * a * a * b / s)};
            break;
        case AkhiezerRegime::T5:
            r.gamma = ab / s;
            r.alpha = b / (b + 2 * a);
            r.affine = Polynomial<T>{T(b / (b + 2 * a)), T(-2 * ab / (b + 2 * a))};
            inner = Polynomial<T>{T(-1), T(-2 * b * b / s), T(2 * a * b * b / s)};
            break;
    }
    const Polynomial<T> t2 = chebyshev<T>(2);
    const T one_m = T(1) - r.alpha * r.alpha;
    const Polynomial<T> sym = (T(1) / one_m) * (T(2) * (r.affine * r.affine) - (T(1) + r.alpha * r.alpha));
    r.composition = t2.compose(sym);
    r.stated = t2.compose(inner);
    r.p_hat4 = certify(E, r.gamma, 4).p_hat;
    r.composition_residual = constant_ratio_residual(r.p_hat4, r.composition);
    r.stated_residual = constant_ratio_residual(r.p_hat4, r.stated);
    const bool c_ok = r.composition_residual <= 1e-9, s_ok = r.stated_residual <= 1e-9;
    r.matching = c_ok && s_ok ? "both" : c_ok ? "composition" : s_ok ? "stated" : "none";
    return r;
}

// ---------------------------------------------------------------- light-like

struct LightlikeClosure {
    int n;
    int k;
};

/// Smallest even n <= max_n with arccot sqrt(a/b) = k pi / n, gcd(k, n/2) = 1.
inline std::optional<LightlikeClosure> lightlike_periodic(double a, double b, int max_n, double eps = 1e-9) {
    if (!(a > 0) || !(b > 0)) throw DomainError("ellipse parameters must be positive");
    if (max_n < 4) throw DomainError("max_n must be at least 4");
    const double theta = std::atan(std::sqrt(b / a));
    for (int n = 4; n <= max_n; n += 2)
        for (int k = 1; 2 * k < n; ++k) {
            if (std::gcd(k, n / 2) != 1) continue;
            if (std::fabs(theta - k * M_PI / n) <= eps) return LightlikeClosure{n, k};
        }
    return std::nullopt;
}

template <class T>
std::optional<LightlikeClosure> lightlike_periodic(const BoundaryEllipse<T>& E, int max_n, double eps = 1e-9) {
    return lightlike_periodic(E.ad(), E.bd(), max_n, eps);
}

/// Light-like trajectory from the boundary point at angle t0, direction
/// parallel to (1, 1) and pointing inward.
inline Trajectory<double> lightlike_trajectory(const BoundaryEllipse<double>& E, int steps, double t0 = 0.37) {
    MVec2<double> P = boundary_point(E, t0);
    MVec2<double> d{1, 1};
    if (d.x * P.x / E.a + d.y * P.y / E.b > 0) d = {-1, -1};
    return simulate(P, d, steps, E, Tolerance{});
}

struct LightlikePellReport {
    Polynomial<double> p_hat; // T_m((2abs + a - b)/(a + b))
    Polynomial<double> q_hat; // p_hat^2 - 1 = (s - 1/a)(s + 1/b) q_hat^2
    double residual = 0;
    double q_at_zero = 0;
};

inline LightlikePellReport lightlike_pell_check(double a, double b, int m) {
    if (!(a > 0) || !(b > 0)) throw DomainError("ellipse parameters must be positive");
    if (m < 1) throw DomainError("m must be positive");
    LightlikePellReport r;
    const Polynomial<double> h{(a - b) / (a + b), 2 * a * b / (a + b)};
    r.p_hat = chebyshev<double>(m).compose(h);
    const Polynomial<double> den = Polynomial<double>::linear_root(1 / a) * Polynomial<double>::linear_root(-1 / b);
    auto [quot, rem] = divmod(r.p_hat * r.p_hat - 1.0, den);
    const double scale = std::max(1.0, r.p_hat.max_abs_coeff() * r.p_hat.max_abs_coeff());
    if (rem.max_abs_coeff() > 1e-9 * scale) throw CertificateInvalid("p_hat^2 - 1 not divisible by (s-1/a)(s+1/b)");
    auto root = poly_sqrt(quot, 1e-9);
    if (!root) throw CertificateInvalid("quotient is not a square");
    r.q_hat = *root;
    r.residual = (r.p_hat * r.p_hat - den * r.q_hat * r.q_hat - 1.0).max_abs_coeff();
    r.q_at_zero = std::fabs(r.q_hat(0.0));
    return r;
}

template <class T>
LightlikePellReport lightlike_pell_check(const BoundaryEllipse<T>& E, int m) {
    return lightlike_pell_check(E.ad(), E.bd(), m);
}

} // namespace pellipse
