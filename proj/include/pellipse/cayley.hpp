#pragma once

// Taylor series of sqrt(eps (a-x)(b+x)(gamma-x)) and its divided variants,
// Hankel determinant ladders for periodic and elliptic-periodic caustics.
//
// Series are kept in scaled form F_k = B_k / B_0 (rational in a, b, gamma);
// the irrational prefactor B_0 = sqrt(eps a b gamma) is carried separately
// and cancels from every zero test.

#include "dynamics.hpp"
#include "geometry.hpp"
#include "linalg.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace pellipse {

enum class Variant { B, C, D, E };

inline std::string to_string(Variant v) {
    switch (v) {
        case Variant::B: return "B";
        case Variant::C: return "C";
        case Variant::D: return "D";
        case Variant::E: return "E";
    }
    return "?";
}

enum class Divisor { GammaMinusX, AMinusX, BPlusX };

template <class T>
struct TruncatedSeries {
    Variant variant = Variant::B;
    int order = 0;
    std::vector<T> coeffs;      // scaled coefficients, coeffs[0] == 1
    std::vector<double> scale;  // magnitude bound per coefficient, for floating zero tests
    double prefactor = 0;       // actual coefficient k is prefactor * coeffs[k]
    T a{1}, b{1}, gamma{1};

    double value(int k) const { return prefactor * to_double(coeffs.at(static_cast<std::size_t>(k))); }
};

template <class T>
void check_nondegenerate(const BoundaryEllipse<T>& E, const T& gamma) {
    if (sign_of(gamma) == 0 || gamma == E.a || gamma == T(-E.b))
        throw DomainError("degenerate caustic parameter (0, a or -b)");
}

/// Series of sqrt(eps (a-x)(b+x)(gamma-x)), eps = sign gamma, through x^order.
/// Scaled recurrence on F = sqrt(1 + u1 x + u2 x^2 + u3 x^3),
/// 1 + u(x) = (1 - x/a)(1 + x/b)(1 - x/gamma).
template <class T>
TruncatedSeries<T> cubic_sqrt_series(const BoundaryEllipse<T>& E, const T& gamma, int order) {
    check_nondegenerate(E, gamma);
    if (order < 0) throw DomainError("negative series order");
    const T ia = T(1) / E.a, ib = T(1) / E.b, ig = T(1) / gamma;
    std::vector<T> u(4, T(0));
    u[1] = -ia + ib - ig;
    u[2] = -ia * ib + ia * ig - ib * ig;
    u[3] = ia * ib * ig;
    std::vector<double> uabs(4, 0.0);
    uabs[1] = to_double(abs_of(ia)) + to_double(abs_of(ib)) + to_double(abs_of(ig));
    uabs[2] = to_double(abs_of(ia * ib)) + to_double(abs_of(ia * ig)) + to_double(abs_of(ib * ig));
    uabs[3] = to_double(abs_of(ia * ib * ig));

    TruncatedSeries<T> s;
    s.variant = Variant::B;
    s.order = order;
    s.a = E.a;
    s.b = E.b;
    s.gamma = gamma;
    s.coeffs.assign(static_cast<std::size_t>(order) + 1, T(0));
    s.scale.assign(static_cast<std::size_t>(order) + 1, 0.0);
    s.coeffs[0] = T(1);
    s.scale[0] = 1.0;
    for (int k = 1; k <= order; ++k) {
        T acc = k <= 3 ? u[static_cast<std::size_t>(k)] : T(0);
        double mag = k <= 3 ? uabs[static_cast<std::size_t>(k)] : 0.0;
        for (int j = 1; j < k; ++j) {
            acc -= s.coeffs[static_cast<std::size_t>(j)] * s.coeffs[static_cast<std::size_t>(k - j)];
            mag += s.scale[static_cast<std::size_t>(j)] * s.scale[static_cast<std::size_t>(k - j)];
        }
        s.coeffs[static_cast<std::size_t>(k)] = acc / T(2);
        s.scale[static_cast<std::size_t>(k)] = mag / 2;
    }
    const double eps = sign_of(gamma);
    s.prefactor = std::sqrt(eps * to_double(E.a) * to_double(E.b) * to_double(gamma));
    return s;
}

/// Long division of a B-series by gamma - x (C), a - x (D) or b + x (E).
template <class T>
TruncatedSeries<T> divided_series(const TruncatedSeries<T>& B, Divisor divisor) {
    if (B.variant != Variant::B) throw DomainError("divided_series expects a B-series");
    T c0(1); // divisor = c0 (1 - x / r) with r its root
    T r(1);
    TruncatedSeries<T> out = B;
    switch (divisor) {
        case Divisor::GammaMinusX:
            c0 = B.gamma;
            r = B.gamma;
            out.variant = Variant::C;
            break;
        case Divisor::AMinusX:
            c0 = B.a;
            r = B.a;
            out.variant = Variant::D;
            break;
        case Divisor::BPlusX:
            c0 = B.b;
            r = T(-B.b);
            out.variant = Variant::E;
            break;
    }
    if (sign_of(c0) == 0) throw DomainError("divisor has zero constant term");
    // (sum F_k x^k) / (1 - x/r): G_k = F_k + G_{k-1} / r
    const T ir = T(1) / r;
    const double air = std::fabs(to_double(ir));
    for (int k = 1; k <= B.order; ++k) {
        out.coeffs[static_cast<std::size_t>(k)] =
            B.coeffs[static_cast<std::size_t>(k)] + out.coeffs[static_cast<std::size_t>(k - 1)] * ir;
        out.scale[static_cast<std::size_t>(k)] =
            B.scale[static_cast<std::size_t>(k)] + out.scale[static_cast<std::size_t>(k - 1)] * air;
    }
    out.prefactor = B.prefactor / to_double(c0);
    return out;
}

template <class T>
TruncatedSeries<T> series_variant(const BoundaryEllipse<T>& E, const T& gamma, Variant v, int order) {
    TruncatedSeries<T> B = cubic_sqrt_series(E, gamma, order);
    switch (v) {
        case Variant::B: return B;
        case Variant::C: return divided_series(B, Divisor::GammaMinusX);
        case Variant::D: return divided_series(B, Divisor::AMinusX);
        case Variant::E: return divided_series(B, Divisor::BPlusX);
    }
    return B;
}

/// Hankel matrix with rows k = dp+1 .. dp+dq+1 and columns j = 0 .. dq,
/// entry F_{k-j}: the conditions for a degree-dq multiplier q with
/// q(x) F(x) agreeing with a degree-dp polynomial through x^{dp+dq+1}.
template <class T>
Matrix<T> hankel_matrix(const TruncatedSeries<T>& S, int dp, int dq) {
    if (dp < 0 || dq < 0) throw DomainError("negative Hankel degrees");
    if (S.order < dp + dq + 1) throw DomainError("series order too small for the Hankel test");
    Matrix<T> m(static_cast<std::size_t>(dq) + 1, std::vector<T>(static_cast<std::size_t>(dq) + 1, T(0)));
    for (int i = 0; i <= dq; ++i)
        for (int j = 0; j <= dq; ++j) {
            int k = dp + 1 + i - j;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                k >= 0 ? S.coeffs[static_cast<std::size_t>(k)] : T(0);
        }
    return m;
}

template <class T>
Matrix<double> hankel_scale_matrix(const TruncatedSeries<T>& S, int dp, int dq) {
    Matrix<double> m(static_cast<std::size_t>(dq) + 1, std::vector<double>(static_cast<std::size_t>(dq) + 1, 0.0));
    for (int i = 0; i <= dq; ++i)
        for (int j = 0; j <= dq; ++j) {
            int k = dp + 1 + i - j;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                k >= 0 ? S.scale[static_cast<std::size_t>(k)] : 0.0;
        }
    return m;
}

struct HankelLayout {
    Variant variant;
    int dp;
    int dq;
};

/// Periodic ladder: n = 2m over B with (m, m-2); n = 2m+1 over C with (m, m-1).
inline HankelLayout periodic_layout(int n) {
    if (n < 3) throw DomainError("periodic Hankel ladder starts at n = 3");
    const int m = n / 2;
    if (n % 2 == 0) return {Variant::B, m, m - 2};
    return {Variant::C, m, m - 1};
}

/// Hankel determinant value (scaled) for the given layout.
template <class T>
T hankel_det(const TruncatedSeries<T>& S, int dp, int dq) {
    return determinant(hankel_matrix(S, dp, dq));
}

/// Scale-aware zero decision: exact for rationals; for doubles
/// |det| <= tol * product of row norms of the coefficient magnitude bounds.
template <class T>
bool hankel_vanishes(const TruncatedSeries<T>& S, int dp, int dq, double tol = 1e-9) {
    T det = hankel_det(S, dp, dq);
    if constexpr (is_exact_v<T>) {
        (void)tol;
        return sign_of(det) == 0;
    } else {
        return magnitude(det) <= tol * row_norm_product(hankel_scale_matrix(S, dp, dq));
    }
}

/// Periodic Hankel determinant: B-ladder for even n, C-ladder for odd n.
template <class T>
T hankel_test(const TruncatedSeries<T>& S, int n) {
    HankelLayout L = periodic_layout(n);
    if (S.variant != L.variant)
        throw DomainError(std::string("n = ") + std::to_string(n) + " needs the " + to_string(L.variant) + "-series");
    return hankel_det(S, L.dp, L.dq);
}

inline int default_order(int n) { return 2 * n + 2; }

template <class T>
struct PeriodicityVerdict {
    bool periodic = false;
    T determinant_value{0};
    Variant variant_used = Variant::B;
    int n = 0;
    std::string reason;
};

template <class T>
PeriodicityVerdict<T> is_periodic(const BoundaryEllipse<T>& E, const T& gamma, int n, double tol = 1e-9) {
    check_nondegenerate(E, gamma);
    HankelLayout L = periodic_layout(n);
    PeriodicityVerdict<T> v;
    v.n = n;
    v.variant_used = L.variant;
    TruncatedSeries<T> S = series_variant(E, gamma, L.variant, default_order(n));
    v.determinant_value = hankel_det(S, L.dp, L.dq);
    const bool zero = hankel_vanishes(S, L.dp, L.dq, tol);
    if (n % 2 == 1 && classify_conic(gamma, E) != ConicClass::EllipseOfFamily) {
        v.periodic = false;
        v.reason = "odd period requires an ellipse caustic";
        return v;
    }
    v.periodic = zero;
    v.reason = zero ? "Hankel determinant vanishes" : "Hankel determinant nonzero";
    return v;
}

/// Case ladders for elliptic periodicity without periodicity.
struct EllipticCaseLayout {
    char case_id;
    HankelLayout layout;
};

/// Candidate cases for (gamma, n); empty when the parameter range admits none.
template <class T>
std::vector<EllipticCaseLayout> elliptic_case_layouts(const BoundaryEllipse<T>& E, const T& gamma, int n) {
    if (n < 2) throw DomainError("elliptic ladder starts at n = 2");
    std::vector<EllipticCaseLayout> out;
    const int m = n / 2;
    const bool even = n % 2 == 0;
    ConicClass cls = classify_conic(gamma, E);
    if (cls == ConicClass::EllipseOfFamily) {
        if (sign_of(gamma) > 0)
            out.push_back({'a', even ? HankelLayout{Variant::D, m - 1, m - 1} : HankelLayout{Variant::E, m, m - 1}});
        else
            out.push_back({'b', even ? HankelLayout{Variant::E, m - 1, m - 1} : HankelLayout{Variant::D, m, m - 1}});
    } else if (is_hyperbola(cls)) {
        if (even) {
            out.push_back({'c', HankelLayout{Variant::C, m - 1, m - 1}});
        } else {
            out.push_back({'d', HankelLayout{Variant::D, m, m - 1}});
            out.push_back({'e', HankelLayout{Variant::E, m, m - 1}});
        }
    }
    return out;
}

/// Axis symmetry carrying vertex 0 to vertex n in each case.
inline Sigma case_symmetry(char case_id) {
    switch (case_id) {
        case 'a':
        case 'e': return Sigma::FlipY;
        case 'b':
        case 'd': return Sigma::FlipX;
        case 'c': return Sigma::FlipBoth;
    }
    return Sigma::Identity;
}

template <class T>
struct EllipticVerdict {
    char case_id = 0; // 'a'..'e', or 0 for none
    T determinant_value{0};
    HankelLayout layout{Variant::B, 0, 0};
    std::string reason;

    bool found() const { return case_id != 0; }
};

/// First satisfied case ladder, or none. A fully n-periodic caustic is
/// reported as none.
template <class T>
EllipticVerdict<T> elliptic_case_test(const BoundaryEllipse<T>& E, const T& gamma, int n, double tol = 1e-9) {
    check_nondegenerate(E, gamma);
    EllipticVerdict<T> v;
    auto cases = elliptic_case_layouts(E, gamma, n);
    if (cases.empty()) {
        v.reason = "no case admits this parameter range";
        return v;
    }
    if (n >= 3 && is_periodic(E, gamma, n, tol).periodic) {
        v.reason = "caustic is n-periodic";
        return v;
    }
    const int order = default_order(n);
    bool first = true;
    for (const auto& c : cases) {
        TruncatedSeries<T> S = series_variant(E, gamma, c.layout.variant, order);
        T det = hankel_det(S, c.layout.dp, c.layout.dq);
        if (first) {
            v.determinant_value = det;
            v.layout = c.layout;
            first = false;
        }
        if (hankel_vanishes(S, c.layout.dp, c.layout.dq, tol)) {
            v.case_id = c.case_id;
            v.determinant_value = det;
            v.layout = c.layout;
            v.reason = "Hankel determinant vanishes";
            return v;
        }
    }
    v.reason = "no case determinant vanishes";
    return v;
}

} // namespace pellipse
