#pragma once

// Minkowski-plane primitives for the confocal family of the ellipse
// x^2/a + y^2/b = 1: scalar product, vector and conic classification,
// elliptic coordinates, tangency and boundary arc classes.

#include "scalar.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace pellipse {

template <class T>
struct MVec2 {
    T x{0};
    T y{0};

    friend MVec2 operator+(const MVec2& u, const MVec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend MVec2 operator-(const MVec2& u, const MVec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend MVec2 operator*(const T& s, const MVec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const MVec2& u, const MVec2& v) { return u.x == v.x && u.y == v.y; }
};

template <class T>
MVec2<double> to_double(const MVec2<T>& v) {
    return {to_double(v.x), to_double(v.y)};
}

template <class T>
struct BoundaryEllipse {
    T a;
    T b;

    BoundaryEllipse(T a_, T b_) : a(std::move(a_)), b(std::move(b_)) {
        if (sign_of(a) <= 0 || sign_of(b) <= 0) throw DomainError("ellipse parameters must be positive");
        if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("ellipse parameters must be finite");
        }
    }
    double ad() const { return to_double(a); }
    double bd() const { return to_double(b); }
    BoundaryEllipse<double> to_floating() const { return {ad(), bd()}; }
};

/// A confocal parameter that may also be the line at infinity, or the
/// marker for lines tangent to every conic of the family.
template <class T>
struct ExtReal {
    enum class Kind { Finite, Infinity, AllConics };
    Kind kind = Kind::Finite;
    T value{0};

    static ExtReal finite(T v) { return {Kind::Finite, std::move(v)}; }
    static ExtReal infinity() { return {Kind::Infinity, T(0)}; }
    static ExtReal all_conics() { return {Kind::AllConics, T(0)}; }
    bool is_finite() const { return kind == Kind::Finite; }
};

enum class VectorType { SpaceLike, TimeLike, LightLike };
enum class ConicClass {
    EllipseOfFamily,
    HyperbolaXMajor,
    HyperbolaYMajor,
    DegenerateYAxis,
    DegenerateXAxis,
    DegenerateInfinity
};
enum class ArcClass { RelativisticEllipseArc, RelativisticHyperbolaArc, TouchPoint };

inline std::string to_string(VectorType t) {
    switch (t) {
        case VectorType::SpaceLike: return "SpaceLike";
        case VectorType::TimeLike: return "TimeLike";
        case VectorType::LightLike: return "LightLike";
    }
    return "?";
}
inline std::string to_string(ConicClass c) {
    switch (c) {
        case ConicClass::EllipseOfFamily: return "EllipseOfFamily";
        case ConicClass::HyperbolaXMajor: return "HyperbolaXMajor";
        case ConicClass::HyperbolaYMajor: return "HyperbolaYMajor";
        case ConicClass::DegenerateYAxis: return "DegenerateYAxis";
        case ConicClass::DegenerateXAxis: return "DegenerateXAxis";
        case ConicClass::DegenerateInfinity: return "DegenerateInfinity";
    }
    return "?";
}
inline std::string to_string(ArcClass c) {
    switch (c) {
        case ArcClass::RelativisticEllipseArc: return "RelativisticEllipseArc";
        case ArcClass::RelativisticHyperbolaArc: return "RelativisticHyperbolaArc";
        case ArcClass::TouchPoint: return "TouchPoint";
    }
    return "?";
}

/// The line p x + q y = r.
template <class T>
struct LineImplicit {
    T p;
    T q;
    T r{1};

    MVec2<T> direction() const { return {q, T(-p)}; }
    /// Minkowski normal: <n, direction> = 0.
    MVec2<T> normal() const { return {T(-p), q}; }
};

template <class T>
T minkowski_dot(const MVec2<T>& u, const MVec2<T>& v) {
    return u.x * v.x - u.y * v.y;
}

/// sqrt<X-Y, X-Y> on the branch with nonnegative imaginary part.
template <class T>
std::complex<double> minkowski_dist(const MVec2<T>& X, const MVec2<T>& Y) {
    MVec2<T> d = X - Y;
    double s = to_double(minkowski_dot(d, d));
    if (s >= 0) return {std::sqrt(s), 0.0};
    return {0.0, std::sqrt(-s)};
}

template <class T>
VectorType vector_type(const MVec2<T>& v, const Tolerance& tol = {}) {
    if (sign_of(v.x) == 0 && sign_of(v.y) == 0) throw DomainError("vector_type of the zero vector");
    T q = minkowski_dot(v, v);
    double scale = to_double(v.x * v.x + v.y * v.y);
    if (near_zero(q, scale, tol.relative)) return VectorType::LightLike;
    return sign_of(q) > 0 ? VectorType::SpaceLike : VectorType::TimeLike;
}

template <class T>
ConicClass classify_conic(const ExtReal<T>& gamma, const BoundaryEllipse<T>& E) {
    if (!gamma.is_finite()) return ConicClass::DegenerateInfinity;
    const T& g = gamma.value;
    if (g == E.a) return ConicClass::DegenerateYAxis;
    if (g == T(-E.b)) return ConicClass::DegenerateXAxis;
    if (g < T(-E.b)) return ConicClass::HyperbolaXMajor;
    if (g > E.a) return ConicClass::HyperbolaYMajor;
    return ConicClass::EllipseOfFamily;
}

template <class T>
ConicClass classify_conic(const T& gamma, const BoundaryEllipse<T>& E) {
    return classify_conic(ExtReal<T>::finite(gamma), E);
}

inline bool is_hyperbola(ConicClass c) {
    return c == ConicClass::HyperbolaXMajor || c == ConicClass::HyperbolaYMajor;
}

/// x^2/a + y^2/b - 1.
template <class T>
T boundary_residual(const MVec2<T>& P, const BoundaryEllipse<T>& E) {
    return P.x * P.x / E.a + P.y * P.y / E.b - T(1);
}

template <class T>
bool on_boundary(const MVec2<T>& P, const BoundaryEllipse<T>& E, const Tolerance& tol = {}) {
    return near_zero(boundary_residual(P, E), 1.0, tol.boundary);
}

struct EllipticCoords {
    double lambda1; // in [-b, 0]
    double lambda2; // in [0, a]
};

/// Roots of lambda^2 + (x^2 - y^2 - a + b) lambda + (b x^2 + a y^2 - ab) = 0.
template <class T>
EllipticCoords elliptic_coordinates(const MVec2<T>& P, const BoundaryEllipse<T>& E, const Tolerance& tol = {}) {
    const double x = to_double(P.x), y = to_double(P.y);
    const double a = E.ad(), b = E.bd();
    const bool boundary = on_boundary(P, E, tol);
    const double res = to_double(boundary_residual(P, E));
    if (res > tol.boundary) throw DomainError("point outside the ellipse");
    double r1, r2;
    if (sign_of(P.y) == 0) {
        // (lambda + b)(lambda + x^2 - a)
        r1 = -b;
        r2 = boundary ? 0.0 : a - x * x;
    } else if (sign_of(P.x) == 0) {
        // (lambda - a)(lambda + b - y^2)
        r1 = boundary ? 0.0 : y * y - b;
        r2 = a;
    } else {
        const double B = x * x - y * y - (a - b);
        const double C = boundary ? 0.0 : b * x * x + a * y * y - a * b;
        double disc = B * B - 4 * C;
        if (disc < 0) disc = 0;
        const double sq = std::sqrt(disc);
        const double qq = -0.5 * (B + (B >= 0 ? sq : -sq));
        if (qq == 0) {
            r1 = r2 = 0;
        } else {
            r1 = qq;
            r2 = C / qq;
        }
        if (r1 > r2) std::swap(r1, r2);
    }
    const double slack = tol.boundary * std::max({1.0, a, b});
    if (r1 < -b - slack || r1 > slack || r2 < -slack || r2 > a + slack)
        throw DomainError("elliptic coordinates outside the admissible box");
    return {std::clamp(r1, -b, 0.0), std::clamp(r2, 0.0, a)};
}

/// Confocal parameter of the conic tangent to p x + q y = r:
/// gamma = (r^2 - a p^2 - b q^2) / (q^2 - p^2).
template <class T>
ExtReal<T> caustic_of_line(const LineImplicit<T>& L, const BoundaryEllipse<T>& E, const Tolerance& tol = {}) {
    if (sign_of(L.p) == 0 && sign_of(L.q) == 0) throw DomainError("line with zero normal");
    T num = L.r * L.r - E.a * L.p * L.p - E.b * L.q * L.q;
    T den = L.q * L.q - L.p * L.p;
    double den_scale = to_double(L.q * L.q + L.p * L.p);
    double num_scale = to_double(L.r * L.r + E.a * L.p * L.p + E.b * L.q * L.q);
    if (near_zero(den, den_scale, tol.relative)) {
        if (near_zero(num, num_scale, tol.relative)) return ExtReal<T>::all_conics();
        return ExtReal<T>::infinity();
    }
    return ExtReal<T>::finite(num / den);
}

/// Line through P with direction d.
template <class T>
LineImplicit<T> line_through(const MVec2<T>& P, const MVec2<T>& d) {
    LineImplicit<T> L{T(d.y), T(-d.x), T(0)};
    L.r = L.p * P.x + L.q * P.y;
    return L;
}

/// Tangent direction of the boundary at P: (-y/b, x/a).
template <class T>
MVec2<T> boundary_tangent(const MVec2<T>& P, const BoundaryEllipse<T>& E) {
    return {T(-P.y / E.b), T(P.x / E.a)};
}

template <class T>
ArcClass boundary_arc_class(const MVec2<T>& P, const BoundaryEllipse<T>& E, const Tolerance& tol = {}) {
    if (!on_boundary(P, E, tol)) throw DomainError("point not on the boundary ellipse");
    // |x| vs a/sqrt(a+b), compared through x^2 (a+b) vs a^2.
    T d = P.x * P.x * (E.a + E.b) - E.a * E.a;
    if (near_zero(d, to_double(E.a * E.a), tol.boundary)) return ArcClass::TouchPoint;
    return sign_of(d) < 0 ? ArcClass::RelativisticEllipseArc : ArcClass::RelativisticHyperbolaArc;
}

/// Tangent line x x0/(a-gamma) + y y0/(b+gamma) = 1 at P on the conic C_gamma.
template <class T>
LineImplicit<T> tangent_line_at(const MVec2<T>& P, const T& gamma, const BoundaryEllipse<T>& E,
                                const Tolerance& tol = {}) {
    T A = E.a - gamma;
    T B = E.b + gamma;
    if (sign_of(A) == 0 || sign_of(B) == 0) throw DomainError("tangent to a degenerate conic");
    T res = P.x * P.x / A + P.y * P.y / B - T(1);
    if (!near_zero(res, 1.0, tol.boundary)) throw DomainError("point not on the conic");
    return {T(P.x / A), T(P.y / B), T(1)};
}

/// The four points where the boundary tangent is light-like.
inline std::array<MVec2<double>, 4> touch_points(const BoundaryEllipse<double>& E) {
    const double s = std::sqrt(E.a + E.b);
    const double x = E.a / s, y = E.b / s;
    return {MVec2<double>{x, y}, MVec2<double>{-x, y}, MVec2<double>{-x, -y}, MVec2<double>{x, -y}};
}

/// Boundary point (sqrt(a) cos t, sqrt(b) sin t).
inline MVec2<double> boundary_point(const BoundaryEllipse<double>& E, double t) {
    return {std::sqrt(E.a) * std::cos(t), std::sqrt(E.b) * std::sin(t)};
}

} // namespace pellipse
