#pragma once

// Billiard dynamics inside the ellipse: Minkowski reflection, chord
// stepping, trajectory simulation, closure detection up to the axis
// symmetries, and bounce partition counts.

#include "geometry.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace pellipse {

/// v' = v - 2 <v,n>/<n,n> n for the Minkowski normal n of L.
template <class T>
MVec2<T> reflect(const MVec2<T>& v, const LineImplicit<T>& L, const Tolerance& tol = {}) {
    MVec2<T> n = L.normal();
    T nn = minkowski_dot(n, n);
    if (near_zero(nn, to_double(n.x * n.x + n.y * n.y), tol.relative)) throw ReflectionUndefined();
    T f = T(2) * minkowski_dot(v, n) / nn;
    return v - f * n;
}

/// Reflection across the boundary tangent at P.
template <class T>
MVec2<T> reflect_at(const MVec2<T>& v, const MVec2<T>& P, const BoundaryEllipse<T>& E, const Tolerance& tol = {}) {
    LineImplicit<T> L{T(P.x / E.a), T(P.y / E.b), T(1)};
    return reflect(v, L, tol);
}

/// Second intersection of P + t d (t > 0) with the boundary; the t = 0
/// root of the chord quadratic is factored out exactly.
template <class T>
MVec2<T> next_boundary_hit(const MVec2<T>& P, const MVec2<T>& d, const BoundaryEllipse<T>& E,
                           const Tolerance& tol = {}) {
    if (sign_of(d.x) == 0 && sign_of(d.y) == 0) throw DomainError("zero direction");
    T lin = P.x * d.x / E.a + P.y * d.y / E.b;
    T quad = d.x * d.x / E.a + d.y * d.y / E.b;
    double scale = std::sqrt(to_double(quad)) * std::sqrt(to_double(P.x * P.x / E.a + P.y * P.y / E.b));
    if (near_zero(lin, scale, tol.relative)) throw DegenerateChord();
    T t = T(-2) * lin / quad;
    if (sign_of(t) < 0) throw DomainError("direction points out of the ellipse");
    return P + t * d;
}

enum class Sigma { Identity, FlipX, FlipY, FlipBoth };

inline std::string to_string(Sigma s) {
    switch (s) {
        case Sigma::Identity: return "id";
        case Sigma::FlipX: return "flip-x";
        case Sigma::FlipY: return "flip-y";
        case Sigma::FlipBoth: return "flip-both";
    }
    return "?";
}

/// flip-x: (x,y) -> (-x,y); flip-y: (x,y) -> (x,-y); flip-both: (x,y) -> (-x,-y).
template <class T>
MVec2<T> apply(Sigma s, const MVec2<T>& v) {
    switch (s) {
        case Sigma::Identity: return v;
        case Sigma::FlipX: return {T(-v.x), v.y};
        case Sigma::FlipY: return {v.x, T(-v.y)};
        case Sigma::FlipBoth: return {T(-v.x), T(-v.y)};
    }
    return v;
}

template <class T>
struct Trajectory {
    T a{1}, b{1};
    std::vector<MVec2<T>> vertices;   // vertices[0] is the start
    std::vector<MVec2<T>> directions; // directions[i] leaves vertices[i]
    std::vector<ArcClass> arc_classes;
    VectorType segment_type = VectorType::SpaceLike;
    ExtReal<T> caustic_gamma;
    double max_caustic_deviation = 0; // relative, over all segments

    int steps() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Iterate chord + reflection `steps` times from P0 along d0.
template <class T>
Trajectory<T> simulate(const MVec2<T>& P0, const MVec2<T>& d0, int steps, const BoundaryEllipse<T>& E,
                       const Tolerance& tol = {}) {
    if (steps < 0) throw DomainError("negative step count");
    if (!on_boundary(P0, E, tol)) throw DomainError("start point not on the boundary");
    Trajectory<T> tr;
    tr.a = E.a;
    tr.b = E.b;
    tr.segment_type = vector_type(d0, tol);
    tr.caustic_gamma = caustic_of_line(line_through(P0, d0), E, tol);
    ArcClass c0 = boundary_arc_class(P0, E, tol);
    if (c0 == ArcClass::TouchPoint) throw ReflectionUndefined(0);
    tr.vertices.push_back(P0);
    tr.directions.push_back(d0);
    tr.arc_classes.push_back(c0);
    MVec2<T> P = P0, d = d0;
    for (int i = 1; i <= steps; ++i) {
        try {
            P = next_boundary_hit(P, d, E, tol);
        } catch (const DegenerateChord&) {
            throw DegenerateChord(i);
        }
        ArcClass c = boundary_arc_class(P, E, tol);
        if (c == ArcClass::TouchPoint) throw ReflectionUndefined(i);
        try {
            d = reflect_at(d, P, E, tol);
        } catch (const ReflectionUndefined&) {
            throw ReflectionUndefined(i);
        }
        if (vector_type(d, tol) != tr.segment_type) throw Error("segment type changed along the trajectory");
        ExtReal<T> g = caustic_of_line(line_through(P, d), E, tol);
        if (g.kind != tr.caustic_gamma.kind) {
            tr.max_caustic_deviation = INFINITY;
        } else if (g.is_finite()) {
            double g0 = to_double(tr.caustic_gamma.value);
            double dev = std::fabs(to_double(g.value) - g0) / std::max(1.0, std::fabs(g0));
            if constexpr (is_exact_v<T>) dev = (g.value == tr.caustic_gamma.value) ? 0.0 : std::max(dev, 1e-300);
            tr.max_caustic_deviation = std::max(tr.max_caustic_deviation, dev);
        }
        tr.vertices.push_back(P);
        tr.directions.push_back(d);
        tr.arc_classes.push_back(c);
    }
    return tr;
}

struct ClosureStatus {
    enum class Kind { Periodic, EllipticPeriodic, Open };
    Kind kind = Kind::Open;
    int n = 0;
    Sigma sigma = Sigma::Identity;

    std::string tag() const {
        switch (kind) {
            case Kind::Periodic: return "Periodic";
            case Kind::EllipticPeriodic: return "EllipticPeriodic";
            case Kind::Open: return "Open";
        }
        return "?";
    }
};

namespace detail {

template <class T>
bool same_point(const MVec2<T>& u, const MVec2<T>& v, double eps, double scale) {
    double dx = to_double(u.x) - to_double(v.x), dy = to_double(u.y) - to_double(v.y);
    return std::hypot(dx, dy) <= eps * scale;
}

template <class T>
bool same_ray(const MVec2<T>& u, const MVec2<T>& v, double eps) {
    double ux = to_double(u.x), uy = to_double(u.y), vx = to_double(v.x), vy = to_double(v.y);
    double nu = std::hypot(ux, uy), nv = std::hypot(vx, vy);
    if (nu == 0 || nv == 0) return false;
    double cross = (ux * vy - uy * vx) / (nu * nv);
    double dot = (ux * vx + uy * vy) / (nu * nv);
    return std::fabs(cross) <= eps && dot > 0;
}

} // namespace detail

/// Compare step n with step 0 under the Klein four-group of axis symmetries.
template <class T>
ClosureStatus closure_status(const Trajectory<T>& tr, int n, double eps) {
    if (n < 1 || n > tr.steps()) throw DomainError("trajectory has too few vertices for closure test");
    const double scale = std::max(1.0, std::sqrt(std::max(to_double(tr.a), to_double(tr.b))));
    const auto& v0 = tr.vertices[0];
    const auto& d0 = tr.directions[0];
    const auto& vn = tr.vertices[static_cast<std::size_t>(n)];
    const auto& dn = tr.directions[static_cast<std::size_t>(n)];
    auto matches = [&](Sigma s) {
        return detail::same_point(vn, apply(s, v0), eps, scale) && detail::same_ray(dn, apply(s, d0), eps);
    };
    ClosureStatus st;
    st.n = n;
    if (matches(Sigma::Identity)) {
        st.kind = ClosureStatus::Kind::Periodic;
        return st;
    }
    int count = 0;
    for (Sigma s : {Sigma::FlipX, Sigma::FlipY, Sigma::FlipBoth})
        if (matches(s)) {
            ++count;
            st.sigma = s;
        }
    if (count == 1) {
        st.kind = ClosureStatus::Kind::EllipticPeriodic;
        return st;
    }
    st.kind = ClosureStatus::Kind::Open;
    st.sigma = Sigma::Identity;
    return st;
}

/// Smallest k in [1, max_n] at which the trajectory closes (possibly up to symmetry).
template <class T>
ClosureStatus first_closure(const Trajectory<T>& tr, int max_n, double eps, bool allow_symmetry = true) {
    for (int k = 1; k <= std::min(max_n, tr.steps()); ++k) {
        ClosureStatus st = closure_status(tr, k, eps);
        if (st.kind == ClosureStatus::Kind::Periodic) return st;
        if (allow_symmetry && st.kind == ClosureStatus::Kind::EllipticPeriodic) return st;
    }
    ClosureStatus open;
    open.n = std::min(max_n, tr.steps());
    return open;
}

/// (n1, n2): bounces off relativistic-ellipse and relativistic-hyperbola arcs
/// over one period n.
template <class T>
std::pair<int, int> partition_counts(const Trajectory<T>& tr, int n, double eps) {
    if (closure_status(tr, n, eps).kind != ClosureStatus::Kind::Periodic)
        throw DomainError("partition counts need an n-periodic trajectory");
    int n1 = 0, n2 = 0;
    for (int i = 0; i < n; ++i) {
        if (tr.arc_classes[static_cast<std::size_t>(i)] == ArcClass::RelativisticEllipseArc)
            ++n1;
        else
            ++n2;
    }
    return {n1, n2};
}

/// Inward directions at boundary point P along the (up to two) lines
/// through P tangent to the confocal conic C_gamma.
inline std::vector<MVec2<double>> caustic_start_directions(const MVec2<double>& P, double gamma,
                                                           const BoundaryEllipse<double>& E) {
    // Lines p x + q y = 1 through P tangent to C_gamma: (a-g) p^2 + (b+g) q^2 = 1.
    const double A = E.a - gamma, B = E.b + gamma;
    std::vector<MVec2<double>> out;
    auto push = [&](double p, double q) {
        MVec2<double> d{q, -p};
        if (d.x * P.x / E.a + d.y * P.y / E.b > 0) d = {-d.x, -d.y};
        double n = std::hypot(d.x, d.y);
        if (n == 0) return;
        out.push_back({d.x / n, d.y / n});
    };
    const bool use_y = std::fabs(P.y) >= std::fabs(P.x);
    // Solve for the free unknown u (p if use_y, else q).
    const double s = use_y ? P.y : P.x, o = use_y ? P.x : P.y;
    const double Au = use_y ? A : B, Bo = use_y ? B : A;
    // other = (1 - u o)/s ; Au u^2 + Bo (1 - u o)^2 / s^2 = 1
    const double qa = Au + Bo * o * o / (s * s);
    const double qb = -2 * Bo * o / (s * s);
    const double qc = Bo / (s * s) - 1;
    double disc = qb * qb - 4 * qa * qc;
    if (qa == 0 || disc < 0) return out;
    const double sq = std::sqrt(disc);
    for (double sign : {1.0, -1.0}) {
        double u = (-qb + sign * sq) / (2 * qa);
        double other = (1 - u * o) / s;
        if (use_y)
            push(u, other);
        else
            push(other, u);
        if (sq == 0) break;
    }
    return out;
}

struct CausticStart {
    MVec2<double> point;
    MVec2<double> direction;
    double parameter; // boundary angle t with point = (sqrt(a) cos t, sqrt(b) sin t)
};

/// First boundary point at or after angle t0 from which a tangent to C_gamma
/// exists, away from touch points. `branch` selects between the two tangents.
inline std::optional<CausticStart> find_caustic_start(const BoundaryEllipse<double>& E, double gamma, double t0,
                                                      int branch = 0, int samples = 2048) {
    const double two_pi = 2 * M_PI;
    const double touch = E.a / std::sqrt(E.a + E.b);
    for (int i = 0; i < samples; ++i) {
        double t = t0 + two_pi * i / samples;
        MVec2<double> P = boundary_point(E, t);
        if (std::fabs(std::fabs(P.x) - touch) < 1e-3 * std::sqrt(E.a)) continue;
        auto dirs = caustic_start_directions(P, gamma, E);
        if (dirs.size() < 2) continue;
        // avoid nearly tangent chords
        const MVec2<double>& d = dirs[static_cast<std::size_t>(branch % 2)];
        MVec2<double> g{P.x / E.a, P.y / E.b};
        double c = -(d.x * g.x + d.y * g.y) / std::hypot(g.x, g.y);
        if (c < 1e-3) continue;
        return CausticStart{P, d, t};
    }
    return std::nullopt;
}

} // namespace pellipse
