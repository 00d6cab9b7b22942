#include "figure_data.hpp"

#include <pellipse/dynamics.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <random>

using namespace pellipse;

using V = MVec2<double>;
using Q = MVec2<Rational>;

namespace {

// Start at the boundary point with the given x (and sign of y), tangent to C_gamma,
// on the branch whose first hit is closest to `toward`.
Trajectory<double> start_toward(const BoundaryEllipse<double>& E, double gamma, double x, double ysign, V toward,
                                int steps) {
    V P{x, ysign * std::sqrt(E.b * (1 - x * x / E.a))};
    auto dirs = caustic_start_directions(P, gamma, E);
    EXPECT_FALSE(dirs.empty());
    V best = dirs.front();
    double dist = INFINITY;
    for (const V& d : dirs) {
        V hit = next_boundary_hit(P, d, E);
        double e = std::hypot(hit.x - toward.x, hit.y - toward.y);
        if (e < dist) dist = e, best = d;
    }
    EXPECT_LT(dist, 5e-3);
    return simulate(P, best, steps, E);
}

Rational small_rational(std::mt19937& g) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
    Rational r(num(g), den(g));
    r.canonicalize();
    return r;
}

} // namespace

TEST(Reflect, Examples) {
    LineImplicit<Rational> xaxis{0, 1, 0};
    EXPECT_EQ(reflect(Q{2, 3}, xaxis), (Q{2, -3}));
    EXPECT_EQ(reflect(Q{5, 0}, xaxis), (Q{5, 0}));
    LineImplicit<Rational> diag{1, -1, 0};
    EXPECT_THROW(reflect(Q{1, 0}, diag), ReflectionUndefined);
}

TEST(Reflect, InvolutionAndNormExact) {
    std::mt19937 g(2024);
    int done = 0;
    while (done < 10000) {
        Q v{small_rational(g), small_rational(g)};
        LineImplicit<Rational> L{small_rational(g), small_rational(g), Rational(1)};
        if (sgn(L.p) == 0 && sgn(L.q) == 0) continue;
        if (L.p * L.p == L.q * L.q) continue;
        Q w = reflect(v, L);
        ASSERT_EQ(minkowski_dot(w, w), minkowski_dot(v, v));
        ASSERT_EQ(reflect(w, L), v);
        ++done;
    }
}

TEST(Reflect, InvolutionAndNormFloating) {
    std::mt19937 g(77);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 10000; ++i) {
        V v{u(g), u(g)};
        LineImplicit<double> L{u(g), u(g), 1};
        if (std::fabs(std::fabs(L.p) - std::fabs(L.q)) < 1e-3) continue;
        V w = reflect(v, L);
        const double scale = v.x * v.x + v.y * v.y;
        const double nn = std::fabs(minkowski_dot(w, w) - minkowski_dot(v, v));
        // relative to the Euclidean size of the reflected pair
        EXPECT_LE(nn, 1e-10 * std::max(scale, w.x * w.x + w.y * w.y)) << i;
        V back = reflect(w, L);
        EXPECT_NEAR(back.x, v.x, 1e-9 * std::max(1.0, std::hypot(w.x, w.y)));
        EXPECT_NEAR(back.y, v.y, 1e-9 * std::max(1.0, std::hypot(w.x, w.y)));
    }
}

TEST(NextHit, Examples) {
    BoundaryEllipse<double> E(3, 2);
    V h = next_boundary_hit(V{-std::sqrt(3.0), 0}, V{1, 0}, E);
    EXPECT_NEAR(h.x, std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(h.y, 0, 1e-14);
    EXPECT_THROW(next_boundary_hit(V{std::sqrt(3.0), 0}, V{0, 1}, E), DegenerateChord);
}

TEST(NextHit, ExactHitsStayOnBoundary) {
    BoundaryEllipse<Rational> E(4, 9);
    Q P{2, 0};
    for (int i = -5; i <= 5; ++i) {
        if (i == 0) continue;
        Q d{-1, Rational(i, 2)};
        Q H = next_boundary_hit(P, d, E);
        EXPECT_EQ(H.x * H.x / E.a + H.y * H.y / E.b, Rational(1));
    }
}

TEST(Simulate, ThreePeriodicReference) {
    BoundaryEllipse<double> E(3, 2);
    const double g = figures::periodic_rows()[0].gamma;
    auto tr = start_toward(E, g, 0.9, -1, V{0.7499, 1.27}, 3);
    EXPECT_NEAR(tr.vertices[1].x, 0.7499, 5e-3);
    EXPECT_NEAR(tr.vertices[1].y, 1.27, 5e-3);
    EXPECT_LT(std::hypot(tr.vertices[3].x - tr.vertices[0].x, tr.vertices[3].y - tr.vertices[0].y), 1e-6);
    // the start (0.9, -1.208) sits on a relativistic ellipse arc, (1.709, -0.229) on a hyperbola arc
    std::vector<ArcClass> expect{ArcClass::RelativisticEllipseArc, ArcClass::RelativisticEllipseArc,
                                 ArcClass::RelativisticHyperbolaArc};
    std::vector<ArcClass> got(tr.arc_classes.begin(), tr.arc_classes.begin() + 3);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(got, expect);
    auto st = closure_status(tr, 3, 1e-6);
    EXPECT_EQ(st.kind, ClosureStatus::Kind::Periodic);
    EXPECT_EQ(partition_counts(tr, 3, 1e-6), std::make_pair(2, 1));
}

TEST(Simulate, FourPeriodicHyperbola) {
    BoundaryEllipse<double> E(5, 3);
    auto tr = start_toward(E, -7.5, 0.9, -1, V{2.162, -0.4427}, 4);
    ASSERT_TRUE(tr.caustic_gamma.is_finite());
    EXPECT_NEAR(tr.caustic_gamma.value, -7.5, 1e-9);
    EXPECT_EQ(closure_status(tr, 4, 1e-6).kind, ClosureStatus::Kind::Periodic);
}

TEST(Simulate, LightLikeSquare) {
    BoundaryEllipse<Rational> E(1, 1);
    auto tr = simulate(Q{1, 0}, Q{-1, 1}, 4, E);
    EXPECT_EQ(tr.segment_type, VectorType::LightLike);
    EXPECT_EQ(tr.caustic_gamma.kind, ExtReal<Rational>::Kind::Infinity);
    EXPECT_EQ(tr.vertices[4], tr.vertices[0]);
    EXPECT_EQ(first_closure(tr, 4, 1e-12, false).n, 4);
    BoundaryEllipse<double> F(2.5, 2.5);
    std::mt19937 g(1);
    std::uniform_real_distribution<double> t(0, 2 * M_PI);
    for (int i = 0; i < 50; ++i) {
        V P = boundary_point(F, t(g));
        if (boundary_arc_class(P, F) == ArcClass::TouchPoint) continue;
        V d{1, 1};
        if (d.x * P.x / F.a + d.y * P.y / F.b > 0) d = {-1, -1};
        auto trd = simulate(P, d, 4, F);
        EXPECT_EQ(first_closure(trd, 4, 1e-9, false).n, 4);
    }
}

TEST(Simulate, RejectsBadStart) {
    BoundaryEllipse<double> E(3, 2);
    EXPECT_THROW(simulate(V{1, 1}, V{1, 0}, 3, E), DomainError);
    const double r = std::sqrt(5.0);
    EXPECT_THROW(simulate(V{3 / r, 2 / r}, V{-1, 0}, 3, E), ReflectionUndefined);
}

TEST(Closure, TwoEllipticReference) {
    BoundaryEllipse<double> E(5, 3);
    // vertex 2 is the mirror image (-0.3, 1.7164) of the start under x -> -x
    V P{0.3, std::sqrt(3 * (1 - 0.09 / 5))};
    std::optional<Trajectory<double>> tr2;
    for (const V& d : caustic_start_directions(P, -15.0 / 8, E)) {
        auto t = simulate(P, d, 2, E);
        if (std::fabs(t.vertices[2].x + 0.3) < 1e-6) tr2 = t;
    }
    ASSERT_TRUE(tr2.has_value());
    const auto& tr = *tr2;
    EXPECT_NEAR(tr.vertices[0].y, 1.7164, 1e-4);
    auto st = closure_status(tr, 2, 1e-6);
    EXPECT_EQ(st.kind, ClosureStatus::Kind::EllipticPeriodic);
    EXPECT_EQ(st.sigma, Sigma::FlipX);
    EXPECT_NEAR(tr.vertices[2].x, -0.3, 1e-9);
    EXPECT_NEAR(tr.vertices[2].y, tr.vertices[0].y, 1e-9);
}

TEST(Closure, ThreeEllipticCaseE) {
    // E-ladder root, so the symmetry is y -> -y
    BoundaryEllipse<double> E(6, 3);
    auto s = find_caustic_start(E, -3.1595917942265424, 0.37);
    ASSERT_TRUE(s.has_value());
    auto tr = simulate(s->point, s->direction, 3, E);
    auto st = closure_status(tr, 3, 1e-6);
    EXPECT_EQ(st.kind, ClosureStatus::Kind::EllipticPeriodic);
    EXPECT_EQ(st.sigma, Sigma::FlipY);
}

TEST(Closure, GenericOpen) {
    BoundaryEllipse<double> E(3, 2);
    auto s = find_caustic_start(E, 1.0, 0.37);
    ASSERT_TRUE(s.has_value());
    auto tr = simulate(s->point, s->direction, 12, E);
    EXPECT_EQ(first_closure(tr, 12, 1e-6).kind, ClosureStatus::Kind::Open);
    EXPECT_THROW(closure_status(tr, 13, 1e-6), DomainError);
}

TEST(Partition, TableRows) {
    struct Row {
        double a, b, gamma;
        int n, n1, n2;
    };
    for (Row r : {Row{3, 2, 2.332271493, 3, 2, 1}, Row{3, 7, -6.971157243, 7, 1, 6}, Row{6, 3, -3.015133332, 8, 2, 6}}) {
        BoundaryEllipse<double> E(r.a, r.b);
        auto s = find_caustic_start(E, r.gamma, 0.37);
        ASSERT_TRUE(s.has_value());
        auto tr = simulate(s->point, s->direction, r.n, E);
        EXPECT_EQ(closure_status(tr, r.n, 1e-6).kind, ClosureStatus::Kind::Periodic);
        EXPECT_EQ(partition_counts(tr, r.n, 1e-6), std::make_pair(r.n1, r.n2));
    }
}

TEST(Properties, CausticInvariance) {
    std::mt19937 g(99);
    std::uniform_real_distribution<double> ab(0.5, 9), t(0, 2 * M_PI), ang(0.05, M_PI - 0.05);
    int done = 0, attempts = 0, skipped = 0;
    while (done < 1000 && attempts < 3000) {
        ++attempts;
        BoundaryEllipse<double> E(ab(g), ab(g));
        V P = boundary_point(E, t(g));
        // inward direction at a random angle from the tangent
        V tan = boundary_tangent(P, E);
        const double nt = std::hypot(tan.x, tan.y);
        tan = {tan.x / nt, tan.y / nt};
        V in{-P.x / E.a, -P.y / E.b};
        const double ni = std::hypot(in.x, in.y);
        in = {in.x / ni, in.y / ni};
        const double th = ang(g);
        V d{std::cos(th) * tan.x + std::sin(th) * in.x, std::cos(th) * tan.y + std::sin(th) * in.y};
        Trajectory<double> tr;
        try {
            tr = simulate(P, d, 30, E);
        } catch (const Error&) {
            ++skipped;
            continue;
        }
        if (!tr.caustic_gamma.is_finite()) continue;
        // gamma of a nearly light-like line is ill-conditioned (cancellation ~ |d|^2 / |<d,d>|);
        // such segments only occur on chords grazing a touch point
        double lightness = 1;
        for (const V& u : tr.directions)
            lightness = std::min(lightness, std::fabs(minkowski_dot(u, u)) / (u.x * u.x + u.y * u.y));
        if (lightness < 1e-6) {
            ++skipped;
            continue;
        }
        const double g0 = tr.caustic_gamma.value;
        for (int i = 0; i < tr.steps(); ++i) {
            auto gi = caustic_of_line(line_through(tr.vertices[i], tr.directions[i]), E);
            ASSERT_TRUE(gi.is_finite());
            ASSERT_LE(std::fabs(gi.value - g0), 1e-8 * std::max(1.0, std::fabs(g0))) << "segment " << i;
            ASSERT_EQ(vector_type(tr.directions[i]), tr.segment_type);
        }
        ++done;
    }
    EXPECT_EQ(done, 1000);
    EXPECT_LT(skipped, 50);
}

TEST(Properties, PonceletFromRandomStarts) {
    std::mt19937 g(5);
    std::uniform_real_distribution<double> t(0, 2 * M_PI);
    for (const auto& row : figures::periodic_rows()) {
        BoundaryEllipse<double> E(row.a, row.b);
        for (int i = 0; i < 20; ++i) {
            auto s = find_caustic_start(E, row.gamma, t(g), i % 2);
            ASSERT_TRUE(s.has_value());
            auto tr = simulate(s->point, s->direction, row.n, E);
            EXPECT_EQ(closure_status(tr, row.n, 1e-6).kind, ClosureStatus::Kind::Periodic)
                << row.n << ' ' << row.a << ' ' << row.b << ' ' << row.gamma;
        }
    }
}

TEST(Properties, HyperbolaCausticPeriodsAreEven) {
    std::mt19937 g(8);
    std::uniform_real_distribution<double> t(0, 2 * M_PI);
    int closures = 0;
    for (const auto& row : figures::periodic_rows()) {
        BoundaryEllipse<double> E(row.a, row.b);
        if (!is_hyperbola(classify_conic(row.gamma, E))) continue;
        for (int i = 0; i < 5; ++i) {
            auto s = find_caustic_start(E, row.gamma, t(g), i % 2);
            ASSERT_TRUE(s.has_value());
            auto tr = simulate(s->point, s->direction, 4 * row.n, E);
            auto st = first_closure(tr, 4 * row.n, 1e-6, false);
            ASSERT_EQ(st.kind, ClosureStatus::Kind::Periodic);
            EXPECT_EQ(st.n % 2, 0);
            ++closures;
        }
    }
    // random hyperbola caustics: any closure found within the budget has even period
    std::uniform_real_distribution<double> gh(-12, -3.5);
    BoundaryEllipse<double> E(4, 3);
    for (int i = 0; i < 200; ++i) {
        auto s = find_caustic_start(E, gh(g), t(g));
        if (!s) continue;
        Trajectory<double> tr;
        try {
            tr = simulate(s->point, s->direction, 40, E);
        } catch (const StepError&) {
            continue;
        }
        auto st = first_closure(tr, 40, 1e-6, false);
        if (st.kind == ClosureStatus::Kind::Periodic) {
            EXPECT_EQ(st.n % 2, 0);
        }
    }
    EXPECT_GT(closures, 0);
}

TEST(Properties, LightLikeDirectionsAlternate) {
    BoundaryEllipse<double> E(3, 1);
    V P = boundary_point(E, 0.37);
    V d{1, 1};
    if (d.x * P.x / E.a + d.y * P.y / E.b > 0) d = {-1, -1};
    auto tr = simulate(P, d, 12, E);
    for (int i = 0; i + 1 < tr.steps(); ++i) {
        const V u = tr.directions[i], w = tr.directions[i + 1];
        const bool u_diag = std::fabs(u.x - u.y) < 1e-9 * std::hypot(u.x, u.y);
        const bool w_diag = std::fabs(w.x - w.y) < 1e-9 * std::hypot(w.x, w.y);
        EXPECT_NE(u_diag, w_diag) << i;
    }
    EXPECT_EQ(first_closure(tr, 12, 1e-8, false).n, 6);
}

TEST(Properties, CausticInvarianceExact) {
    // rational boundary points of x^2/4 + y^2/9 = 1 from the parametrization ((1-u^2)/(1+u^2), 2u/(1+u^2))
    BoundaryEllipse<Rational> E(4, 9);
    std::mt19937 g(4);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    int done = 0;
    for (int i = 0; i < 400 && done < 100; ++i) {
        Rational u(num(g), den(g));
        u.canonicalize();
        const Rational w = 1 + u * u;
        Q P{Rational(2 * (1 - u * u) / w), Rational(3 * 2 * u / w)};
        Q d{Rational(num(g), den(g)), Rational(num(g), den(g))};
        d.x.canonicalize();
        d.y.canonicalize();
        if (sgn(d.x) == 0 && sgn(d.y) == 0) continue;
        if (sgn(d.x * P.x / E.a + d.y * P.y / E.b) >= 0) d = {Rational(-d.x), Rational(-d.y)};
        Trajectory<Rational> tr;
        try {
            tr = simulate(P, d, 6, E);
        } catch (const Error&) {
            continue;
        }
        for (int k = 0; k <= tr.steps(); ++k) {
            ASSERT_EQ(tr.vertices[k].x * tr.vertices[k].x / E.a + tr.vertices[k].y * tr.vertices[k].y / E.b,
                      Rational(1));
            auto gk = caustic_of_line(line_through(tr.vertices[k], tr.directions[k]), E);
            ASSERT_EQ(gk.kind, tr.caustic_gamma.kind);
            if (gk.is_finite()) {
                ASSERT_EQ(gk.value, tr.caustic_gamma.value);
            }
        }
        EXPECT_EQ(tr.max_caustic_deviation, 0.0);
        ++done;
    }
    EXPECT_EQ(done, 100);
}
