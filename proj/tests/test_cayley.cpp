#include <pellipse/cayley.hpp>
#include <pellipse/polynomial.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace pellipse;

namespace {

using R = Rational;

R q(long n, long d = 1) {
    R r(n, d);
    r.canonicalize();
    return r;
}

// eps (a-x)(b+x)(g-x) / (eps a b g): the square of the scaled B series
Polynomial<R> scaled_cubic(const R& a, const R& b, const R& g) {
    Polynomial<R> c = Polynomial<R>({a, R(-1)}) * Polynomial<R>({b, R(1)}) * Polynomial<R>({g, R(-1)});
    return c * Polynomial<R>::constant(R(1 / (a * b * g)));
}

Polynomial<R> truncate(const Polynomial<R>& p, int order) {
    std::vector<R> c;
    for (int k = 0; k <= order; ++k) c.push_back(p.coeff(k));
    return Polynomial<R>(c);
}

Polynomial<R> as_poly(const TruncatedSeries<R>& S) { return Polynomial<R>(S.coeffs); }

// Independent floating oracle: Taylor coefficients of sqrt(f) by the J.C.P. Miller power recurrence.
std::vector<double> miller_sqrt(const std::vector<double>& f, int order) {
    std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
    g[0] = std::sqrt(f[0]);
    for (int k = 1; k <= order; ++k) {
        double acc = 0;
        for (int j = 1; j <= k; ++j) {
            const double fj = j < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(j)] : 0.0;
            acc += (0.5 * j - (k - j)) * fj * g[static_cast<std::size_t>(k - j)];
        }
        g[static_cast<std::size_t>(k)] = acc / (k * f[0]);
    }
    return g;
}

} // namespace

TEST(Series, LeadingCoefficients) {
    BoundaryEllipse<R> E(3, 2);
    auto S = cubic_sqrt_series(E, R(1), 6);
    EXPECT_NEAR(S.value(0), std::sqrt(6.0), 1e-14);
    EXPECT_EQ(S.coeffs[1], q(-5, 12));
    EXPECT_NEAR(S.value(1), -5 * std::sqrt(6.0) / 12, 1e-14);
}

TEST(Series, MatchesMillerOracle) {
    for (auto [a, b, g] : {std::tuple{3.0, 2.0, 1.0}, {5.0, 3.0, -7.5}, {2.0, 7.0, 9.25}, {6.0, 4.0, -1.5}}) {
        BoundaryEllipse<double> E(a, b);
        auto S = cubic_sqrt_series(E, g, 12);
        const double eps = g > 0 ? 1 : -1;
        // eps (a-x)(b+x)(g-x) expanded
        std::vector<double> f{eps * a * b * g, eps * (a * g - b * g - a * b), eps * (b - a - g), eps};
        auto oracle = miller_sqrt(f, 12);
        for (int k = 0; k <= 12; ++k)
            EXPECT_NEAR(S.value(k), oracle[static_cast<std::size_t>(k)], 1e-12 * std::max(1.0, std::fabs(oracle[k])))
                << a << ' ' << b << ' ' << g << ' ' << k;
    }
}

TEST(Series, FourPeriodicRootKillsB3) {
    BoundaryEllipse<R> E(2, 4);
    auto S = cubic_sqrt_series(E, q(4, 3), 8);
    EXPECT_EQ(sgn(S.coeffs[3]), 0);
}

TEST(Series, SquaredIdentityExact) {
    std::mt19937 gen(13);
    std::uniform_int_distribution<int> n(1, 30), d(1, 6), sgnd(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        R a = q(n(gen), d(gen)), b = q(n(gen), d(gen)), g = q((sgnd(gen) ? 1 : -1) * n(gen), d(gen));
        if (g == a || g == -b) continue;
        const int order = 10;
        auto S = cubic_sqrt_series(BoundaryEllipse<R>(a, b), g, order);
        ASSERT_EQ(static_cast<int>(S.coeffs.size()), order + 1);
        Polynomial<R> B = as_poly(S);
        EXPECT_EQ(truncate(B * B, order), truncate(scaled_cubic(a, b, g), order));
    }
}

TEST(Series, DividedIdentitiesExact) {
    BoundaryEllipse<R> E(q(7, 2), 3);
    for (R g : {q(5, 4), q(-9, 2), q(11, 3)}) {
        const int order = 9;
        auto B = cubic_sqrt_series(E, g, order);
        auto C = divided_series(B, Divisor::GammaMinusX);
        auto D = divided_series(B, Divisor::AMinusX);
        auto F = divided_series(B, Divisor::BPlusX);
        // C (g - x) = B, D (a - x) = B, E (b + x) = B, all up to the common scaling by B0
        auto check = [&](const TruncatedSeries<R>& S, const Polynomial<R>& divisor) {
            Polynomial<R> prod = truncate(as_poly(S) * divisor, order);
            const double ratio = S.prefactor / B.prefactor;
            for (int k = 0; k <= order; ++k)
                EXPECT_NEAR(to_double(prod.coeff(k)) * ratio, to_double(B.coeffs[static_cast<std::size_t>(k)]), 1e-12)
                    << k;
        };
        check(C, Polynomial<R>({g, R(-1)}));
        check(D, Polynomial<R>({E.a, R(-1)}));
        check(F, Polynomial<R>({E.b, R(1)}));
        EXPECT_NEAR(C.value(0), B.value(0) / to_double(g), 1e-12);
    }
}

TEST(Series, RejectsDegenerateGamma) {
    BoundaryEllipse<R> E(3, 2);
    EXPECT_THROW(cubic_sqrt_series(E, R(0), 5), DomainError);
    EXPECT_THROW(cubic_sqrt_series(E, R(3), 5), DomainError);
    EXPECT_THROW(cubic_sqrt_series(E, R(-2), 5), DomainError);
}

TEST(Hankel, DividedSeriesExamples) {
    // C2 vanishes at the 3-periodic caustic of (3, 2)
    const double g1 = 2.3322714929999977;
    auto C = series_variant(BoundaryEllipse<double>(3, 2), g1, Variant::C, 8);
    EXPECT_LT(std::fabs(C.coeffs[2]), 1e-8);
    // E1 vanishes at gamma = -ab/(a+b) for (5, 3)
    auto Ev = series_variant(BoundaryEllipse<R>(5, 3), q(-15, 8), Variant::E, 6);
    EXPECT_EQ(sgn(Ev.coeffs[1]), 0);
}

TEST(Hankel, TestValues) {
    auto S4 = series_variant(BoundaryEllipse<R>(9, 3), q(-9, 4), Variant::B, default_order(4));
    EXPECT_EQ(sgn(hankel_test(S4, 4)), 0);
    BoundaryEllipse<double> E5(5, 2);
    auto S5 = series_variant(E5, 4.737508555, Variant::C, default_order(5));
    // C2 C4 - C3^2, relative to its natural scale
    const double det = hankel_test(S5, 5);
    const double c2 = S5.coeffs[2], c3 = S5.coeffs[3], c4 = S5.coeffs[4];
    EXPECT_NEAR(std::fabs(det), std::fabs(c2 * c4 - c3 * c3), 1e-15);
    EXPECT_LT(std::fabs(det), 1e-8 * (std::fabs(c2 * c4) + c3 * c3));
    auto S3 = series_variant(BoundaryEllipse<R>(3, 2), R(1), Variant::C, default_order(3));
    EXPECT_NE(sgn(hankel_test(S3, 3)), 0);
}

TEST(Periodicity, Examples) {
    EXPECT_TRUE(is_periodic(BoundaryEllipse<double>(3, 2), 2.332271493, 3).periodic);
    auto v = is_periodic(BoundaryEllipse<R>(5, 3), q(-15, 2), 3);
    EXPECT_FALSE(v.periodic);
    EXPECT_TRUE(is_periodic(BoundaryEllipse<R>(5, 3), q(-15, 2), 4).periodic);
    EXPECT_TRUE(is_periodic(BoundaryEllipse<double>(6, 3), 6.916766911, 8).periodic);
    EXPECT_TRUE(is_periodic(BoundaryEllipse<double>(6, 3), 6.9168, 8).periodic);
    EXPECT_FALSE(is_periodic(BoundaryEllipse<double>(6, 3), 9.0, 8).periodic);
    EXPECT_FALSE(is_periodic(BoundaryEllipse<R>(6, 3), q(69, 10), 8).periodic);
    EXPECT_EQ(is_periodic(BoundaryEllipse<R>(2, 4), q(4, 3), 4).variant_used, Variant::B);
    EXPECT_EQ(is_periodic(BoundaryEllipse<double>(3, 2), 2.3, 3).variant_used, Variant::C);
    EXPECT_THROW(is_periodic(BoundaryEllipse<R>(3, 2), R(3), 4), DomainError);
}

TEST(Periodicity, ScalingInvariance) {
    // the zero set is homogeneous: (a, b, g) -> (t a, t b, t g)
    for (R t : {q(2), q(1, 3), q(7, 5)}) {
        EXPECT_TRUE(is_periodic(BoundaryEllipse<R>(t * 2, t * 4), R(t * q(4, 3)), 4).periodic);
        EXPECT_TRUE(is_periodic(BoundaryEllipse<R>(t * 9, t * 3), R(t * q(-9, 4)), 4).periodic);
        EXPECT_FALSE(is_periodic(BoundaryEllipse<R>(t * 9, t * 3), R(t * q(-2)), 4).periodic);
        auto d1 = is_periodic(BoundaryEllipse<R>(3, 2), R(1), 3).determinant_value;
        auto d2 = is_periodic(BoundaryEllipse<R>(t * 3, t * 2), R(t), 3).determinant_value;
        EXPECT_EQ(sgn(d1), sgn(d2));
    }
    EXPECT_TRUE(is_periodic(BoundaryEllipse<double>(3e3, 2e3), 2.332271493e3, 3).periodic);
}

TEST(EllipticCase, Examples) {
    auto b = elliptic_case_test(BoundaryEllipse<R>(5, 3), q(-15, 8), 2);
    EXPECT_EQ(b.case_id, 'b');
    EXPECT_EQ(b.layout.variant, Variant::E);
    auto c = elliptic_case_test(BoundaryEllipse<R>(7, 3), q(-21, 4), 2);
    EXPECT_EQ(c.case_id, 'c');
    EXPECT_EQ(c.layout.variant, Variant::C);
    auto a = elliptic_case_test(BoundaryEllipse<R>(5, 7), q(35, 12), 2);
    EXPECT_EQ(a.case_id, 'a');
    auto bx = elliptic_case_test(BoundaryEllipse<double>(9, 2), -0.8831827, 3, 1e-6);
    EXPECT_EQ(bx.case_id, 'b');
    EXPECT_EQ(bx.layout.variant, Variant::D);
    EXPECT_FALSE(elliptic_case_test(BoundaryEllipse<R>(5, 3), R(1), 2).found());
    // a fully 4-periodic caustic is not reported as elliptic periodic
    EXPECT_FALSE(elliptic_case_test(BoundaryEllipse<R>(5, 3), q(-15, 2), 4).found());
}

TEST(EllipticCase, SymmetryTable) {
    EXPECT_EQ(case_symmetry('a'), Sigma::FlipY);
    EXPECT_EQ(case_symmetry('e'), Sigma::FlipY);
    EXPECT_EQ(case_symmetry('b'), Sigma::FlipX);
    EXPECT_EQ(case_symmetry('d'), Sigma::FlipX);
    EXPECT_EQ(case_symmetry('c'), Sigma::FlipBoth);
}
