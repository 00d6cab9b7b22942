#include <pellipse/extremal.hpp>
#include <pellipse/jacobi.hpp>
#include <pellipse/quadrature.hpp>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace pellipse;

TEST(Jacobi, CompleteIntegralAgainstBoost) {
    for (double k : {0.0, 0.1, 0.5, 0.8, 0.95, 0.999}) EXPECT_NEAR(complete_K(k), boost::math::ellint_1(k), 1e-13) << k;
    EXPECT_NEAR(complete_K(0.8), 1.9953027776647296, 1e-14);
    EXPECT_NEAR(complete_K(0), M_PI / 2, 1e-15);
}

TEST(Jacobi, FunctionsAgainstBoost) {
    std::mt19937 g(3);
    std::uniform_real_distribution<double> ku(0, 0.999), uu(-6, 6);
    for (int i = 0; i < 500; ++i) {
        const double k = ku(g), u = uu(g);
        double cn, dn;
        const double sn = boost::math::jacobi_elliptic(k, u, &cn, &dn);
        JacobiValues v = jacobi_elliptic(u, k);
        EXPECT_NEAR(v.sn, sn, 1e-12) << k << " " << u;
        EXPECT_NEAR(v.cn, cn, 1e-12) << k << " " << u;
        EXPECT_NEAR(v.dn, dn, 1e-12) << k << " " << u;
    }
}

TEST(Jacobi, Identities) {
    std::mt19937 g(4);
    std::uniform_real_distribution<double> ku(0, 0.99), uu(-4, 4);
    for (int i = 0; i < 500; ++i) {
        const double k = ku(g), u = uu(g);
        JacobiValues v = jacobi_elliptic(u, k);
        EXPECT_NEAR(v.sn * v.sn + v.cn * v.cn, 1, 1e-12);
        EXPECT_NEAR(v.dn * v.dn + k * k * v.sn * v.sn, 1, 1e-12);
        // sn is odd and K-antiperiodic in its second half-period
        EXPECT_NEAR(jacobi_elliptic(-u, k).sn, -v.sn, 1e-12);
        EXPECT_NEAR(jacobi_elliptic(u + 2 * complete_K(k), k).sn, -v.sn, 1e-10);
    }
}

TEST(Jacobi, LimitingModuli) {
    for (double u : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
        JacobiValues z = jacobi_elliptic(u, 0.0);
        EXPECT_DOUBLE_EQ(z.sn, std::sin(u));
        EXPECT_DOUBLE_EQ(z.cn, std::cos(u));
        EXPECT_DOUBLE_EQ(z.dn, 1.0);
        JacobiValues o = jacobi_elliptic(u, 1 - 1e-12);
        EXPECT_NEAR(o.sn, std::tanh(u), 1e-6);
        EXPECT_NEAR(o.cn, 1 / std::cosh(u), 1e-6);
    }
    EXPECT_NEAR(jacobi_elliptic(complete_K(0.6), 0.6).sn, 1, 1e-14);
}

TEST(Jacobi, RejectsBadModulus) {
    EXPECT_THROW(complete_K(1.0), DomainError);
    EXPECT_THROW(complete_K(-0.1), DomainError);
    EXPECT_THROW(jacobi_elliptic(0.3, 1.5), DomainError);
    EXPECT_NEAR(agm(1, std::sqrt(2.0) / 2), 0.8472130847939790, 1e-15);
}

TEST(Quadrature, GaussRuleIsExactOnPolynomials) {
    const GaussRule& r = cached_rule(8);
    double wsum = 0;
    for (double w : r.weights) wsum += w;
    EXPECT_NEAR(wsum, 2, 1e-14);
    for (int p = 0; p <= 15; ++p) {
        double exact = (p % 2) ? 0.0 : 2.0 / (p + 1);
        EXPECT_NEAR(gauss_legendre([p](double x) { return std::pow(x, p); }, -1, 1, 8), exact, 1e-14) << p;
    }
}

TEST(Quadrature, AgreesWithTanhSinh) {
    boost::math::quadrature::tanh_sinh<double> ts;
    auto f = [](double x) { return std::exp(-x * x) * std::cos(3 * x); };
    EXPECT_NEAR(integrate(f, -1, 2).value, ts.integrate(f, -1.0, 2.0), 1e-13);
    auto g = [](double x) { return 1 / (1 + 25 * x * x); };
    EXPECT_NEAR(integrate(g, -1, 1).value, ts.integrate(g, -1.0, 1.0), 1e-12);
}

TEST(Quadrature, IntervalIntegralsAgainstTanhSinh) {
    // I1 and I2 against double-exponential integration of the singular integrand,
    // using endpoint distances to keep the square-root singularities accurate.
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    for (auto [a, b, g] : {std::tuple{3.0, 2.0, 1.0}, std::tuple{7.0, 5.0, -4.0}, std::tuple{2.0, 4.0, 0.5}}) {
        KlnResult r = kln_partition(a, b, g);
        const auto c = r.intervals.c;
        const double mid = 0.5 * (c[1] + c[2]);
        auto w = [c, mid](double s, double xc) {
            const double left = s < mid ? -xc : s - c[1];
            const double right = s < mid ? c[2] - s : xc;
            return 1 / std::sqrt(std::fabs((s - c[0]) * (c[3] - s)) * left * right);
        };
        EXPECT_NEAR(r.I1, ts.integrate(w, c[1], c[2]), 1e-10 * r.I1);
        // s = c4 + t^2
        auto v = [c](double t) {
            const double s = c[3] + t * t;
            return 2 / std::sqrt(std::fabs((s - c[0]) * (s - c[1]) * (s - c[2])));
        };
        EXPECT_NEAR(r.I2, es.integrate(v, 0.0, std::numeric_limits<double>::infinity()), 1e-10 * r.I2);
    }
}

TEST(Quadrature, FailureIsReported) {
    EXPECT_THROW(integrate([](double x) { return 1 / x; }, 0, 1), QuadratureFailure);
    EXPECT_THROW(integrate([](double x) { return std::sin(1 / x); }, 1e-6, 1, 1e-13, 16, 64), QuadratureFailure);
}
