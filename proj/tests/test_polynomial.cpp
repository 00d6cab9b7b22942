#include <pellipse/linalg.hpp>
#include <pellipse/polynomial.hpp>
#include <pellipse/roots.hpp>
#include <pellipse/surd.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace pellipse;

TEST(Polynomial, ArithmeticAndEvaluation) {
    Polynomial<Rational> p({Rational(1), Rational(-2), Rational(1)}); // (x-1)^2
    Polynomial<Rational> q = Polynomial<Rational>::linear_root(Rational(1));
    EXPECT_EQ(q * q, p);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(Rational(3)), Rational(4));
    auto [quot, rem] = divmod(p, q);
    EXPECT_EQ(quot, q);
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ((p - p).degree(), -1);
}

TEST(Polynomial, ReversedAndCompose) {
    Polynomial<Rational> p({Rational(1), Rational(2), Rational(3)});
    EXPECT_EQ(p.reversed(3), Polynomial<Rational>({Rational(0), Rational(3), Rational(2), Rational(1)}));
    Polynomial<Rational> inner({Rational(1), Rational(1)});
    // p(1+x) = 6 + 8x + 3x^2
    EXPECT_EQ(p.compose(inner), Polynomial<Rational>({Rational(6), Rational(8), Rational(3)}));
}

TEST(Polynomial, ChebyshevValues) {
    EXPECT_EQ(chebyshev<Rational>(0), Polynomial<Rational>({Rational(1)}));
    EXPECT_EQ(chebyshev<Rational>(2), Polynomial<Rational>({Rational(-1), Rational(0), Rational(2)}));
    const double phi = M_PI / 7;
    for (int n = 0; n <= 12; ++n)
        EXPECT_NEAR(chebyshev<double>(n).eval_double(std::cos(phi)), std::cos(n * phi), 1e-13) << n;
}

TEST(Polynomial, ChebyshevPellIdentity) {
    // T_n^2 - (x^2 - 1) U_{n-1}^2 = 1
    Polynomial<Rational> x2m1({Rational(-1), Rational(0), Rational(1)});
    for (int n = 1; n <= 9; ++n) {
        auto T = chebyshev<Rational>(n), U = chebyshev_u<Rational>(n - 1);
        EXPECT_EQ(T * T - x2m1 * U * U, Polynomial<Rational>({Rational(1)})) << n;
    }
}

TEST(Polynomial, GcdAndSquarefree) {
    auto l1 = Polynomial<Rational>::linear_root(Rational(1, 2));
    auto l2 = Polynomial<Rational>::linear_root(Rational(-3));
    Polynomial<Rational> f = l1 * l1 * l2;
    Polynomial<Rational> sf = squarefree_part(f);
    EXPECT_EQ(sf.degree(), 2);
    EXPECT_EQ(sgn(sf(Rational(1, 2))), 0);
    EXPECT_EQ(sgn(sf(Rational(-3))), 0);
}

TEST(Polynomial, SquareRootOfSquare) {
    Polynomial<double> r({1.5, -2.0, 0.25});
    auto s = poly_sqrt(r * r, 1e-12);
    ASSERT_TRUE(s.has_value());
    for (int k = 0; k <= 2; ++k) EXPECT_NEAR(std::fabs(s->coeff(k)), std::fabs(r.coeff(k)), 1e-12);
    EXPECT_FALSE(poly_sqrt(Polynomial<double>({1.0, 1.0, 1.0}), 1e-12).has_value());
}

TEST(Roots, SturmCountsAndIsolation) {
    // (x-1)(x-2)(x+5)(x^2+1)
    Polynomial<Rational> p = Polynomial<Rational>::linear_root(Rational(1)) *
                             Polynomial<Rational>::linear_root(Rational(2)) *
                             Polynomial<Rational>::linear_root(Rational(-5)) *
                             Polynomial<Rational>({Rational(1), Rational(0), Rational(1)});
    auto s = sturm_sequence(p);
    EXPECT_EQ(count_roots(s, Rational(-10), Rational(10)), 3);
    EXPECT_EQ(count_roots(s, Rational(0), Rational(3, 2)), 1);
    auto r = real_roots(p);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_NEAR(r[0], -5, 1e-13);
    EXPECT_NEAR(r[1], 1, 1e-13);
    EXPECT_NEAR(r[2], 2, 1e-13);
}

TEST(Roots, FloatingAgreesWithExact) {
    std::mt19937 g(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> pool;
        for (int k = -9; k <= 9; ++k) pool.push_back(k);
        std::shuffle(pool.begin(), pool.end(), g);
        // simple roots; repeated roots are ill-conditioned in double
        Polynomial<Rational> p({Rational(1)});
        for (int k = 0; k < 5; ++k) {
            Rational r(pool[static_cast<std::size_t>(k)], 4);
            r.canonicalize();
            p = p * Polynomial<Rational>::linear_root(r);
        }
        auto exact = real_roots(p);
        auto fl = real_roots(p.to_double_poly());
        ASSERT_EQ(exact.size(), 5u) << trial;
        ASSERT_EQ(exact.size(), fl.size()) << trial;
        for (std::size_t i = 0; i < exact.size(); ++i) EXPECT_NEAR(exact[i], fl[i], 1e-9);
    }
}

TEST(Roots, ExactRouteCollapsesMultiplicities) {
    Polynomial<Rational> p = Polynomial<Rational>::linear_root(Rational(1)) * Polynomial<Rational>::linear_root(Rational(1)) *
                             Polynomial<Rational>::linear_root(Rational(-2));
    auto r = real_roots(p);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_DOUBLE_EQ(r[0], -2);
    EXPECT_DOUBLE_EQ(r[1], 1);
}

TEST(Linalg, DeterminantAndNullVector) {
    Matrix<Rational> m{{Rational(2), Rational(1), Rational(3)},
                       {Rational(4), Rational(2), Rational(6)},
                       {Rational(1), Rational(0), Rational(1)}};
    EXPECT_EQ(determinant(m), Rational(0));
    auto v = null_vector(m);
    for (const auto& row : m) {
        Rational acc(0);
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
        EXPECT_EQ(acc, Rational(0));
    }
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
    EXPECT_TRUE(nonzero);
    Matrix<Rational> id{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    EXPECT_EQ(determinant(id), Rational(-2));
}

TEST(Surd, FieldOperations) {
    Surd x(Rational(1), Rational(2), Rational(3)); // 1 + 2 sqrt 3
    Surd y(Rational(-1, 2), Rational(1), Rational(3));
    EXPECT_NEAR((x * y).to_double(), x.to_double() * y.to_double(), 1e-12);
    EXPECT_NEAR((x / y).to_double(), x.to_double() / y.to_double(), 1e-12);
    EXPECT_EQ(x.norm(), Rational(1 - 12));
    EXPECT_TRUE((x - x).is_zero());
}

TEST(Scalar, Literals) {
    EXPECT_TRUE(is_exact_literal("4/3"));
    EXPECT_TRUE(is_exact_literal("-7"));
    EXPECT_FALSE(is_exact_literal("2.5"));
    EXPECT_EQ(parse_rational("-15/2"), Rational(-15, 2));
    EXPECT_DOUBLE_EQ(parse_real("2.5"), 2.5);
    EXPECT_THROW(parse_rational("2.5"), DomainError);
}
