#pragma once

// Gauss-Legendre quadrature with order doubling.

#include "scalar.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace pellipse {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// Legendre roots by Newton iteration from the Chebyshev-like guess.
inline GaussRule gauss_legendre_rule(int n) {
    if (n < 1) throw DomainError("quadrature order must be positive");
    GaussRule g;
    g.nodes.resize(static_cast<std::size_t>(n));
    g.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 1;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        double w = 2 / ((1 - x * x) * dp * dp);
        g.nodes[static_cast<std::size_t>(i)] = -x;
        g.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        g.weights[static_cast<std::size_t>(i)] = w;
        g.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return g;
}

inline const GaussRule& cached_rule(int n) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_legendre_rule(n)).first;
    return it->second;
}

inline double gauss_legendre(const std::function<double(double)>& f, double lo, double hi, int n) {
    const GaussRule& g = cached_rule(n);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double s = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(mid + half * g.nodes[i]);
    return s * half;
}

struct QuadratureResult {
    double value;
    double error_estimate;
    int order;
};

/// Doubles the order from `start` until two successive values agree to tol
/// (relative), up to max_order.
inline QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-13,
                                  int start = 16, int max_order = 2048) {
    double prev = gauss_legendre(f, lo, hi, start);
    for (int n = 2 * start; n <= max_order; n *= 2) {
        double cur = gauss_legendre(f, lo, hi, n);
        double err = std::fabs(cur - prev);
        if (!std::isfinite(cur)) throw QuadratureFailure("non-finite integrand value");
        if (err <= tol * std::max(1.0, std::fabs(cur))) return {cur, err, n};
        prev = cur;
    }
    throw QuadratureFailure("Gauss-Legendre did not converge");
}

} // namespace pellipse
