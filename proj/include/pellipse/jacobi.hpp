#pragma once

// Jacobi elliptic functions and the complete integral K through the
// arithmetic-geometric mean (descending Landen transformation).

#include "scalar.hpp"

#include <cmath>
#include <vector>

namespace pellipse {

struct JacobiValues {
    double sn;
    double cn;
    double dn;
};

inline double agm(double x, double y) {
    for (int i = 0; i < 64 && std::fabs(x - y) > 1e-16 * x; ++i) {
        double m = 0.5 * (x + y);
        y = std::sqrt(x * y);
        x = m;
    }
    return 0.5 * (x + y);
}

/// K(k) = pi / (2 AGM(1, sqrt(1 - k^2))), modulus 0 <= k < 1.
inline double complete_K(double k) {
    if (!(k >= 0) || k >= 1) throw DomainError("modulus must lie in [0, 1)");
    return M_PI / (2 * agm(1.0, std::sqrt((1 - k) * (1 + k))));
}

/// sn, cn, dn of argument u and modulus k via the AGM scale.
inline JacobiValues jacobi_elliptic(double u, double k) {
    if (!(k >= 0) || k >= 1) throw DomainError("modulus must lie in [0, 1)");
    if (k == 0) return {std::sin(u), std::cos(u), 1.0};
    std::vector<double> as{1.0}, cs{k};
    double x = 1.0, y = std::sqrt((1 - k) * (1 + k));
    while (std::fabs(cs.back()) > 1e-16 && as.size() < 64) {
        double xn = 0.5 * (x + y);
        double c = 0.5 * (x - y);
        y = std::sqrt(x * y);
        x = xn;
        as.push_back(x);
        cs.push_back(c);
    }
    const std::size_t N = as.size() - 1;
    double phi = std::ldexp(as[N] * u, static_cast<int>(N));
    double phi_next = phi;
    for (std::size_t n = N; n > 0; --n) {
        phi_next = phi;
        phi = 0.5 * (phi + std::asin(cs[n] / as[n] * std::sin(phi)));
    }
    const double sn = std::sin(phi), cn = std::cos(phi);
    double dn;
    const double den = std::cos(phi_next - phi);
    if (N > 0 && std::fabs(den) > 1e-8)
        dn = cn / den;
    else
        dn = std::sqrt(std::max(0.0, 1 - k * k * sn * sn));
    return {sn, cn, dn};
}

} // namespace pellipse
