// Light-like hexagon: a/b = cot^2(pi/6) closes after 6 bounces.

#include <pellipse/extremal.hpp>

#include <cmath>
#include <cstdio>

int main() {
    using namespace pellipse;
    const double a = 3, b = 1;
    auto found = lightlike_periodic(a, b, 100);
    if (!found) return 1;
    std::printf("period n = %d, rotation k = %d\n", found->n, found->k);
    Trajectory<double> tr = lightlike_trajectory({a, b}, found->n);
    for (const auto& P : tr.vertices) std::printf("(%+.9f, %+.9f)\n", P.x, P.y);
    LightlikePellReport r = lightlike_pell_check(a, b, found->n / 2);
    std::printf("q_hat(0) = %.3e, Pell residual = %.3e\n", r.q_at_zero, r.residual);
    return 0;
}
