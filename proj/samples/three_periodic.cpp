// 3-periodic caustics of x^2/3 + y^2/2 = 1, each checked by simulating one period.

#include <pellipse/caustics.hpp>
#include <pellipse/dynamics.hpp>

#include <cstdio>

int main() {
    using namespace pellipse;
    BoundaryEllipse<Rational> E(3, 2);
    CausticList L = periodic_caustics(E, 3);
    for (const CausticRecord& r : L.gammas) {
        std::printf("gamma = %+.9f  %-16s  n1 = %d  n2 = %d  validated = %s\n", r.gamma, to_string(r.conic).c_str(),
                    r.n1, r.n2, r.validated ? "yes" : "no");
        if (auto v = validation_trajectory(E.to_floating(), r.gamma, 3, ValidationOptions{})) {
            for (const auto& P : v->first.vertices) std::printf("    (%+.6f, %+.6f)\n", P.x, P.y);
        }
    }
    return 0;
}
