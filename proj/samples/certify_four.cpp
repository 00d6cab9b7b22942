// Exact Pell certificate for the 4-periodic caustic gamma = 4/3 of x^2/2 + y^2/4 = 1.

#include <pellipse/extremal.hpp>

#include <iostream>

int main() {
    using namespace pellipse;
    BoundaryEllipse<Rational> E(2, 4);
    PellCertificate<Rational> c = certify(E, Rational(4, 3), 4);
    std::cout << "p_hat = " << c.p_hat << '\n';
    std::cout << "q_hat = " << c.q_hat << '\n';
    std::cout << "residual = " << c.residual << '\n';
    std::cout << "signature (tau1, tau2) = (" << c.tau1 << ", " << c.tau2 << ")\n";
    std::cout << "partition (n, n1) = (" << c.n << ", " << c.n1 << ")\n";
    std::cout << "alternation points = " << c.alternation_count << '\n';
    KlnResult k = kln_partition(2.0, 4.0, 4.0 / 3.0);
    std::cout << "I2/I1 = " << k.ratio << '\n';
    return c.residual == 0 ? 0 : 1;
}
