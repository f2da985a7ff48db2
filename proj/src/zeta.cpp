#include "eisq/zeta.hpp"

#include <cmath>

#include "eisq/special_functions.hpp"

namespace eisq {

namespace {

// B_{2i} for i = 1..9
constexpr double kB2[] = {
    1.0 / 6.0,    -1.0 / 30.0,    1.0 / 42.0,  -1.0 / 30.0,    5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0, 43867.0 / 798.0,
};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

Complex hurwitz_zeta(Complex z, double q, double* err_out) {
    if (!(q > 0.0)) fail("domain", "hurwitz_zeta requires q > 0");
    // The Euler-Maclaurin expansion below also realizes the analytic
    // continuation down to Re(z) > -6 (remainder stays certified there);
    // the defining series itself needs Re(z) > 1.
    if (!(z.real() > -6.0)) fail("domain", "hurwitz_zeta requires Re(z) > -6");
    if (std::abs(z - 1.0) < 1e-14) fail("pole", "hurwitz_zeta pole at z = 1");

    // raise q until the asymptotic tail is sharp
    Complex head = 0.0;
    double Q = q;
    while (Q < 16.0) {
        head += std::exp(-z * std::log(Q));
        Q += 1.0;
    }

    const Complex lQ = std::log(Q);
    Complex tail = std::exp((1.0 - z) * lQ) / (z - 1.0) + 0.5 * std::exp(-z * lQ);

    // + sum_i B_{2i}/(2i)! (z)_{2i-1} Q^{-z-2i+1}, remainder bounded by the
    // first omitted term times |z+2m+1| / (Re z + 2m + 1)
    Complex poch = z;                    // (z)_1
    const int m = 7;
    for (int i = 1; i <= m; ++i) {
        if (i > 1) poch *= (z + double(2 * i - 3)) * (z + double(2 * i - 2));
        tail += kB2[i - 1] / factorial(2 * i) * poch *
                std::exp(-(z + double(2 * i - 1)) * lQ);
    }
    if (err_out) {
        Complex poch_next = poch * (z + double(2 * m - 1)) * (z + double(2 * m));
        const double first_omitted =
            std::abs(kB2[m] / factorial(2 * m + 2) * poch_next) *
            std::exp(-(z.real() + double(2 * m + 1)) * std::log(Q));
        *err_out = first_omitted * std::abs(z + double(2 * m + 1)) /
                   (z.real() + double(2 * m + 1));
    }
    return head + tail;
}

Complex riemann_zeta(Complex z) {
    if (std::abs(z - 1.0) < 1e-14) fail("pole", "zeta pole at z = 1");
    if (z.real() > -0.5) return hurwitz_zeta(z, 1.0);
    // functional equation
    const Complex w = 1.0 - z;
    return std::exp(z * std::log(2.0)) * std::exp((z - 1.0) * std::log(kPi)) *
           std::sin(0.5 * kPi * z) * complex_gamma(w) * hurwitz_zeta(w, 1.0);
}

} // namespace eisq
