#include "eisq/special_functions.hpp"

#include <cmath>

namespace eisq {

namespace {

// B_{2n} / (2n (2n-1)) for the Stirling series of log Gamma.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

Complex log_gamma_stirling(Complex z) {
    // valid for |z| >= 12, Re z > 0
    const Complex w = 1.0 / z;
    const Complex w2 = w * w;
    Complex p = w;
    Complex series = 0.0;
    for (double c : kStirling) {
        series += c * p;
        p *= w2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

bool near_nonpositive_integer(Complex z, double tol = 1e-13) {
    if (z.real() > 0.5) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

} // namespace

Complex complex_log_gamma(Complex z) {
    if (z.real() <= 0.0) fail("domain", "complex_log_gamma requires Re z > 0");
    Complex shift = 0.0;
    int guard = 0;
    while (std::abs(z) < 12.0) {
        shift += std::log(z);
        z += 1.0;
        if (++guard > 64) break;
    }
    return log_gamma_stirling(z) - shift;
}

Complex complex_gamma(Complex z) {
    if (near_nonpositive_integer(z))
        fail("pole", "Gamma pole at a non-positive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
    }
    Complex acc = 1.0;
    int guard = 0;
    while (std::abs(z) < 12.0) {
        acc *= z;
        z += 1.0;
        if (++guard > 64) break;
    }
    return std::exp(log_gamma_stirling(z)) / acc;
}

} // namespace eisq
