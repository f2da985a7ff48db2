#include "eisq/special_functions.hpp"

#include <cmath>
#include <limits>

namespace eisq {

namespace {

constexpr double kBoundA = 400.0;
constexpr double kBoundX = 5000.0;

bool near_nonpositive_integer(Complex z, double tol = 1e-10) {
    if (z.real() > 0.5) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

// gamma(a, x) by the standard series x^a e^{-x} sum_n x^n / (a (a+1) ... (a+n)).
Complex lower_series(Complex a, double x) {
    Complex term = 1.0 / a;
    Complex sum = term;
    for (int n = 1; n < 2000; ++n) {
        term *= x / (a + double(n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(-x + a * std::log(x)) * sum;
}

// Gamma(a, x) = e^{-x + a log x} / (x+1-a - 1(1-a)/(x+3-a - 2(2-a)/(...)))
// evaluated by the modified Lentz algorithm.
Complex upper_cf(Complex a, double x) {
    const double tiny = 1e-290;
    Complex b = x + 1.0 - a;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < 20000; ++i) {
        const Complex an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            const Complex expo = -x + a * std::log(x);
            if (expo.real() > 700.0) fail("overflow", "incomplete gamma overflow");
            return std::exp(expo) * h;
        }
    }
    fail("nonconvergence", "incomplete gamma continued fraction stalled");
}

} // namespace

Complex upper_incomplete_gamma(Complex a, double x) {
    if (!(x > 0.0)) fail("domain", "upper_incomplete_gamma requires x > 0");
    if (std::abs(a) > kBoundA || x > kBoundX)
        fail("overflow", "upper_incomplete_gamma arguments exceed configured bounds");
    if (-x + a.real() * std::log(x) > 700.0)
        fail("overflow", "incomplete gamma overflow");

    if (x < a.real() + 1.0 && !near_nonpositive_integer(a))
        return complex_gamma(a) - lower_series(a, x);
    return upper_cf(a, x);
}

Complex radial_gaussian_moment(Complex u, double a) {
    if (!(a > 0.0)) fail("domain", "radial_gaussian_moment requires a > 0");
    if (!(u.real() > 0.0)) fail("domain", "radial_gaussian_moment requires Re(u) > 0");
    return 0.5 * complex_gamma(0.5 * u) * std::exp(-0.5 * u * std::log(a));
}

} // namespace eisq
