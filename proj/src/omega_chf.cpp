#include "eisq/omega_chf.hpp"

#include <cmath>
#include <vector>

#include "detail_quadrature.hpp"
#include "eisq/special_functions.hpp"

namespace eisq {

namespace {

// exact binomials, n kept small enough for int64
long long binom(int n, int k) {
    if (n > 60) fail("domain", "omega_polynomial order too large");
    long long c = 1;
    for (int j = 1; j <= k; ++j) c = c * (n - j + 1) / j;
    return c;
}

struct Integrand {
    Complex alpha, beta;
    double y;

    Complex g(double x) const {
        return std::pow(Complex(x, y), -alpha) * std::pow(Complex(x, -y), -beta);
    }
    Complex gp(double x) const {
        const Complex wp(x, y), wm(x, -y);
        return -alpha * std::pow(wp, -alpha - 1.0) * std::pow(wm, -beta) -
               beta * std::pow(wp, -alpha) * std::pow(wm, -beta - 1.0);
    }
};

} // namespace

Complex omega_polynomial(Complex z, int n, Complex other, OmegaBranch branch) {
    if (!(z.real() > 0.0)) fail("domain", "omega_polynomial requires Re(z) > 0");
    if (n < 0) fail("domain", "omega_polynomial requires n >= 0");

    const Complex zinv = 1.0 / z;
    Complex zpow = 1.0;
    Complex prod = 1.0;
    Complex sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            // rising factor beta(beta+1)... or falling factor (1-alpha)(2-alpha)...
            prod *= (branch == OmegaBranch::FirstArg) ? (other + double(k - 1))
                                                      : (double(k) - other);
            zpow *= zinv;
        }
        sum += double(binom(n, k)) * prod * zpow;
    }
    return sum;
}

Rational omega_polynomial_rational(const Rational& z, int n, const Rational& other,
                                   OmegaBranch branch) {
    if (!(z.to_double() > 0.0)) fail("domain", "omega_polynomial requires Re(z) > 0");
    if (n < 0) fail("domain", "omega_polynomial requires n >= 0");

    const Rational zinv = Rational(1) / z;
    Rational zpow(1);
    Rational prod(1);
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            prod = prod * ((branch == OmegaBranch::FirstArg)
                               ? (other + Rational(k - 1))
                               : (Rational(k) - other));
            zpow = zpow * zinv;
        }
        sum = sum + Rational(binom(n, k)) * prod * zpow;
    }
    return sum;
}

Complex omega_numeric(double y, Complex alpha, Complex beta, double abs_tol) {
    if (!(y > 0.0)) fail("domain", "omega_numeric requires y > 0");

    // Certified quadrature needs absolute convergence, Re(alpha+beta) > 1.
    // Otherwise evaluate at the reflected pair (1-beta, 1-alpha); the result
    // is the same function value by the symmetry of omega_chf.
    if (alpha.real() + beta.real() <= 1.0) {
        const Complex ra = 1.0 - beta, rb = 1.0 - alpha;
        if (ra.real() + rb.real() <= 1.0)
            fail("convergence",
                 "omega_numeric: integral diverges for Re(alpha+beta) <= 1 in both orderings");
        alpha = ra;
        beta = rb;
    }

    const double p = alpha.real() + beta.real();
    const Integrand f{alpha, beta, y};

    // Scale of the inversion factor decides the quadrature budget.
    const double inv_mag = std::exp(2.0 * kPi * y) * std::abs(complex_gamma(alpha)) *
                           std::pow(2.0 * kPi, -p) *
                           std::pow(4.0 * kPi * y, beta.real()) *
                           std::exp(0.5 * kPi * std::abs(beta.imag()));
    double tol_int = abs_tol / (4.0 * inv_mag);

    // Truncation point: after two integrations by parts the dropped remainder
    // is bounded by (2pi)^{-2} int_{|x|>X} |g''|.
    const double Ephase =
        std::exp(0.5 * kPi * (std::abs(alpha.imag()) + std::abs(beta.imag())));
    const double K2 = std::abs(alpha * (alpha + 1.0)) + 2.0 * std::abs(alpha * beta) +
                      std::abs(beta * (beta + 1.0));
    double X = std::max({8.0, 3.0 * y});
    const double amp = std::max(std::abs(alpha.real()), std::abs(beta.real())) + 2.0;
    auto tail_bound = [&](double Xc) {
        const double fudge = std::pow(1.0 + y * y / (Xc * Xc), 0.5 * amp);
        return 2.0 * K2 * Ephase * fudge * std::pow(Xc, -p - 1.0) /
               ((p + 1.0) * 4.0 * kPi * kPi);
    };
    while (tail_bound(X) > tol_int && X < 2e6) X *= 1.35;
    if (tail_bound(X) > tol_int)
        fail("quadrature_failure", "omega_numeric: tail bound unattainable");

    // main part, one adaptive panel per unit interval (period of the kernel)
    const auto F = [&](double x) {
        return f.g(x) * std::exp(Complex(0.0, -2.0 * kPi * x));
    };
    double err_acc = 0.0;
    Complex main = 0.0;
    const int nseg = int(std::ceil(2.0 * X));
    const double seg = 2.0 * X / nseg;
    // weight the per-segment budget by the local magnitude of g
    std::vector<double> mass(nseg);
    double mass_sum = 0.0;
    for (int j = 0; j < nseg; ++j) {
        const double mid = -X + (j + 0.5) * seg;
        mass[j] = std::pow(std::max(std::abs(mid), y), -p);
        mass_sum += mass[j];
    }
    for (int j = 0; j < nseg; ++j) {
        const double a = -X + j * seg, b = a + seg;
        main += detail::adaptive_gl(F, a, b, tol_int * mass[j] / mass_sum, &err_acc);
    }
    if (err_acc > 4.0 * tol_int)
        fail("quadrature_failure", "omega_numeric: adaptive scheme missed tolerance");

    // integrated-by-parts boundary corrections at +-X
    const Complex i2pi(0.0, 2.0 * kPi);
    const Complex eR = std::exp(Complex(0.0, -2.0 * kPi * X));
    const Complex eL = std::exp(Complex(0.0, 2.0 * kPi * X));
    const Complex tails = eR * (f.g(X) / i2pi + f.gp(X) / (i2pi * i2pi)) -
                          eL * (f.g(-X) / i2pi + f.gp(-X) / (i2pi * i2pi));

    const Complex integral = main + tails;

    // invert the closed form of the confluent-hypergeometric integral lemma
    const Complex iphase = std::exp(Complex(0.0, 0.5 * kPi) * (alpha - beta));
    return integral * std::exp(2.0 * kPi * y) * iphase * complex_gamma(alpha) *
           std::pow(Complex(2.0 * kPi, 0.0), -(alpha + beta)) *
           std::pow(Complex(4.0 * kPi * y, 0.0), beta);
}

} // namespace eisq
