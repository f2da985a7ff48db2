#ifndef EISQ_FOURIER_HPP
#define EISQ_FOURIER_HPP

#include "eisq/qexpansion.hpp"
#include "eisq/types.hpp"

namespace eisq {

// Fourier index xi; at level N indices lie in (1/N) Z.
struct FourierIndex {
    long num = 1;
    long den = 1;  // must divide the level

    FourierIndex() = default;
    FourierIndex(long n, long d = 1) : num(n), den(d) {
        if (d < 1) fail("domain", "FourierIndex denominator must be >= 1");
    }
    double value() const { return double(num) / double(den); }
};

// a_xi(y) = (1/P) int_0^P E_cl(x + iy) e^{-2 i pi xi x} dx with P the
// x-period (P = 1 at level 1), by the trapezoidal rule with doubling of the
// sample count until the change drops below cfg.target_abs_error
// ("nonconvergence" if three doublings fail to stabilize). The completed
// evaluator backs the samples, so any s away from the k = 0 poles works.
Complex fourier_coefficient_numeric(const EisensteinParams& params,
                                    const TestFunctionSpec& phi, FourierIndex xi,
                                    double y, const EvalConfig& cfg);

// Archimedean Whittaker factor of E_cl at tau:
//   2 pi^{-(s+k/2)} e^{2 i pi tau} (-i)^k y^s (2 pi)^{2s} (4 pi y)^{-(s-k/2)}
//     * omega_chf(4 pi y, s + k/2, s - k/2)
// (the 2 pi^{-(s+k/2)} front normalizes the e^{-pi|v|^2} test-function
// convention so that a_1 = whittaker_closed * finite_whittaker_factor holds
// for the implemented E_cl; see the q-expansion cross-checks). Uses the
// polynomial omega branch when s = k/2 - r, the quadrature branch otherwise.
Complex whittaker_closed(const EisensteinParams& params, const TauPoint& tau);

// Product over primes of the local integrals
//   int int |t|^{2s} phi_{f,p}(t(u, 1)) Psi_p(xi u) du d*t.
// At level 1 this is the divisor sum sum_{d | xi} d^{1-2s} (an Euler product
// over p | xi); for p | N the local integral is evaluated from the
// definition by the exact ball decomposition. xi != 0 required.
Complex finite_whittaker_factor(FourierIndex xi, Complex s, const TestFunctionSpec& phi);

// Single local factor at p (exposed for the truncated-sum oracle tests).
Complex local_whittaker_factor(long p, FourierIndex xi, Complex s,
                               const TestFunctionSpec& phi);

// |a_xi(y) - xi^{s-1} W_f(xi, s) a_1(xi y)|: the diag(xi, 1) substitution of
// the coefficient identity a_xi(g) = a_1(diag(xi,1) g), with the archimedean
// part rescaling y -> xi y (times xi^{s-1}) and the finite part contributing
// the local factors. xi > 0 required.
double coefficient_shift_check(const EisensteinParams& params,
                               const TestFunctionSpec& phi, FourierIndex xi, double y,
                               const EvalConfig& cfg);

// Extract a_n(y) for n = 0..n_max at y_samples heights, normalize by
// e^{2 pi n y} y^{-k/2}, and solve the Vandermonde system in Y = 1/(4 pi y)
// for polynomial coefficients of degree <= r (n >= 1 columns; the n = 0
// column is fitted at degree max(r, k-1-r), numeric-only by design).
// "fit_degree" if the degree-r residual exceeds tolerance on an n >= 1
// column. Level 1, k >= 4 even, 0 <= r <= k/2 - 1.
NearlyHolomorphicQExpansion q_expansion_nearly_holomorphic(int k, int r, int n_max,
                                                           int y_samples,
                                                           const EvalConfig& cfg);

} // namespace eisq

#endif
