#ifndef EISQ_OMEGA_CHF_HPP
#define EISQ_OMEGA_CHF_HPP

#include "eisq/rational.hpp"
#include "eisq/types.hpp"

namespace eisq {

// Shimura's confluent hypergeometric omega(z, alpha, beta) on Re(z) > 0
// (m = 1 case). Named omega_chf to keep it apart from the Hecke character.
//
// Polynomial branches:
//   omega_chf(z, n+1, beta) = sum_{k=0}^{n} C(n,k) beta(beta+1)...(beta+k-1) z^{-k}
//   omega_chf(z, alpha, -n) = sum_{k=0}^{n} C(n,k) (1-alpha)(2-alpha)...(k-alpha) z^{-k}
// and omega_chf(z, 1-beta, 1-alpha) = omega_chf(z, alpha, beta) throughout.

struct OmegaArgs {
    Complex z;      // Re(z) > 0
    Complex alpha;
    Complex beta;
};

enum class OmegaBranch { FirstArg, SecondArg };

// FirstArg: omega_chf(z, n+1, beta) with other = beta.
// SecondArg: omega_chf(z, alpha, -n) with other = alpha.
// Exact finite sum; n = 0 returns 1 in both branches. "domain" if Re(z) <= 0.
Complex omega_polynomial(Complex z, int n, Complex other, OmegaBranch branch);

// Same finite sum in exact rational arithmetic (rational z and parameter).
Rational omega_polynomial_rational(const Rational& z, int n, const Rational& other,
                                   OmegaBranch branch);

// omega_chf(4*pi*y, alpha, beta) recovered from numerical evaluation of
//   int_R (x+iy)^{-alpha} (x-iy)^{-beta} exp(-2 i pi x) dx
// and inversion of the closed form
//   integral = exp(-2 pi y) i^{beta-alpha} Gamma(alpha)^{-1} (2 pi)^{alpha+beta}
//              (4 pi y)^{-beta} omega_chf(4 pi y, alpha, beta).
// The quadrature runs where the integral converges absolutely,
// Re(alpha+beta) > 1; outside that region the argument pair is first
// reflected through the symmetry (alpha, beta) -> (1-beta, 1-alpha).
// Raises "convergence" when neither ordering converges and
// "quadrature_failure" when the adaptive scheme cannot meet tolerance.
// Absolute error <= 1e-8 at the default tolerance.
Complex omega_numeric(double y, Complex alpha, Complex beta, double abs_tol = 1e-9);

} // namespace eisq

#endif
