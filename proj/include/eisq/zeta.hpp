#ifndef EISQ_ZETA_HPP
#define EISQ_ZETA_HPP

#include "eisq/types.hpp"

namespace eisq {

// Hurwitz zeta sum_{j>=0} (q+j)^{-z} for real q > 0, Re(z) > 1, by
// Euler-Maclaurin with a certified remainder. Relative error ~1e-14 for the
// arguments the evaluators use. If err_out is non-null it receives the
// remainder bound actually achieved.
Complex hurwitz_zeta(Complex z, double q, double* err_out = nullptr);

// zeta(z) = hurwitz_zeta(z, 1) for Re(z) > 1; continued by the functional
// equation zeta(z) = 2^z pi^{z-1} sin(pi z / 2) Gamma(1-z) zeta(1-z)
// for Re(z) <= 1 (away from z = 1).
Complex riemann_zeta(Complex z);

} // namespace eisq

#endif
