#ifndef EISQ_TEST_FUNCTION_HPP
#define EISQ_TEST_FUNCTION_HPP

#include "eisq/types.hpp"

namespace eisq {

// Archimedean part (v1 + i v2)^k exp(-pi (v1^2 + v2^2)).
Complex phi_inf(int k, double v1, double v2);

// Scalar c_k with hat(phi_inf) = c_k phi_inf under the symplectic Fourier
// transform with kernel Psi(x1 y2 - x2 y1), computed by 2D quadrature at
// three sample points and checked consistent to 1e-8 (|c_k| = 1).
// "inconsistency" if the sample ratios disagree beyond 1e-6.
Complex symplectic_fourier_eigenvalue(int k);

// Theta sum over v in Z^2 \ {0}, v = (a,b) mod N, of phi_inf evaluated at
// t * Iwasawa(tau)^{-1} * v, truncated at max-norm radius with a certified
// Gaussian tail below cfg.target_abs_error.
Complex theta_sum(const TestFunctionSpec& phi, const TauPoint& tau, double t,
                  const EvalConfig& cfg);

// |LHS - RHS| of the Poisson identity
//   sum_{v in Z^2} phi(t v) = t^{-2} c_k sum_{v in Z^2} phi(v / t)
// for the self-dual level-1 finite part.
double poisson_residual(const TestFunctionSpec& phi, double t, const EvalConfig& cfg);

} // namespace eisq

#endif
