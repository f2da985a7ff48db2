#ifndef EISQ_EISENSTEIN_HPP
#define EISQ_EISENSTEIN_HPP

#include <array>

#include "eisq/types.hpp"

namespace eisq {

// E_cl(tau; s, k, N, (a,b)) =
//   y^s Gamma(s + k/2) pi^{-(s+k/2)}
//     sum_{v = (a,b) mod N, v != 0} (v1 - v2 conj(tau))^k |v1 - v2 conj(tau)|^{-k-2s}
//
// Direct lattice sum, absolutely convergent for 2 Re(s) > 2; certified
// truncation. The trivial character is required; k >= 1; odd k at level 1
// vanishes identically (exact cancellation, returned as 0).
EvalResult eval_direct(const EisensteinParams& params, const TestFunctionSpec& phi,
                       const TauPoint& tau, const EvalConfig& cfg);

// Same value through the unfolding factorization
//   E_cl = zeta(2s) * sum over primitive v (gcd(v1, v2) = 1).
// Level 1 only.
EvalResult eval_primitive(const EisensteinParams& params, const TestFunctionSpec& phi,
                          const TauPoint& tau, const EvalConfig& cfg);

// Completed representation, valid for every s (k >= 1 has no poles): each
// lattice term contributes (pi Q_v)^{-(s+k/2)} Gamma(s+k/2, pi Q_v) plus the
// dual block at exponent 1-s weighted by the symplectic eigenvalue c_k,
// Q_v = |v1 - v2 conj(tau)|^2 / y, plus residue terms that vanish for k >= 1.
// Level 1 only.
EvalResult eval_completed(const EisensteinParams& params, const TestFunctionSpec& phi,
                          const TauPoint& tau, const EvalConfig& cfg);

// delta(omega)/2 * (c_k phi(0)/(s-1) - phi(0)/s) in E_cl normalization;
// identically zero for k >= 1 because phi_inf(0) = 0.
Complex completed_residue_terms(const EisensteinParams& params);

// |E_cl(gamma tau) - ((c tau + d)/|c tau + d|)^k E_cl(tau)| for an integer
// matrix [[a,b],[c,d]] with det = 1 ("matrix" error otherwise). Uses the
// direct evaluator inside its region, the completed one otherwise.
double automorphy_residual(const EisensteinParams& params, const TestFunctionSpec& phi,
                           const TauPoint& tau, const std::array<long, 4>& gamma,
                           const EvalConfig& cfg);

// |E_completed(s) - c_k E_completed(1-s)| at the same tau (level 1).
double functional_equation_residual(const EisensteinParams& params,
                                    const TestFunctionSpec& phi, const TauPoint& tau,
                                    const EvalConfig& cfg);

} // namespace eisq

#endif
