#ifndef EISQ_SPECIAL_FUNCTIONS_HPP
#define EISQ_SPECIAL_FUNCTIONS_HPP

#include "eisq/types.hpp"

namespace eisq {

// Euler Gamma for complex argument. Reflection for Re z < 1/2, recurrence
// raising into |z| >= 12, then the Stirling series with Bernoulli
// coefficients. Relative error ~1e-13 on the validated box
// 0.1 <= |z| <= 50, |Im z| <= 50. Raises "pole" at z in {0, -1, -2, ...}.
Complex complex_gamma(Complex z);

// log Gamma (principal Stirling branch), Re z > 0.
Complex complex_log_gamma(Complex z);

// Upper incomplete gamma Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt for
// complex a and real x > 0. Series for small x, Lentz continued fraction
// otherwise. Relative error ~1e-13.
Complex upper_incomplete_gamma(Complex a, double x);

// int_0^inf t^u exp(-a t^2) dt/t = (1/2) Gamma(u/2) / a^{u/2},
// for a > 0, Re(u) > 0.
Complex radial_gaussian_moment(Complex u, double a);

} // namespace eisq

#endif
