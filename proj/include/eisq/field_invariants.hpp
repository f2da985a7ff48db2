#ifndef EISQ_FIELD_INVARIANTS_HPP
#define EISQ_FIELD_INVARIANTS_HPP

#include "eisq/types.hpp"

namespace eisq {

// Vol(A_1^x / F^x) = 2^{r1} (2 pi)^{r2} h R / (w sqrt(|d|)); equals 1 for Q.
double volume_constant(const FieldInvariants& inv);

// int_{|t|<1} omega(t) |t|^s dt^x = delta(omega)/s, with delta = 0 for a
// ramified character and delta = vol otherwise. Requires Re(s) > 0.
Complex idele_boundary_integral(CharacterKind character, Complex s, double vol);

} // namespace eisq

#endif
