#include "eisq/field_invariants.hpp"

#include <cmath>

namespace eisq {

double volume_constant(const FieldInvariants& inv) {
    inv.validate();
    return std::pow(2.0, inv.r1) * std::pow(2.0 * kPi, inv.r2) * inv.class_number *
           inv.regulator /
           (inv.roots_of_unity * std::sqrt(double(std::llabs(inv.discriminant))));
}

Complex idele_boundary_integral(CharacterKind character, Complex s, double vol) {
    if (!(s.real() > 0.0)) fail("domain", "idele_boundary_integral requires Re(s) > 0");
    const double delta = (character == CharacterKind::RamifiedAbstract) ? 0.0 : vol;
    return delta / s;
}

} // namespace eisq
