#ifndef EISQ_TYPES_HPP
#define EISQ_TYPES_HPP

#include <complex>
#include <cstdint>

#include "eisq/error.hpp"

namespace eisq {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Point x + iy of the upper half-plane.
struct TauPoint {
    double x = 0.0;
    double y = 1.0;

    TauPoint() = default;
    TauPoint(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0)) fail("domain", "TauPoint requires y > 0");
    }
    Complex tau() const { return {x, y}; }
};

enum class CharacterKind { Trivial, UnramifiedAbstract, RamifiedAbstract };

// Spectral parameter, archimedean weight and character flag.
struct EisensteinParams {
    Complex s{2.0, 0.0};
    int k = 4;
    CharacterKind character = CharacterKind::Trivial;
};

// Schwartz-Bruhat test function: finite part = indicator of the congruence
// class (a, b) + N*Zhat^2, archimedean part (v1 + i v2)^k exp(-pi |v|^2).
struct TestFunctionSpec {
    int level = 1;       // N >= 1
    long residue_a = 0;  // 0 <= a < N
    long residue_b = 0;  // 0 <= b < N
    int weight = 0;      // archimedean k >= 0

    void validate() const {
        if (level < 1) fail("domain", "level must be >= 1");
        if (residue_a < 0 || residue_a >= level || residue_b < 0 || residue_b >= level)
            fail("domain", "residue must satisfy 0 <= a,b < N");
        if (weight < 0) fail("domain", "weight must be >= 0");
    }
};

// Convergence engineering knobs for the lattice evaluators and quadratures.
struct EvalConfig {
    long truncation_radius = 4000000;  // cap on lattice rows / shell radius
    double target_abs_error = 1e-10;
    int quadrature_points = 64;

    void validate() const {
        if (truncation_radius < 1) fail("domain", "truncation_radius must be >= 1");
        if (!(target_abs_error > 0)) fail("domain", "target_abs_error must be > 0");
        if (quadrature_points < 4) fail("domain", "quadrature_points must be >= 4");
    }
};

// (r1, r2, h, R, w, d) of a totally real field; Q is (1, 0, 1, 1, 2, 1).
struct FieldInvariants {
    int r1 = 1;
    int r2 = 0;
    int class_number = 1;
    double regulator = 1.0;
    int roots_of_unity = 2;
    std::int64_t discriminant = 1;

    void validate() const {
        if (r1 < 0 || r2 < 0 || r1 + 2 * r2 < 1) fail("domain", "need r1 + 2*r2 >= 1");
        if (class_number < 1) fail("domain", "class_number must be >= 1");
        if (!(regulator > 0)) fail("domain", "regulator must be > 0");
        if (roots_of_unity < 1) fail("domain", "roots_of_unity must be >= 1");
        if (discriminant == 0) fail("domain", "discriminant must be nonzero");
    }

    static FieldInvariants rationals() { return FieldInvariants{}; }
};

struct EvalResult {
    Complex value{0.0, 0.0};
    double certified_error = 0.0;
};

} // namespace eisq

#endif
