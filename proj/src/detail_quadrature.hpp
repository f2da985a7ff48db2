#ifndef EISQ_DETAIL_QUADRATURE_HPP
#define EISQ_DETAIL_QUADRATURE_HPP

// Internal Gauss-Legendre helpers shared by the quadrature-backed operations.

#include <cmath>
#include <utility>

#include "eisq/types.hpp"

namespace eisq::detail {

struct GLNode {
    double x;
    double w;
};

inline constexpr GLNode kGL15[15] = {
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {+0.00000000000000000e+00, 2.02578241925560898e-01},
    {+2.01194093997434514e-01, 1.98431485327111246e-01},
    {+3.94151347077563385e-01, 1.86161000015561878e-01},
    {+5.70972172608538830e-01, 1.66269205816993781e-01},
    {+7.24417731360170070e-01, 1.39570677926153908e-01},
    {+8.48206583410427206e-01, 1.07159220467171773e-01},
    {+9.37273392400705951e-01, 7.03660474881080689e-02},
    {+9.87992518020485377e-01, 3.07532419961186465e-02},
};

template <typename F>
Complex gl15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    Complex acc = 0.0;
    for (const auto& n : kGL15) acc += n.w * f(mid + hw * n.x);
    return hw * acc;
}

// Adaptive panel integration: bisect until the two-half refinement agrees
// with the single-panel value within the local budget. Accumulates an error
// estimate; used where the integrand is smooth but the scale varies.
template <typename F>
Complex adaptive_gl(F&& f, double a, double b, double abs_tol, double* err_acc,
                    int depth = 0) {
    const Complex whole = gl15(f, a, b);
    const double mid = 0.5 * (a + b);
    const Complex left = gl15(f, a, mid);
    const Complex right = gl15(f, mid, b);
    const double diff = std::abs(left + right - whole);
    if (diff < abs_tol || depth >= 28) {
        if (err_acc) *err_acc += diff;
        return left + right;
    }
    return adaptive_gl(f, a, mid, 0.5 * abs_tol, err_acc, depth + 1) +
           adaptive_gl(f, mid, b, 0.5 * abs_tol, err_acc, depth + 1);
}

// Bernstein-ellipse parameter of the panel [a, b] with respect to a
// singularity at z0: rho > 1 measures the analyticity margin.
inline double panel_ellipse_rho(double a, double b, Complex z0) {
    const Complex xi = (2.0 * z0 - (a + b)) / (b - a);
    const double m = std::abs(xi);
    // |xi + sqrt(xi^2 - 1)| for the branch with modulus > 1; the standard
    // bound via the semi-axis sum is monotone in |xi| for |xi| >= 1.
    if (m <= 1.0) return 1.0;
    const Complex r = xi + std::sqrt(xi * xi - 1.0);
    const double rho = std::abs(r);
    return rho > 1.0 ? rho : 1.0 / rho;
}

} // namespace eisq::detail

#endif
