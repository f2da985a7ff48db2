// Lowering operator. The paper-side operator in Iwasawa coordinates
// (u, x, y, theta) is
//   L = e^{-2 i theta} ( -i y d/dx + y d/dy - (1/2i) d/dtheta ).
// For the lift F(g) = y^{k/2} e^{i k theta} f(x + iy) of a weight-k
// classical function f:
//   L F = e^{i(k-2)theta} y^{k/2} [ -i y f_x + y f_y + (k/2) f - (k/2) f ]
//       = e^{i(k-2)theta} y^{k/2} y (-i f_x + f_y)
//       = -2i y^{(k+2)/2} e^{i(k-2)theta} df/dconj(tau),
// since 2 d/dconj(tau) = d/dx + i d/dy. So L maps the weight-k lift to the
// weight-(k-2) lift of the classical function g = -2i y^2 df/dconj(tau),
// which is the form both the symbolic and the numeric routes implement.
// On Y-expansions (Y = 1/(4 pi y), dY/dconj(tau) = -i/(8 pi y^2)):
//   L (Y^j q^n) = -2i y^2 j Y^{j-1} (-i/(8 pi y^2)) q^n = -(j/(4 pi)) Y^{j-1} q^n.

#include "eisq/lowering.hpp"

#include <cmath>

namespace eisq {

namespace {

// d f / d conj(tau) by central differences; stages = 2 gives the
// Richardson pair (h, h/2), stages = 3 adds h/4 (6th order).
Complex dbar_numeric(const std::function<Complex(const TauPoint&)>& f,
                     const TauPoint& tau, double h, int stages,
                     double* disagreement = nullptr) {
    auto D = [&](double step) {
        const Complex dx =
            (f(TauPoint(tau.x + step, tau.y)) - f(TauPoint(tau.x - step, tau.y))) /
            (2.0 * step);
        const Complex dy =
            (f(TauPoint(tau.x, tau.y + step)) - f(TauPoint(tau.x, tau.y - step))) /
            (2.0 * step);
        return 0.5 * (dx + Complex(0.0, 1.0) * dy);
    };
    const Complex d1 = D(h);
    const Complex d2 = D(0.5 * h);
    const Complex r1 = (4.0 * d2 - d1) / 3.0;
    if (stages == 2) {
        if (disagreement) *disagreement = std::abs(r1 - d2);
        return r1;
    }
    const Complex d3 = D(0.25 * h);
    const Complex r2 = (4.0 * d3 - d2) / 3.0;
    const Complex r3 = (16.0 * r2 - r1) / 15.0;
    // |r3 - r2| conservatively estimates the error of the 4th-order stage
    if (disagreement) *disagreement = std::abs(r3 - r2);
    return r3;
}

} // namespace

NearlyHolomorphicQExpansion lower_symbolic(const NearlyHolomorphicQExpansion& e, int k) {
    NearlyHolomorphicQExpansion out;
    out.k = k - 2;
    out.depth = std::max(e.depth - 1, 0);
    out.n_max = e.n_max;
    out.prefactor = e.prefactor;
    for (const auto& [jn, c] : e.coeffs) {
        const int j = jn.first;
        if (j == 0) continue;  // holomorphic kernel of L
        out.coeffs[{j - 1, jn.second}] = -(double(j) / (4.0 * kPi)) * c;
    }
    return out;
}

Complex lower_numeric(const WeightedSample& sample, const TauPoint& tau, double target) {
    if (!sample.f) fail("domain", "lower_numeric requires a callable sample");
    double h = sample.h;
    if (!(h > 0.0)) fail("domain", "lower_numeric requires h > 0");
    if (h > 0.25 * tau.y) h = 0.25 * tau.y;  // keep the stencil in the half-plane

    // extrapolate the (h, h/2) pair and check it against the refined
    // (h/2, h/4) pair
    double disagreement = 0.0;
    const Complex d = dbar_numeric(sample.f, tau, h, 3, &disagreement);
    if (disagreement > 10.0 * target)
        fail("step_size", "lower_numeric extrapolation stages disagree");
    return Complex(0.0, -2.0) * std::pow(tau.y, 0.5 * (sample.k + 2)) * d;
}

int almost_holomorphy_degree(const std::function<Complex(const TauPoint&)>& f, int k,
                             const std::vector<TauPoint>& tau_probes, int e_max,
                             double tol) {
    if (tau_probes.empty()) fail("domain", "need at least one probe");
    if (e_max < 0 || e_max > 4) fail("domain", "e_max must lie in [0, 4]");

    // classical form of one application: g = -2i y^2 df/dconj(tau)
    auto apply_L = [](const std::function<Complex(const TauPoint&)>& fn) {
        return [fn](const TauPoint& p) {
            const double h = std::min(0.05, 0.2 * p.y);
            const Complex d = dbar_numeric(fn, p, h, 3);
            return Complex(0.0, -2.0) * p.y * p.y * d;
        };
    };

    double scale = 0.0;
    for (const auto& p : tau_probes) scale = std::max(scale, std::abs(f(p)));
    if (scale == 0.0) return 0;

    std::function<Complex(const TauPoint&)> cur = f;
    for (int e = 0; e <= e_max; ++e) {
        std::function<Complex(const TauPoint&)> next = apply_L(cur);
        double mag = 0.0;
        for (const auto& p : tau_probes) mag = std::max(mag, std::abs(next(p)));
        if (mag <= tol * scale) return e;
        cur = next;
    }
    fail("not_almost_holomorphic", "no degree <= e_max annihilates the function");
}

} // namespace eisq
