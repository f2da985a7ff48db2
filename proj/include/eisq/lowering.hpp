#ifndef EISQ_LOWERING_HPP
#define EISQ_LOWERING_HPP

#include <functional>
#include <vector>

#include "eisq/qexpansion.hpp"
#include "eisq/types.hpp"

namespace eisq {

// Weight-k classical function together with the finite-difference step used
// by the numeric lowering operator; the lift to the group is
// y^{k/2} e^{i k theta} f(x + iy).
struct WeightedSample {
    std::function<Complex(const TauPoint&)> f;
    int k = 0;
    double h = 0.02;
};

// L on Y-polynomial expansions: each Y^j q^n maps to Y^{j-1} q^n scaled by
// -j/(4 pi); holomorphic columns are annihilated, output depth = max(r-1, 0).
NearlyHolomorphicQExpansion lower_symbolic(const NearlyHolomorphicQExpansion& e, int k);

// L on the lift, reduced to the classical statement: returns the
// weight-(k-2) lifted value -2i y^{(k+2)/2} df/dconj(tau), with central
// differences Richardson-extrapolated from steps h and h/2. "step_size" if
// the two extrapolation stages disagree by more than 10x the target.
Complex lower_numeric(const WeightedSample& sample, const TauPoint& tau,
                      double target = 1e-7);

// Least e <= e_max with the (e+1)-fold numeric L-application below tol
// (relative to the probe scale) at every probe; "not_almost_holomorphic"
// when e_max is exceeded. e_max <= 4.
int almost_holomorphy_degree(const std::function<Complex(const TauPoint&)>& f, int k,
                             const std::vector<TauPoint>& tau_probes, int e_max,
                             double tol);

} // namespace eisq

#endif
