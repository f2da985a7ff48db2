#ifndef EISQ_ROW_SUM_HPP
#define EISQ_ROW_SUM_HPP

// Internal engine for the absolutely convergent lattice sums
//
//   sum over v1 of  h(t),  t = v1 - n*x,  h(t) = (t + i beta)^{-a} (t - i beta)^{-b}
//
// with beta = n*y, (a, b) = (s - k/2, s + k/2), b - a = k an integer. Rows are
// summed directly on a centered midsection; the two infinite tails are
// completed by Euler-Maclaurin with certified remainders. The tail integrals
// use Gauss-Legendre panels up to 2*beta (Bernstein-ellipse error bounds) and
// a binomial series in beta/t beyond. Everything is the plain lattice sum --
// no Poisson summation and no analytic continuation.
//
// Branch notes (t real, beta > 0, principal powers):
//   h(t) = rho^{-(a+b)} e^{i (b-a) theta},  rho = |t + i beta|, theta = arg(t + i beta),
// and for beta < 0 relabel h_{a,b,-beta} = h_{b,a,beta}. Left tails reflect:
//   sum_{t<0} h_{a,b,beta}(t) = e^{i pi (b-a)} sum_{u>0} h_{b,a,beta}(u),  u = -t.

#include <complex>
#include <vector>

#include "eisq/types.hpp"

namespace eisq::detail {

constexpr int kEmOrder = 6;      // EM correction terms use h^(1), ..., h^(11)
constexpr int kDerivMax = 2 * kEmOrder;
constexpr int kSeriesMax = 220;  // binomial series length cap

struct Orientation {
    Complex a, b;                    // exponents in this orientation
    int kk = 0;                      // b - a (integer)
    std::vector<Complex> g;          // series coeffs of (1+iz)^{-a} (1-iz)^{-b}
    double g_bound_M = 0.0;          // max |G| on |z| = rho
    std::vector<double> abs_poch_a;  // |(a)_i|, i = 0..kDerivMax
    std::vector<double> abs_poch_b;
    std::vector<Complex> poch_a;     // (a)_i
    std::vector<Complex> poch_b;
};

struct RowEngine {
    Complex s2;                    // a + b = 2s
    double sigma2 = 0.0;           // Re(a+b)
    double ephase = 1.0;           // e^{(|Im a| + |Im b|) pi/2}
    double series_rho = 0.75;      // Cauchy circle for the binomial series
    Orientation orient[2];         // [0] = (a, b), [1] = (b, a)
    std::vector<Complex> inv_pj;   // 1 / (s2 - 1 + j)
    std::vector<double> kbin[kDerivMax + 1];  // C(m, i)
    double em_khat[kDerivMax + 2];            // sum_i C(m,i)|(a)_i||(b)_{m-i}|

    RowEngine(Complex a, Complex b, int kk);

    // h and its derivatives at one point for an orientation, beta > 0
    Complex h(int o, double beta, double t) const;
    void derivs(int o, double beta, double t, int m_max, Complex* out) const;

    // Euler-Maclaurin remainder bound for lattice step L and tail start t > 0.
    double em_remainder_bound(double L, double t) const;

    // integral of h over [t0, inf), certified within eps (err accumulates).
    Complex integral_tail(int o, double beta, double t0, double eps, double* err) const;

    // sum_{j >= 0} h(t0 + L j), t0 > 0; consumes points until EM applies.
    Complex lattice_tail(int o, double beta, double t0, double L, double eps,
                         double* err) const;

    // full row: sum over the lattice {offset + L j, j in Z} of h with the
    // given signed beta (nonzero). eps is an absolute budget for this row.
    Complex row(double beta, double offset, double L, double eps, double* err) const;

    // closed-form bound on sum_lattice |h| for one row (used across rows)
    double row_abs_bound(double beta, double L) const;
};

} // namespace eisq::detail

#endif
