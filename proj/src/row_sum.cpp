#include "row_sum.hpp"

#include <cmath>

#include "detail_quadrature.hpp"
#include "eisq/error.hpp"
#include "eisq/special_functions.hpp"

namespace eisq::detail {

RowEngine::RowEngine(Complex a, Complex b, int kk) {
    s2 = a + b;
    sigma2 = s2.real();
    if (!(sigma2 > 2.0)) fail("convergence_region", "row engine requires Re(a+b) > 2");
    ephase = std::exp(0.5 * kPi * (std::abs(a.imag()) + std::abs(b.imag())));

    // binomial table
    for (int m = 0; m <= kDerivMax; ++m) {
        kbin[m].assign(m + 1, 1.0);
        for (int i = 1; i < m; ++i) kbin[m][i] = kbin[m - 1][i - 1] + kbin[m - 1][i];
    }

    auto build = [&](Orientation& o, Complex oa, Complex ob, int okk) {
        o.a = oa;
        o.b = ob;
        o.kk = okk;
        o.poch_a.assign(kDerivMax + 3, 1.0);
        o.poch_b.assign(kDerivMax + 3, 1.0);
        o.abs_poch_a.assign(kDerivMax + 3, 1.0);
        o.abs_poch_b.assign(kDerivMax + 3, 1.0);
        for (int i = 1; i <= kDerivMax + 2; ++i) {
            o.poch_a[i] = o.poch_a[i - 1] * (oa + double(i - 1));
            o.poch_b[i] = o.poch_b[i - 1] * (ob + double(i - 1));
            o.abs_poch_a[i] = std::abs(o.poch_a[i]);
            o.abs_poch_b[i] = std::abs(o.poch_b[i]);
        }
        // series coefficients of (1 + iz)^{-a} (1 - iz)^{-b}
        std::vector<Complex> ca(kSeriesMax), cb(kSeriesMax);
        ca[0] = cb[0] = 1.0;
        for (int m = 1; m < kSeriesMax; ++m) {
            // C(-a, m) i^m and C(-b, m) (-i)^m via recurrences
            ca[m] = ca[m - 1] * (-oa - double(m - 1)) / double(m) * Complex(0.0, 1.0);
            cb[m] = cb[m - 1] * (-ob - double(m - 1)) / double(m) * Complex(0.0, -1.0);
        }
        o.g.assign(kSeriesMax, 0.0);
        for (int j = 0; j < kSeriesMax; ++j) {
            Complex acc = 0.0;
            for (int m = 0; m <= j; ++m) acc += ca[m] * cb[j - m];
            o.g[j] = acc;
        }
        const double rho = 0.75;
        auto amp = [&](Complex c) {
            const double re = c.real();
            const double lo = 1.0 - rho, hi = 1.0 + rho;
            const double mag = re >= 0.0 ? std::pow(lo, -re) : std::pow(hi, -re);
            return mag * std::exp(std::abs(c.imag()) * 0.9);
        };
        o.g_bound_M = amp(oa) * amp(ob);
    };
    build(orient[0], a, b, kk);
    build(orient[1], b, a, -kk);

    inv_pj.assign(kSeriesMax, 0.0);
    for (int j = 0; j < kSeriesMax; ++j) inv_pj[j] = 1.0 / (s2 - 1.0 + double(j));

    for (int m = 0; m <= kDerivMax; ++m) {
        double acc = 0.0;
        for (int i = 0; i <= m; ++i)
            acc += kbin[m][i] * orient[0].abs_poch_a[i] * orient[0].abs_poch_b[m - i];
        em_khat[m] = acc;
    }
}

Complex RowEngine::h(int o, double beta, double t) const {
    // rho^{-(a+b)} e^{i kk theta}
    const double r2 = t * t + beta * beta;
    const int kk = orient[o].kk;
    Complex base;
    if (s2.imag() == 0.0) {
        base = std::pow(r2, -0.5 * sigma2);
    } else {
        base = std::exp(-0.5 * s2 * std::log(r2));
    }
    if (kk == 0) return base;
    const Complex u = Complex(t, beta) / std::sqrt(r2);
    Complex up = 1.0;
    int n = kk > 0 ? kk : -kk;
    for (int i = 0; i < n; ++i) up *= u;
    return kk > 0 ? base * up : base / up;
}

void RowEngine::derivs(int o, double beta, double t, int m_max, Complex* out) const {
    // h^{(m)}(t) = (-1)^m sum_i C(m,i) (a)_i (b)_{m-i} wp^{-a-i} wm^{-b-(m-i)}
    // with wp^{-a-i} wm^{-b-j} = rho^{-(s2+i+j)} u^{kk+j-i}, u = e^{i theta}.
    const Orientation& oo = orient[o];
    const double r2 = t * t + beta * beta;
    const double r = std::sqrt(r2);
    const Complex u = Complex(t, beta) / r;
    const Complex base = (s2.imag() == 0.0) ? Complex(std::pow(r2, -0.5 * sigma2))
                                            : std::exp(-0.5 * s2 * std::log(r2));

    // u^{kk + d} for d = -m_max..m_max
    const int D = m_max;
    Complex upow[2 * kDerivMax + 3];
    {
        Complex ukk = 1.0;
        int n = oo.kk > 0 ? oo.kk : -oo.kk;
        for (int i = 0; i < n; ++i) ukk *= u;
        if (oo.kk < 0) ukk = 1.0 / ukk;
        const Complex uc = std::conj(u);  // 1/u on the unit circle
        upow[D] = ukk;  // d = 0
        for (int d = 1; d <= D; ++d) {
            upow[D + d] = upow[D + d - 1] * u;
            upow[D - d] = upow[D - d + 1] * uc;
        }
    }
    double rinv[kDerivMax + 2];
    rinv[0] = 1.0;
    for (int i = 1; i <= m_max; ++i) rinv[i] = rinv[i - 1] / r;

    for (int m = 0; m <= m_max; ++m) {
        Complex acc = 0.0;
        for (int i = 0; i <= m; ++i) {
            const int j = m - i;
            acc += kbin[m][i] * oo.poch_a[i] * oo.poch_b[j] * rinv[m] * upow[D + j - i];
        }
        out[m] = ((m & 1) ? -1.0 : 1.0) * base * acc;
    }
}

double RowEngine::em_remainder_bound(double L, double t) const {
    // |R| <= |B_{2m}|/(2m)! L^{2m-1} int_t^inf |h^{(2m)}|,  m = kEmOrder
    constexpr double b12_over_12fact = 691.0 / 2730.0 / 479001600.0;
    const double Lp = std::pow(L, 2 * kEmOrder - 1);
    const double integ = em_khat[2 * kEmOrder] * ephase *
                         std::pow(t, 1.0 - sigma2 - 2 * kEmOrder) /
                         (sigma2 + 2 * kEmOrder - 1.0);
    return b12_over_12fact * Lp * integ;
}

Complex RowEngine::integral_tail(int o, double beta, double t0, double eps,
                                 double* err) const {
    const Orientation& oo = orient[o];
    Complex acc = 0.0;

    // bridge panels up to the series region t >= 2 beta
    double X = t0;
    const double series_from = std::max(t0, 2.0 * beta);
    if (series_from > t0 * (1.0 + 1e-12)) {
        const double width = std::max(0.5 * beta, 1e-3);
        double p = t0;
        while (p < series_from - 1e-12) {
            const double q = std::min(p + width, series_from);
            acc += gl15([&](double t) { return h(o, beta, t); }, p, q);
            // certified panel bound from the Bernstein ellipse w.r.t. +-i beta
            const double rho_e =
                std::min(panel_ellipse_rho(p, q, Complex(0.0, beta)),
                         panel_ellipse_rho(p, q, Complex(0.0, -beta)));
            if (rho_e > 1.02) {
                // |h| on the ellipse: distances to the branch points stay
                // >= beta/2 by the width choice; crude sup bound
                const double lo = 0.45 * beta;
                const double hi = std::hypot(q, 2.0 * beta) + beta;
                auto pick = [&](Complex c) {
                    const double re = c.real();
                    return (re >= 0.0 ? std::pow(lo, -re) : std::pow(hi, -re)) *
                           std::exp(std::abs(c.imag()) * kPi);
                };
                const double M = pick(oo.a) * pick(oo.b);
                const double rr = std::pow(rho_e, -30.0);
                if (err) *err += 5.0 * (q - p) * M * rr / (1.0 - 1.0 / (rho_e * rho_e));
            } else {
                if (err) *err += 1e280;  // cannot certify; caller raises t0
            }
            p = q;
        }
        X = series_from;
    }

    // series part: int_X^inf h = X^{1-s2} sum_j g_j (beta/X)^j / (s2 - 1 + j)
    const double z0 = (X > 0.0) ? beta / X : 0.0;
    const double rho = series_rho;
    if (z0 > 0.5 + 1e-9) fail("truncation", "row series region not reached");
    const Complex F = std::exp((1.0 - s2) * std::log(X));
    const double Fmag = std::pow(X, 1.0 - sigma2);
    // pick J for the budget
    int J = 12;
    const double q = z0 / rho;
    while (J < kSeriesMax - 1 &&
           Fmag * oo.g_bound_M * std::pow(q, J) / ((1.0 - q) * (sigma2 - 1.0 + J)) >
               0.25 * eps)
        J += 8;
    Complex S = 0.0;
    double zp = 1.0;
    for (int j = 0; j < J; ++j) {
        S += oo.g[j] * zp * inv_pj[j];
        zp *= z0;
    }
    if (err)
        *err += Fmag * oo.g_bound_M * std::pow(q, J) / ((1.0 - q) * (sigma2 - 1.0 + J));
    return acc + F * S;
}

Complex RowEngine::lattice_tail(int o, double beta, double t0, double L, double eps,
                                double* err) const {
    // invert the EM remainder bound c t^{-(sigma2 + 2m - 1)} <= eps/2 directly
    constexpr double b12_over_12fact = 691.0 / 2730.0 / 479001600.0;
    const double c = b12_over_12fact * std::pow(L, 2 * kEmOrder - 1) *
                     em_khat[2 * kEmOrder] * ephase / (sigma2 + 2 * kEmOrder - 1.0);
    const double tstar =
        std::pow(c / (0.5 * eps), 1.0 / (sigma2 + 2 * kEmOrder - 1.0));

    Complex direct = 0.0;
    double t = t0;
    long guard = 0;
    while (t < tstar) {
        direct += h(o, beta, t);
        t += L;
        if (++guard > 2000000)
            fail("truncation", "lattice tail failed to reach the EM region");
    }

    Complex d[kDerivMax + 1];
    derivs(o, beta, t, kDerivMax - 1, d);

    // Sum_{j>=0} h(t + Lj) = (1/L) int_t^inf h + h(t)/2
    //                        - sum_i B_{2i}/(2i)! L^{2i-1} h^{(2i-1)}(t) + R
    static const double b2f[kEmOrder] = {
        1.0 / 12.0,          -1.0 / 720.0,         1.0 / 30240.0,
        -1.0 / 1209600.0,    1.0 / 47900160.0,     -691.0 / 2730.0 / 479001600.0,
    };
    Complex em = d[0] * 0.5;
    double Lp = 1.0;
    for (int i = 1; i <= kEmOrder; ++i) {
        Lp *= L * L;
        em -= b2f[i - 1] * (Lp / L) * d[2 * i - 1];
    }
    if (err) *err += em_remainder_bound(L, t);
    const Complex integral = integral_tail(o, beta, t, 0.5 * eps * L, err ? err : nullptr);
    return direct + integral / L + em;
}

Complex RowEngine::row(double beta, double offset, double L, double eps,
                       double* err) const {
    if (beta == 0.0) fail("domain", "row engine requires beta != 0");
    const int o = beta > 0.0 ? 0 : 1;
    const double ab = std::abs(beta);

    // reduce offset into [0, L)
    double off = std::fmod(offset, L);
    if (off < 0.0) off += L;

    Complex total = 0.0;
    if (off == 0.0) total += h(o, ab, 0.0);  // the t = 0 lattice point

    const double t_right = (off == 0.0) ? L : off;
    const double t_left = (off == 0.0) ? L : L - off;  // start of reflected lattice
    const double sign = (orient[o].kk % 2 == 0) ? 1.0 : -1.0;

    total += lattice_tail(o, ab, t_right, L, 0.5 * eps, err);
    total += sign * lattice_tail(1 - o, ab, t_left, L, 0.5 * eps, err);
    return total;
}

double RowEngine::row_abs_bound(double beta, double L) const {
    // sum_lattice |h| <= (1/L) int_R rho^{-sigma2} dt + max |h|
    const double ab = std::abs(beta);
    const double Cs = std::sqrt(kPi) *
                      std::exp(std::lgamma(0.5 * (sigma2 - 1.0)) - std::lgamma(0.5 * sigma2));
    return Cs / L * std::pow(ab, 1.0 - sigma2) + std::pow(ab, -sigma2);
}

} // namespace eisq::detail
