#include "eisq/fourier.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <vector>

#include "eisq/eisenstein.hpp"
#include "eisq/omega_chf.hpp"
#include "eisq/special_functions.hpp"

namespace eisq {

namespace {

Complex ipow_minus_i(int k) {
    const Complex mi(0.0, -1.0);
    Complex r = 1.0;
    for (int i = 0; i < (k % 4 + 4) % 4; ++i) r *= mi;
    return r;
}

// E_cl samples along one period at height y, completed evaluator.
std::vector<Complex> sample_period(const EisensteinParams& params,
                                   const TestFunctionSpec& phi, double y, int M,
                                   double period, const EvalConfig& cfg) {
    EvalConfig inner = cfg;
    inner.target_abs_error = 0.1 * cfg.target_abs_error;
    std::vector<Complex> out(M);
    for (int j = 0; j < M; ++j) {
        const TauPoint p(period * double(j) / double(M), y);
        out[j] = eval_completed(params, phi, p, inner).value;
    }
    return out;
}

Complex dft_coefficient(const std::vector<Complex>& samples, double freq, double period) {
    const int M = int(samples.size());
    Complex acc = 0.0;
    for (int j = 0; j < M; ++j) {
        const double ph = -2.0 * kPi * freq * period * double(j) / double(M);
        acc += samples[j] * Complex(std::cos(ph), std::sin(ph));
    }
    return acc / double(M);
}

} // namespace

Complex fourier_coefficient_numeric(const EisensteinParams& params,
                                    const TestFunctionSpec& phi, FourierIndex xi,
                                    double y, const EvalConfig& cfg) {
    phi.validate();
    cfg.validate();
    if (!(y > 0.0)) fail("domain", "fourier_coefficient_numeric requires y > 0");
    if (phi.level % xi.den != 0)
        fail("domain", "Fourier index denominator must divide the level");
    if (phi.level != 1)
        fail("level", "numeric Fourier extraction is implemented at level 1");

    const double period = double(phi.level);
    int M = std::max(32, cfg.quadrature_points);
    std::vector<Complex> samples = sample_period(params, phi, y, M, period, cfg);
    Complex prev = dft_coefficient(samples, xi.value(), period);
    for (int round = 0; round < 3; ++round) {
        M *= 2;
        samples = sample_period(params, phi, y, M, period, cfg);
        const Complex cur = dft_coefficient(samples, xi.value(), period);
        if (std::abs(cur - prev) < cfg.target_abs_error) return cur;
        prev = cur;
    }
    fail("nonconvergence", "fourier coefficient failed to stabilize under doubling");
}

Complex whittaker_closed(const EisensteinParams& params, const TauPoint& tau) {
    if (params.k < 1) fail("domain", "whittaker_closed requires k >= 1");
    const Complex s = params.s;
    const int k = params.k;
    const double y = tau.y;

    // polynomial branch at s = k/2 - r
    const Complex rhat = 0.5 * k - s;
    const double rr = std::round(rhat.real());
    Complex omega;
    if (std::abs(rhat - rr) < 1e-12 && rr >= 0.0) {
        omega = omega_polynomial(Complex(4.0 * kPi * y, 0.0), int(rr), s + 0.5 * k,
                                 OmegaBranch::SecondArg);
    } else {
        omega = omega_numeric(y, s + 0.5 * k, s - 0.5 * k);
    }

    const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * tau.tau());
    return 2.0 * std::exp(-(s + 0.5 * k) * std::log(kPi)) * q * ipow_minus_i(k) *
           std::exp(s * std::log(y)) * std::exp(2.0 * s * std::log(2.0 * kPi)) *
           std::exp(-(s - 0.5 * k) * std::log(4.0 * kPi * y)) * omega;
}

Complex finite_whittaker_factor(FourierIndex xi, Complex s, const TestFunctionSpec& phi) {
    phi.validate();
    if (xi.num == 0) fail("domain", "finite_whittaker_factor requires xi != 0");
    if (phi.level % xi.den != 0)
        fail("domain", "Fourier index denominator must divide the level");

    // primes of the level and of the index
    std::vector<long> primes;
    auto add_primes = [&](long v) {
        v = v < 0 ? -v : v;
        for (long p = 2; p * p <= v; ++p) {
            if (v % p) continue;
            if (std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
            while (v % p == 0) v /= p;
        }
        if (v > 1 && std::find(primes.begin(), primes.end(), v) == primes.end())
            primes.push_back(v);
    };
    add_primes(phi.level);
    add_primes(xi.num);
    add_primes(xi.den);

    Complex prod = 1.0;
    for (long p : primes) prod *= local_whittaker_factor(p, xi, s, phi);
    return prod;
}

double coefficient_shift_check(const EisensteinParams& params,
                               const TestFunctionSpec& phi, FourierIndex xi, double y,
                               const EvalConfig& cfg) {
    if (!(xi.value() > 0.0)) fail("domain", "coefficient_shift_check requires xi > 0");
    if (phi.level != 1) fail("level", "coefficient_shift_check requires level 1");

    const Complex lhs = fourier_coefficient_numeric(params, phi, xi, y, cfg);
    const Complex a1 =
        fourier_coefficient_numeric(params, phi, FourierIndex(1), xi.value() * y, cfg);
    const Complex scale = std::exp((params.s - 1.0) * std::log(xi.value())) *
                          finite_whittaker_factor(xi, params.s, phi);
    return std::abs(lhs - scale * a1);
}

NearlyHolomorphicQExpansion q_expansion_nearly_holomorphic(int k, int r, int n_max,
                                                           int y_samples,
                                                           const EvalConfig& cfg) {
    if (k < 4 || k % 2 != 0) fail("domain", "q expansion requires even k >= 4");
    if (r < 0 || r > k / 2 - 1) fail("domain", "q expansion requires 0 <= r <= k/2 - 1");
    if (n_max < 1) fail("domain", "q expansion requires n_max >= 1");

    const int deg0 = (r == k / 2 - 1) ? std::max(r, k - 1 - r) : r;  // n = 0 column
    const int m = std::max({y_samples, r + 3, deg0 + 3});

    // keep e^{2 pi n y} amplification of the evaluator noise under control
    const double y_hi = std::min(1.0, 18.0 / (2.0 * kPi * double(n_max)));
    const double y_lo = 0.62 * y_hi;

    EisensteinParams params;
    params.k = k;
    params.s = Complex(0.5 * k - r, 0.0);
    TestFunctionSpec phi;
    phi.weight = k;

    EvalConfig inner = cfg;
    inner.target_abs_error = std::min(cfg.target_abs_error, 1e-13);

    // extract a_n(y_i) for all n in one DFT pass per height
    const int Mdft = std::max(64, 8 * n_max);
    std::vector<double> ys(m), Ys(m);
    Eigen::MatrixXcd bn(m, n_max + 1);
    for (int i = 0; i < m; ++i) {
        const double y = y_lo * std::pow(y_hi / y_lo, double(i) / double(m - 1));
        ys[i] = y;
        Ys[i] = 1.0 / (4.0 * kPi * y);
        std::vector<Complex> samples(Mdft);
        for (int j = 0; j < Mdft; ++j) {
            const TauPoint p(double(j) / double(Mdft), y);
            samples[j] = eval_completed(params, phi, p, inner).value;
        }
        for (int n = 0; n <= n_max; ++n) {
            Complex acc = 0.0;
            for (int j = 0; j < Mdft; ++j) {
                const double ph = -2.0 * kPi * double(n) * double(j) / double(Mdft);
                acc += samples[j] * Complex(std::cos(ph), std::sin(ph));
            }
            acc /= double(Mdft);
            bn(i, n) = acc * std::exp(2.0 * kPi * double(n) * y) * std::pow(y, -0.5 * k);
        }
    }

    NearlyHolomorphicQExpansion out;
    out.k = k;
    out.depth = r;
    out.n_max = n_max;

    // per-column Vandermonde least squares in Y, one guard column above the
    // asserted degree
    std::map<std::pair<int, int>, Complex> raw;
    for (int n = 0; n <= n_max; ++n) {
        const int deg = (n == 0) ? deg0 : r;
        const int cols = deg + 2;  // one extra column checks the degree claim
        Eigen::MatrixXcd V(m, cols);
        for (int i = 0; i < m; ++i) {
            double Yp = 1.0;
            for (int j = 0; j < cols; ++j) {
                V(i, j) = Yp;
                Yp *= Ys[i];
            }
        }
        const Eigen::VectorXcd c = V.colPivHouseholderQr().solve(bn.col(n));
        const Eigen::VectorXcd resid = V * c - bn.col(n);
        double scale = 0.0;
        for (int i = 0; i < m; ++i) scale = std::max(scale, std::abs(bn(i, n)));
        scale = std::max(scale, 1.0);
        if (resid.lpNorm<Eigen::Infinity>() > 1e-6 * scale)
            fail("fit_degree", "q expansion residual exceeds tolerance at degree r");
        // guard column: the Y^{deg+1} coefficient must be noise
        const double ytyp = std::pow(Ys[m / 2], deg + 1);
        if (n >= 1 && std::abs(c(cols - 1)) * ytyp > 1e-5 * scale)
            fail("fit_degree", "q expansion needs Y-degree above r (almost-holomorphy failure)");
        for (int j = 0; j < deg + 1; ++j) raw[{j, n}] = c(j);
    }

    // normalize by the recorded prefactor c(0, 1)
    Complex pref = raw[{0, 1}];
    if (std::abs(pref) < 1e-30) pref = 1.0;
    out.prefactor = pref;
    for (auto& [jn, c] : raw) out.coeffs[jn] = c / pref;
    return out;
}

} // namespace eisq
