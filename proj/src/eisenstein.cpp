#include "eisq/eisenstein.hpp"

#include <cmath>
#include <vector>

#include "eisq/special_functions.hpp"
#include "eisq/test_function.hpp"
#include "eisq/zeta.hpp"
#include "row_sum.hpp"

namespace eisq {

namespace {

constexpr double kRegionMargin = 0.1;  // 2 Re(s) must exceed 2 + margin

void check_params(const EisensteinParams& params, const TestFunctionSpec& phi) {
    phi.validate();
    if (params.character != CharacterKind::Trivial)
        fail("domain", "evaluation requires the trivial character");
    if (params.k < 1) fail("domain", "evaluators require k >= 1");
    if (phi.weight != params.k)
        fail("domain", "test function weight must match params.k");
}

Complex prefactor(const EisensteinParams& params, double y) {
    const Complex e = params.s + 0.5 * params.k;
    return std::exp(params.s * std::log(y)) * complex_gamma(e) *
           std::exp(-e * std::log(kPi));
}

// smallest eigenvalue of Q(v) = |v1 - v2 conj(tau)|^2 / y (determinant 1)
double min_eigenvalue_Q(const TauPoint& tau) {
    const double T = (1.0 + tau.x * tau.x + tau.y * tau.y) / tau.y;
    return 0.5 * (T - std::sqrt(T * T - 4.0));
}

long residue_mod(long v, long N) { return ((v % N) + N) % N; }

// squarefree divisors of n with the Moebius sign
void squarefree_divisors(long n, std::vector<std::pair<long, int>>& out) {
    out.clear();
    out.push_back({1, +1});
    long m = n < 0 ? -n : n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        const size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) out.push_back({out[i].first * p, -out[i].second});
        while (m % p == 0) m /= p;
    }
    if (m > 1) {
        const size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) out.push_back({out[i].first * m, -out[i].second});
    }
}

struct LatticeSum {
    Complex value{0.0, 0.0};
    double err = 0.0;
};

// The v2 = 0 row: sum over v1 = a (mod N), v1 != 0 of v1^k |v1|^{-k-2s}
//   = N^{-2s} [ zeta_H(2s, a0/N) + (-1)^k zeta_H(2s, a0'/N) ]
Complex axis_row(const EisensteinParams& params, long a, long N) {
    const Complex z = 2.0 * params.s;
    const long ap = (a == 0) ? N : a;        // first positive point
    const long am = (a == 0) ? N : (N - a);  // first positive of the reflection
    const double sign = (params.k % 2 == 0) ? 1.0 : -1.0;
    return std::exp(-z * std::log(double(N))) *
           (hurwitz_zeta(z, double(ap) / N) + sign * hurwitz_zeta(z, double(am) / N));
}

// Shared driver for the direct and primitive lattice sums. For the primitive
// sum the row over v1 is Moebius-filtered to gcd(v1, v2) = 1.
LatticeSum lattice_sum(const EisensteinParams& params, const TestFunctionSpec& phi,
                       const TauPoint& tau, const EvalConfig& cfg, bool primitive,
                       double sum_target) {
    const long N = phi.level;
    const int k = params.k;
    const Complex a = params.s - 0.5 * k;
    const Complex b = params.s + 0.5 * k;
    const detail::RowEngine eng(a, b, k);
    const double sigma2 = 2.0 * params.s.real();

    LatticeSum out;

    // v2 = 0 row
    if (primitive) {
        // primitive vectors on the axis: v1 = +-1 only
        out.value += (k % 2 == 0) ? 2.0 : 0.0;
    } else if (phi.residue_b == 0) {
        out.value += axis_row(params, phi.residue_a, N);
    }

    // across-row tail bound after |n| > M (counts every n, conservative; the
    // primitive row is a subset of the full row, so the same bound applies)
    const double Cs = std::sqrt(kPi) * std::exp(std::lgamma(0.5 * (sigma2 - 1.0)) -
                                                std::lgamma(0.5 * sigma2));
    auto rows_beyond = [&](double M) {
        const double y = tau.y;
        const double t1 = Cs / N * std::pow(y, 1.0 - sigma2) *
                          (std::pow(M, 1.0 - sigma2) +
                           std::pow(M, 2.0 - sigma2) / (sigma2 - 2.0));
        const double t2 = std::pow(y, -sigma2) *
                          (std::pow(M, -sigma2) + std::pow(M, 1.0 - sigma2) / (sigma2 - 1.0));
        return 2.0 * (t1 + t2);
    };

    // at level 1 and even k the rows +-n carry equal values (reflect v -> -v)
    const bool paired = (N == 1 && k % 2 == 0);
    const double row_budget_norm = 2.2;  // sum over n of 1/(1+n^2) both signs
    std::vector<std::pair<long, int>> divisors;

    long n = 0;
    while (true) {
        ++n;
        if (n > cfg.truncation_radius)
            fail("truncation", "row cap exceeded before meeting the tail target");
        for (int sgn : {+1, -1}) {
            if (paired && sgn < 0) continue;
            const long v2 = sgn * n;
            if (!primitive && residue_mod(v2, N) != phi.residue_b) continue;
            const double mult = paired ? 2.0 : 1.0;
            const double beta = double(v2) * tau.y;
            const double offset0 = -double(v2) * tau.x;
            const double eps_row =
                0.25 * sum_target / (row_budget_norm * (1.0 + double(n) * double(n)));
            double rerr = 0.0;
            if (!primitive) {
                out.value += mult * eng.row(beta, double(phi.residue_a) + offset0,
                                            double(N), eps_row, &rerr);
            } else {
                squarefree_divisors(n, divisors);
                for (const auto& [d, mu] : divisors) {
                    const Complex part =
                        eng.row(beta, offset0, double(d),
                                eps_row / double(divisors.size()), &rerr);
                    out.value += mult * double(mu) * part;
                }
            }
            out.err += mult * rerr;
        }
        if (rows_beyond(double(n) + 0.5) <= 0.25 * sum_target) break;
    }
    out.err += rows_beyond(double(n) + 0.5);
    return out;
}

} // namespace

EvalResult eval_direct(const EisensteinParams& params, const TestFunctionSpec& phi,
                       const TauPoint& tau, const EvalConfig& cfg) {
    check_params(params, phi);
    cfg.validate();
    if (!(2.0 * params.s.real() > 2.0 + kRegionMargin))
        fail("convergence_region",
             "eval_direct requires 2 Re(s) > 2 (absolutely convergent region)");
    if (phi.level == 1 && params.k % 2 == 1) return {Complex(0.0, 0.0), 0.0};

    const Complex pref = prefactor(params, tau.y);
    const double sum_target = cfg.target_abs_error / std::abs(pref);
    const LatticeSum S = lattice_sum(params, phi, tau, cfg, false, sum_target);
    return {pref * S.value, std::abs(pref) * S.err};
}

EvalResult eval_primitive(const EisensteinParams& params, const TestFunctionSpec& phi,
                          const TauPoint& tau, const EvalConfig& cfg) {
    check_params(params, phi);
    cfg.validate();
    if (phi.level != 1) fail("level", "eval_primitive requires level N = 1");
    if (!(2.0 * params.s.real() > 2.0 + kRegionMargin))
        fail("convergence_region",
             "eval_primitive requires 2 Re(s) > 2 (absolutely convergent region)");
    if (params.k % 2 == 1) return {Complex(0.0, 0.0), 0.0};

    const Complex zeta2s = riemann_zeta(2.0 * params.s);
    const Complex pref = prefactor(params, tau.y) * zeta2s;
    const double sum_target = cfg.target_abs_error / std::abs(pref);
    const LatticeSum S = lattice_sum(params, phi, tau, cfg, true, sum_target);
    return {pref * S.value, std::abs(pref) * S.err};
}

Complex completed_residue_terms(const EisensteinParams& params) {
    // E_cl units: 2 * delta(omega)/2 * (c_k phi(0)/(s-1) - phi(0)/s);
    // phi_inf(0) = 0 for k >= 1 makes this exactly zero.
    const double phi0 = (params.k == 0) ? 1.0 : 0.0;
    if (phi0 == 0.0) return {0.0, 0.0};
    const Complex ck = symplectic_fourier_eigenvalue(params.k);
    return ck * phi0 / (params.s - 1.0) - phi0 / params.s;
}

EvalResult eval_completed(const EisensteinParams& params, const TestFunctionSpec& phi,
                          const TauPoint& tau, const EvalConfig& cfg) {
    check_params(params, phi);
    cfg.validate();
    if (phi.level != 1)
        fail("level", "eval_completed requires level N = 1 (self-dual finite part)");
    if (params.k == 0)
        fail("pole", "k = 0 with an unramified character has poles at s in {0, 1}");
    if (phi.level == 1 && params.k % 2 == 1) return {Complex(0.0, 0.0), 0.0};

    const int k = params.k;
    const Complex s = params.s;
    const Complex a1 = s + 0.5 * k;
    const Complex a2 = (1.0 - s) + 0.5 * k;
    const Complex ck = symplectic_fourier_eigenvalue(k);
    const double y = tau.y;
    const double ykh = std::pow(y, -0.5 * k);
    const double lam = min_eigenvalue_Q(tau);

    // radius with certified incomplete-gamma tail: on shell r (8r points)
    // |term| <= y^{-k/2} (y Q)^{k/2} * 2 * (2 e^{-x}/x),  x = pi Q >= 2|a| + 2,
    // using |(pi Q)^{-a} Gamma(a, pi Q)| <= 2 e^{-x} x^{-1} there.
    auto shell_bound = [&](double r) {
        const double Q = lam * r * r;
        const double x = kPi * Q;
        if (x < std::max({2.0 * std::abs(a1) + 2.0, 2.0 * std::abs(a2) + 2.0, 4.0}))
            return 1e300;
        return 8.0 * r * std::pow(Q * y, 0.5 * k) * ykh * 4.0 * std::exp(-x) / x;
    };
    long R = 2;
    while (shell_bound(double(R)) > 0.5 * cfg.target_abs_error / 2.0) {
        ++R;
        if (R > 20000)
            fail("truncation", "eval_completed radius cap exceeded");
    }
    // geometric tail: ratio between consecutive shell bounds
    double tail = 0.0;
    {
        const double b1 = shell_bound(double(R + 1));
        const double ratio = shell_bound(double(R + 2)) / b1;
        tail = (ratio < 0.9) ? b1 / (1.0 - ratio) * 2.0 : 1e300;
        if (tail > cfg.target_abs_error) {
            // extend until the geometric bound cooperates
            while (shell_bound(double(R + 1)) / (1.0 - 0.9) * 2.0 >
                       0.5 * cfg.target_abs_error &&
                   R <= 20000)
                ++R;
            tail = shell_bound(double(R + 1)) / (1.0 - 0.9) * 2.0;
        }
    }

    Complex sum = 0.0;
    for (long v2 = -R; v2 <= R; ++v2) {
        for (long v1 = -R; v1 <= R; ++v1) {
            if (v1 == 0 && v2 == 0) continue;
            const Complex w(double(v1) - double(v2) * tau.x, double(v2) * tau.y);
            const double Q = std::norm(w) / y;
            const double x = kPi * Q;
            if (x > 700.0) continue;  // below 1e-300
            Complex wk = 1.0;
            for (int i = 0; i < k; ++i) wk *= w;
            const Complex t1 =
                std::exp(-a1 * std::log(x)) * upper_incomplete_gamma(a1, x);
            const Complex t2 =
                std::exp(-a2 * std::log(x)) * upper_incomplete_gamma(a2, x);
            sum += wk * (t1 + ck * t2);
        }
    }
    const Complex value = ykh * sum + completed_residue_terms(params);
    return {value, tail + 0.5 * cfg.target_abs_error};
}

double automorphy_residual(const EisensteinParams& params, const TestFunctionSpec& phi,
                           const TauPoint& tau, const std::array<long, 4>& gamma,
                           const EvalConfig& cfg) {
    check_params(params, phi);
    const long A = gamma[0], B = gamma[1], C = gamma[2], D = gamma[3];
    if (A * D - B * C != 1) fail("matrix", "automorphy requires det(gamma) = 1");

    const Complex t = tau.tau();
    const Complex denom = double(C) * t + double(D);
    const Complex gt = (double(A) * t + double(B)) / denom;
    const TauPoint gtau(gt.real(), gt.imag());

    const bool in_region = 2.0 * params.s.real() > 2.0 + kRegionMargin;
    auto eval = [&](const TauPoint& p) {
        return in_region ? eval_direct(params, phi, p, cfg)
                         : eval_completed(params, phi, p, cfg);
    };
    const Complex lhs = eval(gtau).value;
    const Complex phase = denom / std::abs(denom);
    Complex factor = 1.0;
    for (int i = 0; i < params.k; ++i) factor *= phase;
    const Complex rhs = factor * eval(tau).value;
    return std::abs(lhs - rhs);
}

double functional_equation_residual(const EisensteinParams& params,
                                    const TestFunctionSpec& phi, const TauPoint& tau,
                                    const EvalConfig& cfg) {
    check_params(params, phi);
    if (phi.level != 1) fail("level", "functional equation check requires N = 1");
    const Complex ck = symplectic_fourier_eigenvalue(params.k);

    EisensteinParams dual = params;
    dual.s = 1.0 - params.s;
    const Complex lhs = eval_completed(params, phi, tau, cfg).value;
    const Complex rhs = ck * eval_completed(dual, phi, tau, cfg).value;
    return std::abs(lhs - rhs);
}

} // namespace eisq
