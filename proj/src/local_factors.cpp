// Local Whittaker integrals: for each prime p,
//   I_p = int int |t|^{2s} phi_{f,p}(t (u, 1)) Psi_p(xi u) du d*t ,
// phi_{f,p} the congruence indicator at p, Psi_p(x) = exp(-2 i pi {x}_p),
// Haar measures with Vol(Z_p) = Vol(Z_p^x) = 1.
//
// Writing t = p^m e with e a unit, the u-integral is over the ball
// a/t + p^{nu-m} Z_p (nu = v_p(N)), which integrates the character to
//   p^{m-nu} Psi_p(xi a / (p^m e)) [v_p(xi) >= nu - m] ,
// and the t-indicator pins m (and a unit class mod p^{nu - v_p(b)}) when
// b != 0 mod p^nu, or lets m range over [nu, v_p(xi) + nu] otherwise. The
// remaining unit average is a finite Ramanujan-type sum evaluated exactly.

#include <cmath>
#include <vector>

#include "eisq/fourier.hpp"

namespace eisq {

namespace {

constexpr int kInfValuation = 1 << 20;

int valuation(long v, long p) {
    if (v == 0) return kInfValuation;
    v = v < 0 ? -v : v;
    int m = 0;
    while (v % p == 0) {
        v /= p;
        ++m;
    }
    return m;
}

long unit_part(long v, long p) {
    v = v < 0 ? -v : v;
    while (v && v % p == 0) v /= p;
    return v;
}

long pow_long(long p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1L << 22)) fail("overflow", "local factor modulus too large");
        r *= p;
    }
    return r;
}

long mod_inverse(long a, long mod) {
    long t = 0, nt = 1, r = mod, nr = ((a % mod) + mod) % mod;
    while (nr != 0) {
        const long q = r / nr;
        const long t2 = t - q * nt;
        t = nt;
        nt = t2;
        const long r2 = r - q * nr;
        r = nr;
        nr = r2;
    }
    if (r != 1) fail("domain", "mod_inverse of a non-unit");
    return ((t % mod) + mod) % mod;
}

Complex e_minus(double frac) {
    return {std::cos(2.0 * kPi * frac), -std::sin(2.0 * kPi * frac)};
}

} // namespace

Complex local_whittaker_factor(long p, FourierIndex xi, Complex s,
                               const TestFunctionSpec& phi) {
    phi.validate();
    if (p < 2) fail("domain", "p must be a prime");
    if (xi.num == 0) fail("domain", "local factor requires xi != 0");

    const int nu = valuation(phi.level, p);
    const int v_xi = valuation(xi.num, p) - valuation(xi.den, p);

    auto p_pow_c = [&](Complex e, int m) {  // p^{e*m}
        return std::exp(e * (double(m) * std::log(double(p))));
    };

    if (nu == 0) {
        // unramified level: geometric sum_{m=0}^{v_xi} p^{(1-2s) m}
        Complex acc = 0.0;
        for (int m = 0; m <= v_xi; ++m) acc += p_pow_c(1.0 - 2.0 * s, m);
        return acc;
    }

    const long a = phi.residue_a;
    const long b = phi.residue_b;
    const int v_a = valuation(a, p);
    const int v_b = valuation(b, p);

    // unit average of Psi_p(xi a / (p^m e)) over an admissible unit class
    auto unit_sum = [&](int m, bool constrained) -> Complex {
        // {theta}_p lives mod p^{Lp}, Lp = m - v_xi - v_a
        const int Lp = (a == 0) ? 0 : std::max(0, m - v_xi - v_a);
        const int Lc = constrained ? (nu - v_b) : 0;
        const int Lam = std::max({Lp, Lc, 1});
        const long mod = pow_long(p, Lam);
        const long phi_mod = mod / p * (p - 1);

        long eb = 0;
        if (constrained) eb = (b / pow_long(p, v_b)) % pow_long(p, Lc);

        Complex acc = 0.0;
        const long modc = pow_long(p, Lc);
        const long modp = pow_long(p, Lp);
        for (long e = 0; e < mod; ++e) {
            if (e % p == 0) continue;
            if (constrained && (e % modc) != (eb % modc)) continue;
            if (Lp <= 0) {
                acc += 1.0;
                continue;
            }
            // theta = (unit(xi.num) * unit(a)) / (p^{Lp} unit(xi.den) * e)
            const long num_u = (unit_part(xi.num, p) % modp) * (unit_part(a, p) % modp) % modp;
            const long den_u = (unit_part(xi.den, p) % modp) * (e % modp) % modp;
            long frac_num = num_u * mod_inverse(den_u, modp) % modp;
            if (xi.num < 0) frac_num = (modp - frac_num) % modp;
            acc += e_minus(double(frac_num) / double(modp));
        }
        return acc / double(phi_mod);
    };

    Complex total = 0.0;
    if (v_b < nu) {
        // t-indicator pins m = v_b and a unit class of measure handled above
        const int m = v_b;
        if (v_xi >= nu - m)
            total = p_pow_c(-2.0 * s, m) * p_pow_c(1.0, m - nu) * unit_sum(m, true);
    } else {
        // b = 0 mod p^nu: m ranges over [nu, v_xi + nu]
        for (int m = nu; m <= v_xi + nu; ++m)
            total += p_pow_c(-2.0 * s, m) * p_pow_c(1.0, m - nu) * unit_sum(m, false);
    }
    return total;
}

} // namespace eisq
