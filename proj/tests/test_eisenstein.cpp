#include <array>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "eisq/eisenstein.hpp"
#include "eisq/special_functions.hpp"
#include "eisq/zeta.hpp"

using eisq::Complex;
using eisq::EisensteinParams;
using eisq::EvalConfig;
using eisq::TauPoint;
using eisq::TestFunctionSpec;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

EvalConfig cfg_with(double target) {
    EvalConfig c;
    c.target_abs_error = target;
    return c;
}

EisensteinParams params(int k, Complex s) {
    EisensteinParams p;
    p.k = k;
    p.s = s;
    return p;
}

TestFunctionSpec phi_of(int k, int level = 1, long a = 0, long b = 0) {
    TestFunctionSpec t;
    t.weight = k;
    t.level = level;
    t.residue_a = a;
    t.residue_b = b;
    return t;
}

// brute-force lattice sum over a square, for cross-checks at modest accuracy
Complex brute_ecl(double x, double y, Complex s, int k, long R) {
    Complex sum = 0.0;
    for (long v2 = -R; v2 <= R; ++v2)
        for (long v1 = -R; v1 <= R; ++v1) {
            if (v1 == 0 && v2 == 0) continue;
            const Complex w(double(v1) - double(v2) * x, double(v2) * y);
            Complex wk = 1.0;
            for (int i = 0; i < k; ++i) wk *= w;
            sum += wk * std::exp(-(s + 0.5 * k) * std::log(std::norm(w)));
        }
    return std::exp(s * std::log(y)) * eisq::complex_gamma(s + 0.5 * k) *
           std::exp(-(s + 0.5 * k) * std::log(kPi)) * sum;
}

} // namespace

TEST_CASE("odd weight vanishes identically at level 1") {
    const EvalConfig cfg = cfg_with(1e-10);
    for (int k : {3, 5, 7}) {
        const auto r =
            eisq::eval_direct(params(k, {2.0 + k, 0.0}), phi_of(k), {0.37, 0.9}, cfg);
        CHECK(r.value == Complex(0.0, 0.0));
    }
}

TEST_CASE("direct evaluator against a brute-force square truncation") {
    const EvalConfig cfg = cfg_with(1e-10);
    const auto r = eisq::eval_direct(params(4, {2.0, 0.0}), phi_of(4), {0.3, 1.1}, cfg);
    const Complex b = brute_ecl(0.3, 1.1, {2.0, 0.0}, 4, 2000);
    // the brute sum carries its own O(R^-2) truncation error
    CHECK(std::abs(r.value - b) < 2e-8);
    CHECK(r.certified_error < 1e-9);
}

TEST_CASE("direct evaluator convergence region guard") {
    const EvalConfig cfg = cfg_with(1e-8);
    try {
        eisq::eval_direct(params(4, {0.3, 0.2}), phi_of(4), {0.0, 1.0}, cfg);
        FAIL("expected a convergence_region error");
    } catch (const eisq::Error& e) {
        CHECK(e.code() == "convergence_region");
    }
}

TEST_CASE("unfolding factorization against the direct sum") {
    const EvalConfig cfg = cfg_with(1e-11);
    struct Case {
        int k;
        Complex s;
        TauPoint tau;
    } cases[] = {
        {4, {2.0, 0.0}, {0.0, 1.0}},
        {4, {3.0, 0.0}, {0.0, 2.0}},
        {6, {3.0, 0.0}, {0.5, 1.0}},
    };
    for (const auto& c : cases) {
        const auto d = eisq::eval_direct(params(c.k, c.s), phi_of(c.k), c.tau, cfg);
        const auto p = eisq::eval_primitive(params(c.k, c.s), phi_of(c.k), c.tau, cfg);
        CHECK(std::abs(d.value - p.value) <= 1e-10 * std::abs(d.value));
    }
}

TEST_CASE("homogeneity of the summand under v -> m v") {
    // the m-fold dilate of a primitive vector contributes m^{-2s} times the
    // primitive term; this is the identity behind the zeta(2s) factor
    const Complex s(2.3, 0.4);
    const int k = 4;
    const TauPoint tau(0.4, 1.3);
    for (long m : {2L, 3L, 5L}) {
        for (auto [v1, v2] : {std::pair<long, long>{1, 2}, {3, 1}, {-2, 5}}) {
            auto term = [&](long a, long b) {
                const Complex w(double(a) - double(b) * tau.x, double(b) * tau.y);
                Complex wk = 1.0;
                for (int i = 0; i < k; ++i) wk *= w;
                return wk * std::exp(-(s + 0.5 * k) * std::log(std::norm(w)));
            };
            const Complex lhs = term(m * v1, m * v2);
            const Complex rhs =
                std::exp(-2.0 * s * std::log(double(m))) * term(v1, v2);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
        }
    }
}

TEST_CASE("completed representation matches the direct sum on the overlap") {
    const EvalConfig cfg = cfg_with(1e-9);
    for (int k : {4, 6}) {
        for (Complex s : {Complex(1.8, 0.0), Complex(2.5, 0.0), Complex(2.2, 0.7)}) {
            const TauPoint tau(0.3, 1.2);
            const auto d = eisq::eval_direct(params(k, s), phi_of(k), tau, cfg);
            const auto c = eisq::eval_completed(params(k, s), phi_of(k), tau, cfg);
            CAPTURE(k);
            CAPTURE(s.real());
            CHECK(std::abs(d.value - c.value) < 5e-9);
        }
    }
}

TEST_CASE("completed representation is finite outside the direct region") {
    const EvalConfig cfg = cfg_with(1e-10);
    const auto c =
        eisq::eval_completed(params(4, {0.3, 0.2}), phi_of(4), {0.0, 1.0}, cfg);
    CHECK(std::isfinite(c.value.real()));
    CHECK(std::isfinite(c.value.imag()));
    // validated through the functional equation
    const double r = eisq::functional_equation_residual(params(4, {0.3, 0.2}),
                                                        phi_of(4), {0.0, 1.0}, cfg);
    CHECK(r < 1e-8);
}

TEST_CASE("residue terms vanish identically for k >= 1") {
    for (int k : {1, 2, 4, 6}) {
        const Complex r = eisq::completed_residue_terms(params(k, {0.7, 0.3}));
        CHECK(r == Complex(0.0, 0.0));
    }
}

TEST_CASE("functional equation residual") {
    const EvalConfig cfg = cfg_with(1e-10);
    // s = 1/2 is the symmetry center: the identity is a c_k tautology
    CHECK(eisq::functional_equation_residual(params(4, {0.5, 0.0}), phi_of(4),
                                             {0.0, 2.0}, cfg) < 1e-10);
    CHECK(eisq::functional_equation_residual(params(4, {2.0, 0.0}), phi_of(4),
                                             {0.0, 1.0}, cfg) < 1e-6);
    CHECK(eisq::functional_equation_residual(params(6, {1.2, 0.7}), phi_of(6),
                                             {0.3, 0.9}, cfg) < 1e-6);
}

TEST_CASE("automorphy residuals") {
    const EvalConfig cfg = cfg_with(1e-10);
    const std::array<long, 4> S{0, -1, 1, 0}, T{1, 1, 0, 1}, TS{1, -1, 1, 0};

    // identity matrix: exactly zero
    CHECK(eisq::automorphy_residual(params(4, {2.0, 0.0}), phi_of(4), {0.3, 1.2},
                                    {1, 0, 0, 1}, cfg) == 0.0);
    // T is pure periodicity
    CHECK(eisq::automorphy_residual(params(4, {2.0, 0.0}), phi_of(4), {0.0, 1.0}, T,
                                    cfg) < 1e-8);
    CHECK(eisq::automorphy_residual(params(4, {2.0, 0.0}), phi_of(4), {0.3, 1.2}, S,
                                    cfg) < 1e-8);
    CHECK(eisq::automorphy_residual(params(6, {3.0, 0.0}), phi_of(6), {0.5, 1.0}, TS,
                                    cfg) < 1e-8);
    // non-unimodular matrix is rejected
    CHECK_THROWS_AS(eisq::automorphy_residual(params(4, {2.0, 0.0}), phi_of(4),
                                              {0.0, 1.0}, {2, 0, 0, 1}, cfg),
                    eisq::Error);
}

TEST_CASE("modulus invariance under SL2(Z) words") {
    const EvalConfig cfg = cfg_with(1e-10);
    const TauPoint tau(0.21, 1.07);
    const auto p = params(4, {2.0, 0.0});
    const auto base = eisq::eval_direct(p, phi_of(4), tau, cfg);
    const std::array<std::array<long, 4>, 4> words = {{
        {0, -1, 1, 0},   // S
        {1, 1, 0, 1},    // T
        {1, -1, 1, 0},   // TS
        {0, -1, 1, -1},  // S T^{-1}
    }};
    for (const auto& g : words) {
        const Complex t = tau.tau();
        const Complex gt =
            (double(g[0]) * t + double(g[1])) / (double(g[2]) * t + double(g[3]));
        const auto moved =
            eisq::eval_direct(p, phi_of(4), TauPoint(gt.real(), gt.imag()), cfg);
        CHECK(std::abs(std::abs(moved.value) - std::abs(base.value)) < 1e-8);
    }
}

TEST_CASE("congruence sums at level N > 1") {
    const EvalConfig cfg = cfg_with(1e-9);
    const int N = 3;
    const auto p = params(3, {2.0, 0.0});  // odd weight is admissible at N > 1
    const auto phi = phi_of(3, N, 1, 2);

    // shifting x by N re-indexes the congruence lattice: pure periodicity
    const TauPoint tau(0.27, 1.1);
    const auto base = eisq::eval_direct(p, phi, tau, cfg);
    CHECK(std::abs(base.value) > 1e-6);  // odd weight does not vanish here
    const auto shifted = eisq::eval_direct(p, phi, TauPoint(tau.x + N, tau.y), cfg);
    CHECK(std::abs(shifted.value - base.value) < 1e-8);

    // brute-force cross-check of the congruence restriction
    Complex sum = 0.0;
    const Complex s = p.s;
    for (long v2 = -800; v2 <= 800; ++v2)
        for (long v1 = -800; v1 <= 800; ++v1) {
            if (v1 == 0 && v2 == 0) continue;
            if (((v1 % N) + N) % N != 1 || ((v2 % N) + N) % N != 2) continue;
            const Complex w(double(v1) - double(v2) * tau.x, double(v2) * tau.y);
            Complex wk = 1.0;
            for (int i = 0; i < 3; ++i) wk *= w;
            sum += wk * std::exp(-(s + 1.5) * std::log(std::norm(w)));
        }
    const Complex pref = std::exp(s * std::log(tau.y)) * eisq::complex_gamma(s + 1.5) *
                         std::exp(-(s + 1.5) * std::log(kPi));
    CHECK(std::abs(base.value - pref * sum) < 2e-7);
}

TEST_CASE("level guards") {
    const EvalConfig cfg = cfg_with(1e-8);
    const auto p = params(4, {2.0, 0.0});
    CHECK_THROWS_AS(eisq::eval_primitive(p, phi_of(4, 2, 1, 1), {0.0, 1.0}, cfg),
                    eisq::Error);
    CHECK_THROWS_AS(eisq::eval_completed(p, phi_of(4, 2, 1, 1), {0.0, 1.0}, cfg),
                    eisq::Error);
}
