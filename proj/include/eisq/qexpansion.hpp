#ifndef EISQ_QEXPANSION_HPP
#define EISQ_QEXPANSION_HPP

#include <map>
#include <string>
#include <utility>

#include "eisq/types.hpp"

namespace eisq {

// Truncated polynomial in Y = 1/(4 pi y) with q-series coefficients:
//   f(tau) = prefactor * sum_{j,n} c(j, n) Y^j q^n,  q = e^{2 i pi tau}.
// depth r bounds the Y-degree of the n >= 1 columns; the n = 0 column may
// carry extra Y-powers at the boundary point s = 1 (see q_expansion notes)
// and is stored at its own fitted degree. After dividing by the recorded
// prefactor the coefficient ratios are rational with small denominators.
struct NearlyHolomorphicQExpansion {
    int k = 0;       // weight
    int depth = 0;   // r
    int n_max = 0;
    Complex prefactor{1.0, 0.0};
    std::map<std::pair<int, int>, Complex> coeffs;  // (j, n) -> c(j, n)

    Complex coeff(int j, int n) const {
        auto it = coeffs.find({j, n});
        return it == coeffs.end() ? Complex(0.0, 0.0) : it->second;
    }
    int max_j() const {
        int m = 0;
        for (const auto& [jn, c] : coeffs) m = std::max(m, jn.first);
        return m;
    }
};

// Stable-field-order JSON object {k, r, n_max, prefactor: [re, im],
// coeffs: [{j, n, re, im}]} for diffable regression pins.
std::string to_json(const NearlyHolomorphicQExpansion& e);
NearlyHolomorphicQExpansion qexpansion_from_json(const std::string& text);

// CSV with deterministic row order (j, then n).
std::string to_csv(const NearlyHolomorphicQExpansion& e);

} // namespace eisq

#endif
