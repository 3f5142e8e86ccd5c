#pragma once

#include <cstdint>
#include <map>

#include "hyperent/errors.hpp"
#include "hyperent/pmf.hpp"
#include "hyperent/rational.hpp"

namespace hyperent {

// Bin(n, 1/2): P(k) = C(n,k) / 2^n.
inline Pmf binomial_pmf(int trials) {
    if (trials < 0) throw validation_error("binomial_pmf: need trials >= 0");
    auto row = binomial_row(trials);
    BigInt denom = pow_int(2, static_cast<unsigned>(trials));
    std::map<std::int64_t, BigInt> weights;
    for (std::int64_t k = 0; k <= trials; ++k) weights[k] = row[static_cast<std::size_t>(k)];
    return Pmf::from_counts(weights, denom);
}

// Bin(n, e): a Bin(n, 1/2) draw conditioned on an even outcome.
// P(k) = C(n,k) / 2^(n-1) for even k; an even draw has probability exactly
// one half, which is why the conditioning simply doubles each mass.
inline Pmf binomial_even_pmf(int trials) {
    if (trials < 1) {
        throw validation_error("binomial_even_pmf: need trials >= 1 (n = 0 is degenerate)");
    }
    auto row = binomial_row(trials);
    BigInt denom = pow_int(2, static_cast<unsigned>(trials - 1));
    std::map<std::int64_t, BigInt> weights;
    for (std::int64_t k = 0; k <= trials; k += 2) weights[k] = row[static_cast<std::size_t>(k)];
    return Pmf::from_counts(weights, denom);
}

// Law of X_{C_n}, the colours seen on a randomly oriented n-cycle:
// P(X = n - k) = C(n, 2k) / 2^(n-1) for 0 <= k <= n/2. The count of
// even-in-degree vertices is twice the count of zero-in-degree vertices,
// which ties this law to Bin(n, e).
inline Pmf cycle_colour_pmf(int n) {
    if (n < 3) throw validation_error("cycle_colour_pmf: need n >= 3");
    auto row = binomial_row(n);
    BigInt denom = pow_int(2, static_cast<unsigned>(n - 1));
    std::map<std::int64_t, BigInt> weights;
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
        weights[n - k] = row[static_cast<std::size_t>(2 * k)];
    }
    return Pmf::from_counts(weights, denom);
}

// Law of X + delta_X where X ~ Bin(n-1, 1/2) and delta_X rounds an odd draw
// up: P(k) = P(X = k) + P(X = k-1) for even k. Coincides with Bin(n, e).
inline Pmf coupling_pmf(int trials) {
    if (trials < 1) throw validation_error("coupling_pmf: need trials >= 1");
    BigInt denom = pow_int(2, static_cast<unsigned>(trials - 1));
    std::map<std::int64_t, BigInt> weights;
    for (std::int64_t k = 0; k <= trials; k += 2) {
        BigInt w = binomial(trials - 1, k) + binomial(trials - 1, k - 1);
        if (w != 0) weights[k] = w;
    }
    return Pmf::from_counts(weights, denom);
}

}  // namespace hyperent
