#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperent/errors.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/orientation.hpp"
#include "hyperent/pmf.hpp"
#include "hyperent/rational.hpp"

namespace hyperent {

// exact_pmf_enumeration refuses instances with more than 2^30 orientations.
inline constexpr double kEnumerationLog2Cap = 30.0;

inline double orientation_count_log2(const Hypergraph& h) {
    return h.edge_count() * std::log2(static_cast<double>(h.edge_size()));
}

/**
 * Exact law of X_H by iterating all r^m equally likely orientations.
 *
 * The head indices form an odometer over the edge list (edge m-1 moves
 * fastest); in-degrees are updated incrementally per digit change.
 */
inline Pmf exact_pmf_enumeration(const Hypergraph& h) {
    if (orientation_count_log2(h) > kEnumerationLog2Cap) {
        throw budget_error(
            "exact_pmf_enumeration: r^m = " + std::to_string(h.edge_size()) + "^" +
            std::to_string(h.edge_count()) + " exceeds 2^30 orientations; use "
            "inclusion-exclusion (n <= 24) or Monte Carlo instead");
    }
    const int n = h.vertex_count();
    const int m = h.edge_count();
    const int r = h.edge_size();
    const auto& edges = h.edges();

    std::vector<int> digit(static_cast<std::size_t>(m), 0);
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    int hit = 0;  // vertices with indeg > 0
    auto route = [&](int from, int to) {
        if (--indeg[static_cast<std::size_t>(from)] == 0) --hit;
        if (indeg[static_cast<std::size_t>(to)]++ == 0) ++hit;
    };

    for (const auto& edge : edges) {
        if (indeg[static_cast<std::size_t>(edge[0])]++ == 0) ++hit;
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (;;) {
        ++counts[static_cast<std::size_t>(hit)];
        int i = m - 1;
        while (i >= 0 && digit[static_cast<std::size_t>(i)] == r - 1) {
            digit[static_cast<std::size_t>(i)] = 0;
            route(edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(r - 1)],
                  edges[static_cast<std::size_t>(i)][0]);
            --i;
        }
        if (i < 0) break;
        int d = ++digit[static_cast<std::size_t>(i)];
        route(edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)],
              edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]);
    }

    std::map<std::int64_t, BigInt> weighted;
    for (int x = 0; x <= n; ++x) {
        if (counts[static_cast<std::size_t>(x)] > 0) weighted[x] = counts[static_cast<std::size_t>(x)];
    }
    return Pmf::from_counts(weighted, pow_int(r, static_cast<unsigned>(m)));
}

// Inclusion-exclusion over vertex subsets keeps n <= 24 tractable.
inline constexpr int kInclusionExclusionCap = 24;

/**
 * Exact law of X_H via inclusion-exclusion over vertex subsets.
 *
 * For a subset T, the probability that no edge is oriented into T is
 * q(T) = prod over edges E of (r - |E cap T|) / r. Summing q over subsets by
 * size and alternating signs recovers the law of the zero-in-degree count Z,
 * and X = n - Z. Independent of the orientation-enumeration engine; the two
 * must agree exactly wherever both caps hold.
 */
inline Pmf exact_pmf_inclusion_exclusion(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > kInclusionExclusionCap) {
        throw budget_error("exact_pmf_inclusion_exclusion: n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(kInclusionExclusionCap));
    }
    const int m = h.edge_count();
    const int r = h.edge_size();

    std::vector<std::uint32_t> edge_mask;
    edge_mask.reserve(static_cast<std::size_t>(m));
    for (const auto& edge : h.edges()) {
        std::uint32_t mask = 0;
        for (int v : edge) mask |= (1u << v);
        edge_mask.push_back(mask);
    }

    // A[k] = sum over |T| = k of q(T) * r^m, an integer.
    std::vector<BigInt> by_size(static_cast<std::size_t>(n) + 1, 0);
    const bool fits_u64 = m * std::log2(static_cast<double>(r)) <= 62.0;
    const std::uint32_t subsets = 1u << n;
    for (std::uint32_t t = 0; t < subsets; ++t) {
        int k = std::popcount(t);
        if (fits_u64) {
            std::uint64_t product = 1;
            for (std::uint32_t mask : edge_mask) {
                product *= static_cast<std::uint64_t>(r - std::popcount(mask & t));
                if (product == 0) break;
            }
            by_size[static_cast<std::size_t>(k)] += product;
        } else {
            BigInt product = 1;
            for (std::uint32_t mask : edge_mask) {
                product *= r - std::popcount(mask & t);
                if (product == 0) break;
            }
            by_size[static_cast<std::size_t>(k)] += product;
        }
    }

    // P(Z = z) * r^m = sum_{k >= z} (-1)^(k-z) C(k, z) A[k]
    std::map<std::int64_t, BigInt> weighted;
    for (int z = 0; z <= n; ++z) {
        BigInt num = 0;
        for (int k = z; k <= n; ++k) {
            BigInt term = binomial(k, z) * by_size[static_cast<std::size_t>(k)];
            if ((k - z) % 2 == 0) num += term;
            else num -= term;
        }
        if (num != 0) weighted[n - z] = num;
    }
    return Pmf::from_counts(weighted, pow_int(r, static_cast<unsigned>(m)));
}

// Orientation-enumeration threshold for the automatic engine choice.
inline constexpr double kAutoEnumerationLog2Cap = 20.0;

// Picks an exact engine: enumeration when r^m <= 2^20, otherwise
// inclusion-exclusion when n <= 24. Both produce the same Pmf.
inline Pmf exact_pmf_auto(const Hypergraph& h) {
    if (orientation_count_log2(h) <= kAutoEnumerationLog2Cap) return exact_pmf_enumeration(h);
    if (h.vertex_count() <= kInclusionExclusionCap) return exact_pmf_inclusion_exclusion(h);
    throw budget_error("exact pmf: instance too large for both engines (r^m > 2^20 and n > " +
                       std::to_string(kInclusionExclusionCap) + ")");
}

// Monte Carlo estimate: empirical frequencies with per-point standard
// errors sqrt(p(1-p)/N).
struct EmpiricalPmf {
    std::vector<std::int64_t> support;
    std::vector<double> freq;
    std::vector<double> std_error;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMonteCarloBlock = 4096;

/**
 * Empirical law of X_H over independent orientation draws. The sample
 * budget is split into fixed-size blocks with per-block derived seeds, so
 * the result depends only on (H, samples, seed), never on worker count.
 */
inline EmpiricalPmf monte_carlo_pmf(const Hypergraph& h, std::uint64_t samples,
                                    std::uint64_t seed) {
    if (samples < 1) throw validation_error("monte_carlo_pmf: need samples >= 1");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
    std::uint64_t done = 0;
    for (std::uint64_t block = 0; done < samples; ++block) {
        RandomStream rng(derive_seed(seed, block));
        std::uint64_t todo = std::min(kMonteCarloBlock, samples - done);
        for (std::uint64_t i = 0; i < todo; ++i) {
            Orientation o = sample_orientation(h, rng);
            ++counts[static_cast<std::size_t>(colour_count(h, o))];
        }
        done += todo;
    }

    EmpiricalPmf est;
    est.samples = samples;
    est.seed = seed;
    const double inv = 1.0 / static_cast<double>(samples);
    for (std::size_t x = 0; x < counts.size(); ++x) {
        if (counts[x] == 0) continue;
        double p = static_cast<double>(counts[x]) * inv;
        est.support.push_back(static_cast<std::int64_t>(x));
        est.freq.push_back(p);
        est.std_error.push_back(std::sqrt(p * (1.0 - p) * inv));
    }
    return est;
}

// Plug-in entropy of the empirical distribution, in bits.
inline double entropy_bits(const EmpiricalPmf& est) {
    double h = 0.0;
    for (double p : est.freq) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

// P[some edge orients into v] = 1 - ((r-1)/r)^deg(v).
inline Rational hit_probability(const Hypergraph& h, int v) {
    Rational miss(h.edge_size() - 1, h.edge_size());
    return 1 - pow_rational(miss, static_cast<unsigned>(h.degree(v)));
}

/**
 * Exact covariance of the hit indicators of two distinct vertices:
 *
 *   Cov = ((r-2)/r)^d3 ((r-1)/r)^(d1+d2) - ((r-1)/r)^(d1+d2+2 d3)
 *
 * where (d1, d2, d3) is the pair's edge-count decomposition. Never positive;
 * zero exactly when no edge contains both vertices.
 */
inline Rational covariance_pair(const Hypergraph& h, int v1, int v2) {
    PairOverlap o = h.pair_overlap(v1, v2);
    const int r = h.edge_size();
    Rational shared(r - 2, r);
    Rational miss(r - 1, r);
    return pow_rational(shared, static_cast<unsigned>(o.d3)) *
               pow_rational(miss, static_cast<unsigned>(o.d1 + o.d2)) -
           pow_rational(miss, static_cast<unsigned>(o.d1 + o.d2 + 2 * o.d3));
}

struct MomentReport {
    std::vector<Rational> hit_prob;  // per-vertex E[I_v]
    Rational mean;
    Rational variance;
};

// Mean and variance of X_H from the indicator decomposition: the mean is the
// sum of hit probabilities, the variance adds the pairwise covariances.
inline MomentReport exact_moments(const Hypergraph& h) {
    const int n = h.vertex_count();
    MomentReport report;
    report.hit_prob.reserve(static_cast<std::size_t>(n));
    report.mean = 0;
    report.variance = 0;
    for (int v = 0; v < n; ++v) {
        Rational p = hit_probability(h, v);
        report.mean += p;
        report.variance += p * (1 - p);
        report.hit_prob.push_back(std::move(p));
    }
    for (int v1 = 0; v1 < n; ++v1) {
        for (int v2 = v1 + 1; v2 < n; ++v2) {
            report.variance += 2 * covariance_pair(h, v1, v2);
        }
    }
    return report;
}

}  // namespace hyperent
