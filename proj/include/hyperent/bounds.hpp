#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hyperent/errors.hpp"
#include "hyperent/exact_dist.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/pmf.hpp"

namespace hyperent {

inline constexpr double kTwoPiE = 17.079468445347134;  // 2*pi*e
inline constexpr double kPiE = 8.539734222673567;      // pi*e

// Flagging tolerance for bound violations, in bits; absorbs float rounding.
inline constexpr double kBoundTolerance = 1e-9;

// Massey's differential entropy bound on discrete entropy:
// H(X) <= (1/2) log2(2 pi e (Var(X) + 1/12)).
inline double massey_bound(double variance) {
    if (variance < 0) throw validation_error("massey_bound: variance must be non-negative");
    return 0.5 * std::log2(kTwoPiE * (variance + 1.0 / 12.0));
}

// Entropy cap for any H on n vertices: (1/2) log2(n) + (1/2) log2(pi e).
// Follows from the Massey bound with Var(X_H) <= n/4.
inline double theorem2_bound(int n) {
    if (n < 1) throw validation_error("theorem2_bound: need n >= 1");
    return 0.5 * std::log2(static_cast<double>(n)) + 0.5 * std::log2(kPiE);
}

// Lower bound on the cycle's entropy:
// H(X_{C_n}) >= (1/2) log2(n) + (1/2) log2(pi e) - 3/2 - 1/(2 ln(2) (n-1)).
inline double cycle_lower_bound(int n) {
    if (n < 3) throw validation_error("cycle_lower_bound: need n >= 3");
    return 0.5 * std::log2(static_cast<double>(n)) + 0.5 * std::log2(kPiE) - 1.5 -
           1.0 / (2.0 * std::log(2.0) * (n - 1));
}

// The cited lower bound H(Bin(t, 1/2)) >= (1/2) log2(t) + (1/2) log2(pi e)
// - 1/2, as a function of the trial count t. Fails numerically at small t
// (already at t = 1 and t = 2), so callers report rather than assert it.
inline double binomial_entropy_cited_bound(int trials) {
    if (trials < 1) throw validation_error("binomial_entropy_cited_bound: need trials >= 1");
    return 0.5 * std::log2(static_cast<double>(trials)) + 0.5 * std::log2(kPiE) - 0.5;
}

struct BoundReport {
    int n = 0;
    int m = 0;
    int r = 0;
    double entropy = 0.0;
    Rational variance;
    double massey = 0.0;
    double theorem2 = 0.0;
    double slack_massey = 0.0;    // bound minus entropy
    double slack_theorem2 = 0.0;
    std::vector<std::string> violations;
};

// Computes the exact entropy and variance of X_H and checks them against
// the Massey bound and the n-vertex entropy cap.
inline BoundReport verify_bounds(const Hypergraph& h) {
    Pmf pmf = exact_pmf_auto(h);
    BoundReport report;
    report.n = h.vertex_count();
    report.m = h.edge_count();
    report.r = h.edge_size();
    report.entropy = entropy_bits(pmf);
    report.variance = pmf.variance();
    report.massey = massey_bound(to_double(report.variance));
    report.theorem2 = theorem2_bound(report.n);
    report.slack_massey = report.massey - report.entropy;
    report.slack_theorem2 = report.theorem2 - report.entropy;
    if (report.slack_massey < -kBoundTolerance) report.violations.push_back("massey");
    if (report.slack_theorem2 < -kBoundTolerance) report.violations.push_back("theorem2");
    return report;
}

}  // namespace hyperent
