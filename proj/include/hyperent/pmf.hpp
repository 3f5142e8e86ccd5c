#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperent/format.hpp"
#include "hyperent/rational.hpp"

namespace hyperent {

/**
 * Exact probability mass function over an integer support.
 *
 * Invariants: support is strictly ascending, probabilities are positive
 * exact rationals (zero-probability points are omitted) and sum to exactly 1.
 */
class Pmf {
public:
    // Builds a Pmf from accumulated weights; drops zero entries and verifies
    // that the total is exactly 1.
    static Pmf from_weights(const std::map<std::int64_t, Rational>& weights) {
        Pmf pmf;
        Rational total = 0;
        for (const auto& [x, p] : weights) {
            if (p < 0) throw std::logic_error("Pmf: negative probability");
            if (p == 0) continue;
            pmf.support_.push_back(x);
            pmf.probs_.push_back(p);
            total += p;
        }
        if (total != 1) throw std::logic_error("Pmf: probabilities do not sum to 1");
        return pmf;
    }

    // Integer-weight counts over a common denominator, e.g. orientation
    // counts over r^m.
    static Pmf from_counts(const std::map<std::int64_t, BigInt>& counts, const BigInt& denom) {
        std::map<std::int64_t, Rational> weights;
        for (const auto& [x, c] : counts) weights[x] = Rational(c, denom);
        return from_weights(weights);
    }

    std::size_t size() const { return support_.size(); }
    const std::vector<std::int64_t>& support() const { return support_; }
    const std::vector<Rational>& probs() const { return probs_; }

    // P[X = x]; zero for points outside the support.
    Rational prob(std::int64_t x) const {
        auto it = std::lower_bound(support_.begin(), support_.end(), x);
        if (it == support_.end() || *it != x) return 0;
        return probs_[static_cast<std::size_t>(it - support_.begin())];
    }

    Rational mean() const {
        Rational m = 0;
        for (std::size_t i = 0; i < support_.size(); ++i) m += Rational(support_[i]) * probs_[i];
        return m;
    }

    Rational variance() const {
        Rational m = mean();
        Rational second = 0;
        for (std::size_t i = 0; i < support_.size(); ++i) {
            second += Rational(support_[i]) * Rational(support_[i]) * probs_[i];
        }
        return second - m * m;
    }

    bool operator==(const Pmf& other) const {
        return support_ == other.support_ && probs_ == other.probs_;
    }

private:
    std::vector<std::int64_t> support_;
    std::vector<Rational> probs_;
};

// Shannon entropy in bits, computed in 64-bit floats from the exact
// probabilities; a point mass gives exactly 0 (convention 0 log 0 = 0).
inline double entropy_bits(const Pmf& pmf) {
    double h = 0.0;
    for (const Rational& p : pmf.probs()) {
        double pd = to_double(p);
        if (pd > 0.0) h -= pd * std::log2(pd);
    }
    return h;
}

// CSV serialization: `x,numerator,denominator,probability_float`; the exact
// fields are authoritative, the float column is a 6-significant-digit view.
inline void write_pmf_csv(std::ostream& os, const Pmf& pmf) {
    os << "x,numerator,denominator,probability_float\n";
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const Rational& p = pmf.probs()[i];
        os << pmf.support()[i] << ',' << numerator(p) << ',' << denominator(p) << ','
           << format_g6(to_double(p)) << '\n';
    }
}

}  // namespace hyperent
