#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace hyperent {

// Exact arithmetic backing for all probabilities. Floats appear only in
// entropy values, bound evaluations and Monte Carlo estimates.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline BigInt pow_int(BigInt base, unsigned exp) {
    BigInt result = 1;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    return Rational(pow_int(numerator(base), exp), pow_int(denominator(base), exp));
}

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// Row n of Pascal's triangle: {C(n,0), ..., C(n,n)}.
inline std::vector<BigInt> binomial_row(std::int64_t n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (std::size_t k = 1; k < row.size(); ++k) {
        row[k] = row[k - 1] * (n - static_cast<std::int64_t>(k) + 1) / static_cast<std::int64_t>(k);
    }
    return row;
}

}  // namespace hyperent
