#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "hyperent/canonical.hpp"
#include "hyperent/errors.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/rational.hpp"

namespace hyperent {

inline constexpr std::int64_t kEnumerationBudget = 10'000'000;

// All r-subsets of [0, n) in lexicographic order: the possible edges.
inline std::vector<std::vector<int>> edge_universe(int n, int r) {
    if (r < 2) throw validation_error("edge_universe: need r >= 2");
    if (n < r) {
        throw validation_error("edge_universe: no r-subsets exist for n=" + std::to_string(n) +
                               ", r=" + std::to_string(r));
    }
    std::vector<std::vector<int>> universe;
    std::vector<int> combo(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) combo[static_cast<std::size_t>(i)] = i;
    for (;;) {
        universe.push_back(combo);
        // next r-combination in lex order
        int i = r - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) {
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return universe;
}

// |D_{n,m,r}| as multisets: C(C(n,r) + m - 1, m) by stars and bars.
inline BigInt class_size(int n, int m, int r) {
    BigInt universe = binomial(n, r);
    if (universe < 1) {
        throw validation_error("class_size: no edges exist for n=" + std::to_string(n) +
                               ", r=" + std::to_string(r));
    }
    return binomial(static_cast<std::int64_t>(universe) + m - 1, m);
}

/**
 * Enumerates D_{n,m,r}, all multisets of m edges drawn from the C(n,r)
 * possible edges, in lexicographic order, calling visit(const Hypergraph&)
 * for each. With up_to_iso, exactly one representative per canonical key is
 * visited (the lexicographically first).
 *
 * Refuses with the count estimate when the multiset count exceeds the
 * enumeration budget, and when up_to_iso is requested above the
 * canonicalization cap.
 */
template <typename Visitor>
void enumerate_class(int n, int m, int r, bool up_to_iso, Visitor&& visit) {
    if (m < 1) throw validation_error("enumerate_class: need m >= 1");
    BigInt total = class_size(n, m, r);
    if (total > kEnumerationBudget) {
        throw budget_error("enumerate_class: |D_{" + std::to_string(n) + "," + std::to_string(m) +
                           "," + std::to_string(r) + "}| = " + total.str() + " exceeds budget " +
                           std::to_string(kEnumerationBudget));
    }
    if (up_to_iso && n > kCanonicalCap) {
        throw budget_error("enumerate_class: up-to-iso requires n <= " +
                           std::to_string(kCanonicalCap) + ", got n=" + std::to_string(n));
    }

    const auto universe = edge_universe(n, r);
    const int u = static_cast<int>(universe.size());
    std::unordered_set<std::string> seen;

    // Non-decreasing index vectors over the universe == sorted edge lists.
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        std::vector<std::vector<int>> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (int i : idx) edges.push_back(universe[static_cast<std::size_t>(i)]);
        Hypergraph h(n, r, std::move(edges));
        if (up_to_iso) {
            if (seen.insert(canonical_key(h)).second) visit(h);
        } else {
            visit(h);
        }

        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == u - 1) --i;
        if (i < 0) break;
        int next = idx[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < m; ++j) idx[static_cast<std::size_t>(j)] = next;
    }
}

}  // namespace hyperent
