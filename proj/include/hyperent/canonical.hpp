#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hyperent/errors.hpp"
#include "hyperent/hypergraph.hpp"

namespace hyperent {

// Exhaustive relabeling is O(n!); desk-scale classes only.
inline constexpr int kCanonicalCap = 8;

namespace detail {

// Serializes an edge list as "n<n>r<r>:v.v|v.v|..." — deterministic and
// CSV-safe (no commas).
inline std::string serialize_edges(int n, int r, const std::vector<std::vector<int>>& edges) {
    std::string out = "n" + std::to_string(n) + "r" + std::to_string(r) + ":";
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (e > 0) out += '|';
        for (std::size_t i = 0; i < edges[e].size(); ++i) {
            if (i > 0) out += '.';
            out += std::to_string(edges[e][i]);
        }
    }
    return out;
}

}  // namespace detail

// Minimum over all n! vertex relabelings of the sorted edge multiset.
// Two hypergraphs have equal canonical edges iff they are isomorphic as
// multi-hypergraphs.
//
// With n <= 8 every vertex fits a 4-bit digit, so a sorted edge packs into
// one integer whose numeric order matches the lexicographic order of the
// vertex list; the permutation loop then runs allocation-free.
inline std::vector<std::vector<int>> canonical_edges(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > kCanonicalCap) {
        throw budget_error("canonical_form: n=" + std::to_string(n) + " exceeds cap " +
                           std::to_string(kCanonicalCap));
    }
    const int r = h.edge_size();
    const std::size_t m = h.edges().size();
    std::vector<int> flat;
    flat.reserve(m * static_cast<std::size_t>(r));
    for (const auto& edge : h.edges()) flat.insert(flat.end(), edge.begin(), edge.end());

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> codes(m);
    int digits[kCanonicalCap];
    do {
        for (std::size_t e = 0; e < m; ++e) {
            const int* src = flat.data() + e * static_cast<std::size_t>(r);
            for (int i = 0; i < r; ++i) digits[i] = perm[static_cast<std::size_t>(src[i])];
            for (int i = 1; i < r; ++i) {
                int d = digits[i];
                int j = i - 1;
                while (j >= 0 && digits[j] > d) {
                    digits[j + 1] = digits[j];
                    --j;
                }
                digits[j + 1] = d;
            }
            std::uint64_t code = 0;
            for (int i = 0; i < r; ++i) code = (code << 4) | static_cast<std::uint64_t>(digits[i]);
            codes[e] = code;
        }
        std::sort(codes.begin(), codes.end());
        if (best.empty() || codes < best) best = codes;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<int>> result(m, std::vector<int>(static_cast<std::size_t>(r)));
    for (std::size_t e = 0; e < m; ++e) {
        std::uint64_t code = best[e];
        for (int i = r - 1; i >= 0; --i) {
            result[e][static_cast<std::size_t>(i)] = static_cast<int>(code & 0xF);
            code >>= 4;
        }
    }
    return result;
}

// Canonical key as a printable byte sequence; equal keys iff isomorphic.
inline std::string canonical_key(const Hypergraph& h) {
    return detail::serialize_edges(h.vertex_count(), h.edge_size(), canonical_edges(h));
}

// Key used in reports: the canonical key when the relabeling cap allows it,
// otherwise the stored (normalized) edge list itself.
inline std::string report_key(const Hypergraph& h) {
    if (h.vertex_count() <= kCanonicalCap) return canonical_key(h);
    return detail::serialize_edges(h.vertex_count(), h.edge_size(), h.edges());
}

}  // namespace hyperent
