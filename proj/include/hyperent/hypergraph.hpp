#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperent/errors.hpp"

namespace hyperent {

// Edge-count decomposition for a vertex pair: d1 edges contain v1 only,
// d2 contain v2 only, d3 contain both. d1+d3 = deg(v1), d2+d3 = deg(v2).
struct PairOverlap {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;
};

/**
 * An r-uniform multi-hypergraph: n vertices (colours) and m edges (dice),
 * each edge a set of exactly r distinct vertices. Repeated edges are
 * allowed and represent identically coloured dice; isolated vertices are
 * allowed and have degree 0.
 *
 * Edges are stored normalized: each edge ascending, the edge list sorted
 * lexicographically, multiplicity by repetition. Immutable after
 * construction and safe to share across threads.
 */
class Hypergraph {
public:
    Hypergraph(int n, int r, std::vector<std::vector<int>> edges)
        : n_(n), r_(r), edges_(std::move(edges)) {
        if (n_ < 1) throw validation_error("hypergraph: vertex count must be at least 1");
        if (r_ < 2) throw validation_error("hypergraph: edge size r must be at least 2");
        if (edges_.empty()) throw validation_error("hypergraph: edge list must be non-empty");
        for (auto& edge : edges_) {
            if (static_cast<int>(edge.size()) != r_) {
                throw validation_error("hypergraph: edge has " + std::to_string(edge.size()) +
                                       " vertices, expected r=" + std::to_string(r_));
            }
            std::sort(edge.begin(), edge.end());
            for (std::size_t i = 0; i < edge.size(); ++i) {
                if (edge[i] < 0 || edge[i] >= n_) {
                    throw validation_error("hypergraph: vertex " + std::to_string(edge[i]) +
                                           " out of range [0, " + std::to_string(n_) + ")");
                }
                if (i > 0 && edge[i] == edge[i - 1]) {
                    throw validation_error(
                        "hypergraph: edge repeats vertex " + std::to_string(edge[i]) +
                        " (a colour may not appear twice on one die)");
                }
            }
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const { return n_; }
    int edge_size() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    // Number of edges containing v, multiplicity counted.
    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& edge : edges_) {
            if (std::binary_search(edge.begin(), edge.end(), v)) ++d;
        }
        return d;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> deg(static_cast<std::size_t>(n_), 0);
        for (const auto& edge : edges_) {
            for (int v : edge) ++deg[static_cast<std::size_t>(v)];
        }
        return deg;
    }

    // Max degree minus min degree; isolated vertices count with degree 0.
    int degree_gap() const {
        auto deg = degree_sequence();
        auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
        return *hi - *lo;
    }

    PairOverlap pair_overlap(int v1, int v2) const {
        check_vertex(v1);
        check_vertex(v2);
        if (v1 == v2) throw validation_error("pair_overlap: vertices must be distinct");
        PairOverlap o;
        for (const auto& edge : edges_) {
            bool has1 = std::binary_search(edge.begin(), edge.end(), v1);
            bool has2 = std::binary_search(edge.begin(), edge.end(), v2);
            if (has1 && has2) ++o.d3;
            else if (has1) ++o.d1;
            else if (has2) ++o.d2;
        }
        return o;
    }

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && r_ == other.r_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) {
            throw validation_error("vertex " + std::to_string(v) + " out of range [0, " +
                                   std::to_string(n_) + ")");
        }
    }

    int n_;
    int r_;
    std::vector<std::vector<int>> edges_;
};

// The dice problem and its conjectures are posed for m >= n > r >= 2;
// anything else is accepted but flagged, not rejected.
inline bool in_conjecture_regime(int n, int m, int r) {
    return m >= n && n > r && r >= 2;
}

// Cycle C_n: n vertices, edges {i, i+1 mod n}.
inline Hypergraph gen_cycle(int n) {
    if (n < 3) throw validation_error("gen_cycle: need n >= 3");
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Hypergraph(n, 2, std::move(edges));
}

// Circular hypergraph Cy_{n,r}: vertices Z_n, edge i = {i, ..., i+r-1 mod n};
// every vertex lies in exactly r of the n window edges. Cy_{n,2} = C_n.
inline Hypergraph gen_circular(int n, int r) {
    if (r < 2) throw validation_error("gen_circular: need r >= 2");
    if (n <= r) throw validation_error("gen_circular: need n > r");
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> edge(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) edge[static_cast<std::size_t>(j)] = (i + j) % n;
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, r, std::move(edges));
}

enum class SpecialKind { double_edges, star_plus_edge };

// The two benchmark graphs in G_n: a disjoint union of n/2 double edges
// (n even), and a star with centre 0 plus the extra edge {1,2}.
inline Hypergraph gen_special(int n, SpecialKind kind) {
    std::vector<std::vector<int>> edges;
    switch (kind) {
        case SpecialKind::double_edges:
            if (n < 2 || n % 2 != 0) {
                throw validation_error("gen_special: double-edges requires even n >= 2");
            }
            for (int i = 0; i < n / 2; ++i) {
                edges.push_back({2 * i, 2 * i + 1});
                edges.push_back({2 * i, 2 * i + 1});
            }
            break;
        case SpecialKind::star_plus_edge:
            if (n < 3) throw validation_error("gen_special: star-plus-edge requires n >= 3");
            for (int v = 1; v < n; ++v) edges.push_back({0, v});
            edges.push_back({1, 2});
            break;
    }
    return Hypergraph(n, 2, std::move(edges));
}

}  // namespace hyperent
