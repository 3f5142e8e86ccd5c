#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperent/errors.hpp"
#include "hyperent/hypergraph.hpp"

namespace hyperent {

// One dice roll: heads[i] is the vertex edge i is oriented towards.
struct Orientation {
    std::vector<int> heads;
};

// SplitMix64 finalizer, used to derive per-block seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ (stream * 0xD1B54A32D192ED03ULL));
}

/**
 * The library's random stream: std::mt19937_64 with an explicit
 * rejection-sampling bounded draw. std::uniform_int_distribution is
 * implementation-defined, so it is avoided; given the same seed this
 * stream produces the same draws on every platform.
 */
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    // Uniform draw from [0, bound), bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        // Reject draws below 2^64 mod bound; the rest map uniformly via mod.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = gen_();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::mt19937_64 gen_;
};

// Orients each edge towards a uniformly chosen element, edges consumed in
// stored order: same seed and same hypergraph give the same orientation.
inline Orientation sample_orientation(const Hypergraph& h, RandomStream& rng) {
    Orientation o;
    o.heads.reserve(h.edges().size());
    const auto r = static_cast<std::uint64_t>(h.edge_size());
    for (const auto& edge : h.edges()) {
        o.heads.push_back(edge[static_cast<std::size_t>(rng.next_below(r))]);
    }
    return o;
}

// Per-vertex in-degrees plus the summary counts used in the cycle analysis:
// Z vertices of in-degree zero, E of even in-degree (zero included), and the
// sizes of V_1 and V_2.
struct InDegreeProfile {
    std::vector<int> indeg;
    int zero_count = 0;
    int even_count = 0;
    int ones = 0;
    int twos = 0;
};

inline InDegreeProfile indegree_profile(const Hypergraph& h, const Orientation& o) {
    if (o.heads.size() != h.edges().size()) {
        throw validation_error("indegree_profile: orientation has " +
                               std::to_string(o.heads.size()) + " heads for " +
                               std::to_string(h.edges().size()) + " edges");
    }
    InDegreeProfile profile;
    profile.indeg.assign(static_cast<std::size_t>(h.vertex_count()), 0);
    for (std::size_t i = 0; i < o.heads.size(); ++i) {
        const auto& edge = h.edges()[i];
        int head = o.heads[i];
        if (!std::binary_search(edge.begin(), edge.end(), head)) {
            throw validation_error("indegree_profile: head " + std::to_string(head) +
                                   " is not a vertex of edge " + std::to_string(i));
        }
        ++profile.indeg[static_cast<std::size_t>(head)];
    }
    for (int d : profile.indeg) {
        if (d == 0) ++profile.zero_count;
        if (d % 2 == 0) ++profile.even_count;
        if (d == 1) ++profile.ones;
        if (d == 2) ++profile.twos;
    }
    return profile;
}

// Number of vertices with non-zero in-degree: the colours seen in one roll.
inline int colour_count(const Hypergraph& h, const Orientation& o) {
    return h.vertex_count() - indegree_profile(h, o).zero_count;
}

}  // namespace hyperent
