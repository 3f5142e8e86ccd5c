#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hyperent/canonical.hpp"
#include "hyperent/closed_form.hpp"
#include "hyperent/enumerate.hpp"
#include "hyperent/errors.hpp"
#include "hyperent/exact_dist.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/pmf.hpp"

namespace hyperent {

// Two distinct exact pmfs only collide in float entropy by coincidence;
// the tolerance keeps maximizer lists stable.
inline constexpr double kTieTolerance = 1e-9;

struct SearchParams {
    int n = 0;
    int m = 0;
    int r = 2;
    bool up_to_iso = false;
    int top_k = 10;
    int threads = 1;
};

enum class Conjecture1Verdict { consistent, counterexample, not_applicable };

inline const char* to_string(Conjecture1Verdict v) {
    switch (v) {
        case Conjecture1Verdict::consistent: return "consistent";
        case Conjecture1Verdict::counterexample: return "counterexample";
        case Conjecture1Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

struct RankedCandidate {
    std::string key;
    double entropy = 0.0;
    int degree_gap = 0;
};

struct SearchReport {
    SearchParams params;
    std::uint64_t candidates_evaluated = 0;
    double max_entropy = 0.0;
    // Maximizers within the tie tolerance of max_entropy, deduplicated and
    // sorted by key; graphs kept so counterexamples can be serialized in full.
    std::vector<std::string> maximizers;
    std::vector<int> maximizer_degree_gaps;
    std::vector<Hypergraph> maximizer_graphs;
    Conjecture1Verdict conjecture1_verdict = Conjecture1Verdict::not_applicable;
    std::vector<RankedCandidate> ranking;  // entropy descending, key ascending
    bool in_conjecture_regime = false;
};

namespace detail {

struct Evaluated {
    std::string key;
    double entropy = 0.0;
    int degree_gap = 0;
};

inline Evaluated evaluate_candidate(const Hypergraph& h) {
    Evaluated e;
    e.key = report_key(h);
    e.entropy = entropy_bits(exact_pmf_auto(h));
    e.degree_gap = h.degree_gap();
    return e;
}

inline bool ranks_before(const Evaluated& a, const Evaluated& b) {
    if (a.entropy != b.entropy) return a.entropy > b.entropy;
    return a.key < b.key;
}

inline constexpr std::size_t kSearchBlock = 256;

}  // namespace detail

/**
 * Exhaustive entropy maximization over D_{n,m,r}. Every candidate gets an
 * exact pmf; candidates are consumed in enumeration order in fixed-size
 * blocks and block results are folded sequentially, so the report is
 * byte-identical for any thread count.
 */
inline SearchReport maximize_entropy(const SearchParams& params) {
    if (params.top_k < 1) throw validation_error("maximize_entropy: need top_k >= 1");
    if (params.threads < 1) throw validation_error("maximize_entropy: need threads >= 1");

    SearchReport report;
    report.params = params;
    report.in_conjecture_regime = in_conjecture_regime(params.n, params.m, params.r);

    std::vector<detail::Evaluated> ranking;  // bounded by top_k
    std::vector<std::pair<detail::Evaluated, Hypergraph>> near_max;
    double running_max = -1.0;

    auto fold = [&](const detail::Evaluated& eval, const Hypergraph& h) {
        ++report.candidates_evaluated;
        auto pos = std::upper_bound(ranking.begin(), ranking.end(), eval, detail::ranks_before);
        if (pos != ranking.end() || ranking.size() < static_cast<std::size_t>(params.top_k)) {
            ranking.insert(pos, eval);
            if (ranking.size() > static_cast<std::size_t>(params.top_k)) ranking.pop_back();
        }
        if (eval.entropy > running_max) {
            running_max = eval.entropy;
            std::erase_if(near_max, [&](const auto& entry) {
                return entry.first.entropy < running_max - kTieTolerance;
            });
        }
        if (eval.entropy >= running_max - kTieTolerance) near_max.emplace_back(eval, h);
    };

    std::vector<Hypergraph> block;
    block.reserve(detail::kSearchBlock);
    auto flush = [&] {
        if (block.empty()) return;
        std::vector<detail::Evaluated> evals(block.size());
        const int workers = std::min<int>(params.threads, static_cast<int>(block.size()));
        if (workers > 1) {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            const std::size_t chunk = (block.size() + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                std::size_t lo = w * chunk;
                std::size_t hi = std::min(block.size(), lo + chunk);
                pool.emplace_back([&, lo, hi] {
                    for (std::size_t i = lo; i < hi; ++i) {
                        evals[i] = detail::evaluate_candidate(block[i]);
                    }
                });
            }
            for (auto& t : pool) t.join();
        } else {
            for (std::size_t i = 0; i < block.size(); ++i) {
                evals[i] = detail::evaluate_candidate(block[i]);
            }
        }
        for (std::size_t i = 0; i < block.size(); ++i) fold(evals[i], block[i]);
        block.clear();
    };

    enumerate_class(params.n, params.m, params.r, params.up_to_iso, [&](const Hypergraph& h) {
        block.push_back(h);
        if (block.size() == detail::kSearchBlock) flush();
    });
    flush();

    report.max_entropy = running_max;
    std::stable_sort(near_max.begin(), near_max.end(),
                     [](const auto& a, const auto& b) { return a.first.key < b.first.key; });
    for (auto& [eval, h] : near_max) {
        if (eval.entropy < report.max_entropy - kTieTolerance) continue;
        if (!report.maximizers.empty() && report.maximizers.back() == eval.key) continue;
        report.maximizers.push_back(eval.key);
        report.maximizer_degree_gaps.push_back(eval.degree_gap);
        report.maximizer_graphs.push_back(h);
    }

    bool all_even = std::all_of(report.maximizer_degree_gaps.begin(),
                                report.maximizer_degree_gaps.end(),
                                [](int gap) { return gap <= 1; });
    if (all_even) {
        report.conjecture1_verdict = Conjecture1Verdict::consistent;
    } else if (report.in_conjecture_regime) {
        report.conjecture1_verdict = Conjecture1Verdict::counterexample;
    } else {
        // A maximizer with degree gap > 1 outside the conjecture's stated
        // regime m >= n > r >= 2 is not counted as a counterexample.
        report.conjecture1_verdict = Conjecture1Verdict::not_applicable;
    }

    for (const auto& e : ranking) report.ranking.push_back({e.key, e.entropy, e.degree_gap});
    return report;
}

// Runs the maximization and reports whether every maximizer has degree gap
// at most 1; the verdict is emitted, never asserted.
inline SearchReport check_conjecture1(int n, int m, int r) {
    SearchParams params;
    params.n = n;
    params.m = m;
    params.r = r;
    params.up_to_iso = n <= kCanonicalCap;
    return maximize_entropy(params);
}

struct CircularRow {
    int n = 0;
    bool skipped = false;
    double entropy = 0.0;
    double half_log_n_over_r = 0.0;
    double residual = 0.0;
    std::string note;
};

struct CircularConjectureReport {
    int r = 0;
    int n_min = 0;
    int n_max = 0;
    std::vector<CircularRow> rows;
    int evaluated = 0;
    double min_residual = 0.0;  // over evaluated rows
};

// Residuals H(X_{Cy_{n,r}}) - (1/2) log2(n/r) over a range of n. The
// conjectured O(1) term is unspecified, so the report only states the
// minimum residual; rows beyond the exact-engine caps are marked skipped.
inline CircularConjectureReport check_circular_conjecture(int r, int n_min, int n_max) {
    if (r < 2) throw validation_error("check_circular_conjecture: need r >= 2");
    if (n_min <= r) throw validation_error("check_circular_conjecture: need n_min > r");
    if (n_max < n_min) throw validation_error("check_circular_conjecture: need n_max >= n_min");

    CircularConjectureReport report;
    report.r = r;
    report.n_min = n_min;
    report.n_max = n_max;
    bool first = true;
    for (int n = n_min; n <= n_max; ++n) {
        CircularRow row;
        row.n = n;
        row.half_log_n_over_r = 0.5 * std::log2(static_cast<double>(n) / r);
        try {
            row.entropy = entropy_bits(exact_pmf_auto(gen_circular(n, r)));
            row.residual = row.entropy - row.half_log_n_over_r;
            ++report.evaluated;
            if (first || row.residual < report.min_residual) report.min_residual = row.residual;
            first = false;
        } catch (const budget_error& e) {
            row.skipped = true;
            row.note = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

struct CycleVsAllReport {
    int n = 0;
    double cycle_entropy = 0.0;
    double max_entropy = 0.0;
    double gap = 0.0;  // max_entropy - cycle_entropy
    bool cycle_attains_max = false;
    SearchReport search;
};

// Compares the cycle's entropy against the maximum over G_n = D_{n,n,2}.
// Exhaustive for n <= 5, up-to-isomorphism for n <= 8; report-only, since
// the cycle-dominates remark can fail (it already does at n = 4).
inline CycleVsAllReport compare_cycle_vs_all(int n, int top_k = 10, int threads = 1) {
    if (n < 3) throw validation_error("compare_cycle_vs_all: need n >= 3 (cycle undefined)");
    if (n > kCanonicalCap) {
        throw budget_error("compare_cycle_vs_all: n=" + std::to_string(n) + " exceeds cap " +
                           std::to_string(kCanonicalCap));
    }
    SearchParams params;
    params.n = n;
    params.m = n;
    params.r = 2;
    params.up_to_iso = n > 5;
    params.top_k = top_k;
    params.threads = threads;

    CycleVsAllReport report;
    report.n = n;
    report.search = maximize_entropy(params);
    report.cycle_entropy = entropy_bits(cycle_colour_pmf(n));
    report.max_entropy = report.search.max_entropy;
    report.gap = report.max_entropy - report.cycle_entropy;
    report.cycle_attains_max = report.cycle_entropy >= report.max_entropy - kTieTolerance;
    return report;
}

}  // namespace hyperent
