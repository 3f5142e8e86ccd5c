#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperent/hyperent.hpp"

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// shared option plumbing

struct InputOpts {
    std::string in_path;
    std::string gen;
    int n = 0;
    int r = 3;  // edge size for --gen circular
};

struct OutputOpts {
    std::string mode = "csv";
    std::string path;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--in", in.in_path, "hypergraph file (text or JSON)");
    cmd->add_option("--gen", in.gen, "generator: cycle|circular|double-edges|star-plus-edge");
    cmd->add_option("--n", in.n, "vertex count for --gen");
    cmd->add_option("--r", in.r, "edge size for --gen circular");
}

void add_output_flags(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--output", out.mode, "output format")
        ->check(CLI::IsMember({"csv", "structured", "pretty-table"}));
    cmd->add_option("--out", out.path, "write to this file instead of stdout");
}

hyperent::Hypergraph resolve_input(const InputOpts& in) {
    if (!in.in_path.empty()) return hyperent::read_hypergraph_file(in.in_path);
    if (in.gen.empty()) {
        throw hyperent::validation_error("no input: give --in FILE or --gen NAME");
    }
    if (in.n < 1) throw hyperent::validation_error("--gen requires --n");
    if (in.gen == "cycle") return hyperent::gen_cycle(in.n);
    if (in.gen == "circular") return hyperent::gen_circular(in.n, in.r);
    if (in.gen == "double-edges") {
        return hyperent::gen_special(in.n, hyperent::SpecialKind::double_edges);
    }
    if (in.gen == "star-plus-edge") {
        return hyperent::gen_special(in.n, hyperent::SpecialKind::star_plus_edge);
    }
    throw hyperent::validation_error("unknown generator '" + in.gen +
                                     "' (cycle|circular|double-edges|star-plus-edge)");
}

// Keeps the output stream alive whether it is a file or stdout.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw hyperent::validation_error("cannot write output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// The header records everything that determines the numbers below it: the
// instance dimensions, the engine and, for sampling runs, seed and sample
// count. Source paths and worker counts are deliberately absent so that
// equal computations produce byte-equal reports.
void write_header(std::ostream& os, const std::string& tool, const hyperent::Hypergraph& h) {
    os << "# tool: hyperent " << tool << "\n";
    os << "# input: n=" << h.vertex_count() << " m=" << h.edge_count()
       << " r=" << h.edge_size() << "\n";
}

ordered_json input_json(const hyperent::Hypergraph& h) {
    return ordered_json{{"n", h.vertex_count()}, {"m", h.edge_count()}, {"r", h.edge_size()}};
}

ordered_json pmf_json(const hyperent::Pmf& pmf) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const hyperent::Rational& p = pmf.probs()[i];
        rows.push_back(ordered_json{{"x", pmf.support()[i]},
                                    {"numerator", numerator(p).str()},
                                    {"denominator", denominator(p).str()},
                                    {"probability", hyperent::to_double(p)}});
    }
    return rows;
}

void write_pmf_pretty(std::ostream& os, const hyperent::Pmf& pmf) {
    os << std::left << std::setw(6) << "x" << std::setw(14) << "P(X=x)" << "exact\n";
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const hyperent::Rational& p = pmf.probs()[i];
        os << std::left << std::setw(6) << pmf.support()[i] << std::setw(14)
           << hyperent::format_g6(hyperent::to_double(p))
           << numerator(p) << "/" << denominator(p) << "\n";
    }
}

// ---------------------------------------------------------------------------
// engine selection

enum class Engine { enumeration, inclusion_exclusion, monte_carlo };

const char* engine_label(Engine e) {
    switch (e) {
        case Engine::enumeration: return "enumeration";
        case Engine::inclusion_exclusion: return "inclusion-exclusion";
        case Engine::monte_carlo: return "monte-carlo";
    }
    return "?";
}

Engine pick_engine(const std::string& flag, const hyperent::Hypergraph& h) {
    if (flag == "enumerate") return Engine::enumeration;
    if (flag == "inclexcl") return Engine::inclusion_exclusion;
    if (flag == "mc") return Engine::monte_carlo;
    if (flag != "auto") {
        throw hyperent::validation_error("unknown engine '" + flag +
                                         "' (enumerate|inclexcl|mc|auto)");
    }
    if (hyperent::orientation_count_log2(h) <= hyperent::kAutoEnumerationLog2Cap) {
        return Engine::enumeration;
    }
    if (h.vertex_count() <= 20) return Engine::inclusion_exclusion;
    std::cerr << "warning: instance too large for the exact engines; "
                 "falling back to Monte Carlo estimation\n";
    return Engine::monte_carlo;
}

hyperent::Pmf exact_pmf(Engine engine, const hyperent::Hypergraph& h) {
    if (engine == Engine::enumeration) return hyperent::exact_pmf_enumeration(h);
    return hyperent::exact_pmf_inclusion_exclusion(h);
}

// ---------------------------------------------------------------------------
// pmf / entropy

struct SamplingOpts {
    std::uint64_t seed = 0;
    std::uint64_t samples = 100000;
};

int run_pmf(const InputOpts& in, const OutputOpts& out, const std::string& engine_flag,
            const SamplingOpts& sampling) {
    hyperent::Hypergraph h = resolve_input(in);
    Engine engine = pick_engine(engine_flag, h);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();

    if (engine == Engine::monte_carlo) {
        hyperent::EmpiricalPmf est = hyperent::monte_carlo_pmf(h, sampling.samples, sampling.seed);
        if (out.mode == "csv") {
            write_header(os, "pmf", h);
            os << "# engine: " << engine_label(engine) << "\n";
            os << "# seed: " << est.seed << "\n# samples: " << est.samples << "\n";
            os << "x,numerator,denominator,probability_float\n";
            for (std::size_t i = 0; i < est.support.size(); ++i) {
                auto count = static_cast<std::uint64_t>(
                    std::llround(est.freq[i] * static_cast<double>(est.samples)));
                os << est.support[i] << ',' << count << ',' << est.samples << ','
                   << hyperent::format_g6(est.freq[i]) << "\n";
            }
        } else if (out.mode == "structured") {
            ordered_json j{{"tool", "pmf"},
                           {"input", input_json(h)},
                           {"engine", engine_label(engine)},
                           {"seed", est.seed},
                           {"samples", est.samples}};
            ordered_json rows = ordered_json::array();
            for (std::size_t i = 0; i < est.support.size(); ++i) {
                rows.push_back(ordered_json{{"x", est.support[i]},
                                            {"estimate", est.freq[i]},
                                            {"std_error", est.std_error[i]}});
            }
            j["pmf"] = rows;
            os << j.dump(2) << "\n";
        } else {
            os << "law of X for n=" << h.vertex_count() << " m=" << h.edge_count()
               << " r=" << h.edge_size() << " (monte-carlo, seed " << est.seed << ", "
               << est.samples << " samples)\n";
            os << std::left << std::setw(6) << "x" << std::setw(14) << "estimate"
               << "std_error\n";
            for (std::size_t i = 0; i < est.support.size(); ++i) {
                os << std::left << std::setw(6) << est.support[i] << std::setw(14)
                   << hyperent::format_g6(est.freq[i])
                   << hyperent::format_g6(est.std_error[i]) << "\n";
            }
        }
        return 0;
    }

    hyperent::Pmf law = exact_pmf(engine, h);
    if (out.mode == "csv") {
        write_header(os, "pmf", h);
        os << "# engine: " << engine_label(engine) << "\n";
        hyperent::write_pmf_csv(os, law);
    } else if (out.mode == "structured") {
        ordered_json j{{"tool", "pmf"},
                       {"input", input_json(h)},
                       {"engine", engine_label(engine)},
                       {"pmf", pmf_json(law)}};
        os << j.dump(2) << "\n";
    } else {
        os << "law of X for n=" << h.vertex_count() << " m=" << h.edge_count()
           << " r=" << h.edge_size() << " (" << engine_label(engine) << ")\n";
        write_pmf_pretty(os, law);
    }
    return 0;
}

int run_entropy(const InputOpts& in, const OutputOpts& out, const std::string& engine_flag,
                const SamplingOpts& sampling) {
    hyperent::Hypergraph h = resolve_input(in);
    Engine engine = pick_engine(engine_flag, h);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();

    double entropy = 0.0;
    if (engine == Engine::monte_carlo) {
        entropy = hyperent::entropy_bits(hyperent::monte_carlo_pmf(h, sampling.samples,
                                                                   sampling.seed));
    } else {
        entropy = hyperent::entropy_bits(exact_pmf(engine, h));
    }

    if (out.mode == "csv") {
        write_header(os, "entropy", h);
        os << "# engine: " << engine_label(engine) << "\n";
        if (engine == Engine::monte_carlo) {
            os << "# seed: " << sampling.seed << "\n# samples: " << sampling.samples << "\n";
        }
        os << "entropy_bits\n" << hyperent::format_g6(entropy) << "\n";
    } else if (out.mode == "structured") {
        ordered_json j{{"tool", "entropy"},
                       {"input", input_json(h)},
                       {"engine", engine_label(engine)}};
        if (engine == Engine::monte_carlo) {
            j["seed"] = sampling.seed;
            j["samples"] = sampling.samples;
        }
        j["entropy_bits"] = entropy;
        os << j.dump(2) << "\n";
    } else {
        os << "H(X) = " << hyperent::format_g6(entropy) << " bits (" << engine_label(engine)
           << ")\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// moments / bounds

int run_moments(const InputOpts& in, const OutputOpts& out) {
    hyperent::Hypergraph h = resolve_input(in);
    hyperent::MomentReport rep = hyperent::exact_moments(h);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();

    if (out.mode == "csv") {
        write_header(os, "moments", h);
        os << "n,m,r,mean_num,mean_den,variance_num,variance_den,mean_float,variance_float\n";
        os << h.vertex_count() << ',' << h.edge_count() << ',' << h.edge_size() << ','
           << numerator(rep.mean) << ',' << denominator(rep.mean) << ','
           << numerator(rep.variance) << ',' << denominator(rep.variance) << ','
           << hyperent::format_g6(hyperent::to_double(rep.mean)) << ','
           << hyperent::format_g6(hyperent::to_double(rep.variance)) << "\n";
    } else if (out.mode == "structured") {
        ordered_json hit = ordered_json::array();
        for (const hyperent::Rational& p : rep.hit_prob) {
            hit.push_back(ordered_json{{"numerator", numerator(p).str()},
                                       {"denominator", denominator(p).str()},
                                       {"probability", hyperent::to_double(p)}});
        }
        ordered_json j{{"tool", "moments"},
                       {"input", input_json(h)},
                       {"mean", numerator(rep.mean).str() + "/" + denominator(rep.mean).str()},
                       {"mean_float", hyperent::to_double(rep.mean)},
                       {"variance", numerator(rep.variance).str() + "/" +
                                        denominator(rep.variance).str()},
                       {"variance_float", hyperent::to_double(rep.variance)},
                       {"hit_probabilities", hit}};
        os << j.dump(2) << "\n";
    } else {
        os << "moments of X for n=" << h.vertex_count() << " m=" << h.edge_count()
           << " r=" << h.edge_size() << "\n";
        os << "  mean     = " << rep.mean << " = "
           << hyperent::format_g6(hyperent::to_double(rep.mean)) << "\n";
        os << "  variance = " << rep.variance << " = "
           << hyperent::format_g6(hyperent::to_double(rep.variance)) << "\n";
    }
    return 0;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) joined += sep;
        joined += parts[i];
    }
    return joined;
}

int run_bounds(const InputOpts& in, const OutputOpts& out, bool assert_mode) {
    hyperent::Hypergraph h = resolve_input(in);
    hyperent::BoundReport rep = hyperent::verify_bounds(h);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();

    if (out.mode == "csv") {
        write_header(os, "bounds", h);
        os << "id,n,m,r,entropy,variance_num,variance_den,massey,theorem2,violations\n";
        os << hyperent::report_key(h) << ',' << rep.n << ',' << rep.m << ',' << rep.r << ','
           << hyperent::format_g6(rep.entropy) << ',' << numerator(rep.variance) << ','
           << denominator(rep.variance) << ',' << hyperent::format_g6(rep.massey) << ','
           << hyperent::format_g6(rep.theorem2) << ',' << join(rep.violations, ';') << "\n";
    } else if (out.mode == "structured") {
        ordered_json j{{"tool", "bounds"},
                       {"input", input_json(h)},
                       {"id", hyperent::report_key(h)},
                       {"entropy", rep.entropy},
                       {"variance", numerator(rep.variance).str() + "/" +
                                        denominator(rep.variance).str()},
                       {"massey", rep.massey},
                       {"theorem2", rep.theorem2},
                       {"slack_massey", rep.slack_massey},
                       {"slack_theorem2", rep.slack_theorem2},
                       {"violations", rep.violations}};
        os << j.dump(2) << "\n";
    } else {
        os << "bounds for n=" << rep.n << " m=" << rep.m << " r=" << rep.r << "\n";
        os << "  entropy  = " << hyperent::format_g6(rep.entropy) << " bits\n";
        os << "  massey   = " << hyperent::format_g6(rep.massey)
           << " (slack " << hyperent::format_g6(rep.slack_massey) << ")\n";
        os << "  theorem2 = " << hyperent::format_g6(rep.theorem2)
           << " (slack " << hyperent::format_g6(rep.slack_theorem2) << ")\n";
        os << "  violations: " << (rep.violations.empty() ? "none" : join(rep.violations, ';'))
           << "\n";
    }
    if (assert_mode && !rep.violations.empty()) return 3;
    return 0;
}

// ---------------------------------------------------------------------------
// closed forms

int run_cycle(const OutputOpts& out, int n) {
    hyperent::Pmf law = hyperent::cycle_colour_pmf(n);
    double entropy = hyperent::entropy_bits(law);
    double lower = hyperent::cycle_lower_bound(n);
    bool satisfied = entropy >= lower - hyperent::kBoundTolerance;
    hyperent::Hypergraph h = hyperent::gen_cycle(n);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();

    if (out.mode == "csv") {
        write_header(os, "cycle", h);
        os << "# entropy_bits: " << hyperent::format_g6(entropy) << "\n";
        os << "# lower_bound: " << hyperent::format_g6(lower) << "\n";
        os << "# bound_satisfied: " << (satisfied ? "yes" : "no") << "\n";
        hyperent::write_pmf_csv(os, law);
    } else if (out.mode == "structured") {
        ordered_json j{{"tool", "cycle"},
                       {"input", input_json(h)},
                       {"entropy_bits", entropy},
                       {"lower_bound", lower},
                       {"bound_satisfied", satisfied},
                       {"pmf", pmf_json(law)}};
        os << j.dump(2) << "\n";
    } else {
        os << "cycle C_" << n << ": H(X) = " << hyperent::format_g6(entropy)
           << " bits, lower bound " << hyperent::format_g6(lower) << " ("
           << (satisfied ? "satisfied" : "VIOLATED") << ")\n";
        write_pmf_pretty(os, law);
    }
    return 0;
}

int run_binom_even(const OutputOpts& out, int trials) {
    hyperent::Pmf law = hyperent::binomial_even_pmf(trials);
    bool coupling_ok = hyperent::coupling_pmf(trials) == law;
    double entropy = hyperent::entropy_bits(law);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();

    if (out.mode == "csv") {
        os << "# tool: hyperent binom-even\n";
        os << "# trials: " << trials << "\n";
        os << "# entropy_bits: " << hyperent::format_g6(entropy) << "\n";
        os << "# coupling_identity: " << (coupling_ok ? "ok" : "MISMATCH") << "\n";
        hyperent::write_pmf_csv(os, law);
    } else if (out.mode == "structured") {
        ordered_json j{{"tool", "binom-even"},
                       {"trials", trials},
                       {"entropy_bits", entropy},
                       {"coupling_identity", coupling_ok},
                       {"pmf", pmf_json(law)}};
        os << j.dump(2) << "\n";
    } else {
        os << "Bin(" << trials << ", e): H = " << hyperent::format_g6(entropy)
           << " bits, coupling identity " << (coupling_ok ? "ok" : "MISMATCH") << "\n";
        write_pmf_pretty(os, law);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// search family

void write_ranking_csv(std::ostream& os, const hyperent::SearchReport& rep) {
    os << "rank,canonical_key,entropy,degree_gap,is_maximizer\n";
    for (std::size_t i = 0; i < rep.ranking.size(); ++i) {
        const hyperent::RankedCandidate& c = rep.ranking[i];
        bool is_max = std::binary_search(rep.maximizers.begin(), rep.maximizers.end(), c.key);
        os << (i + 1) << ',' << c.key << ',' << hyperent::format_g6(c.entropy) << ','
           << c.degree_gap << ',' << (is_max ? 1 : 0) << "\n";
    }
}

void write_search_header(std::ostream& os, const std::string& tool,
                         const hyperent::SearchReport& rep) {
    os << "# tool: hyperent " << tool << "\n";
    os << "# params: n=" << rep.params.n << " m=" << rep.params.m << " r=" << rep.params.r
       << " up_to_iso=" << (rep.params.up_to_iso ? 1 : 0) << " top_k=" << rep.params.top_k
       << "\n";
    os << "# candidates_evaluated: " << rep.candidates_evaluated << "\n";
    os << "# max_entropy: " << hyperent::format_g6(rep.max_entropy) << "\n";
    os << "# maximizers: " << join(rep.maximizers, ';') << "\n";
    os << "# conjecture1: " << hyperent::to_string(rep.conjecture1_verdict) << "\n";
    os << "# in_conjecture_regime: " << (rep.in_conjecture_regime ? "yes" : "no") << "\n";
}

ordered_json search_json(const std::string& tool, const hyperent::SearchReport& rep) {
    ordered_json j{{"tool", tool},
                   {"params",
                    ordered_json{{"n", rep.params.n},
                                 {"m", rep.params.m},
                                 {"r", rep.params.r},
                                 {"up_to_iso", rep.params.up_to_iso},
                                 {"top_k", rep.params.top_k}}},
                   {"candidates_evaluated", rep.candidates_evaluated},
                   {"max_entropy", rep.max_entropy},
                   {"maximizers", rep.maximizers},
                   {"maximizer_degree_gaps", rep.maximizer_degree_gaps},
                   {"conjecture1_verdict", hyperent::to_string(rep.conjecture1_verdict)},
                   {"in_conjecture_regime", rep.in_conjecture_regime}};
    ordered_json graphs = ordered_json::array();
    for (const hyperent::Hypergraph& g : rep.maximizer_graphs) {
        graphs.push_back(ordered_json{{"n", g.vertex_count()},
                                      {"r", g.edge_size()},
                                      {"edges", g.edges()}});
    }
    j["maximizer_graphs"] = graphs;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < rep.ranking.size(); ++i) {
        const hyperent::RankedCandidate& c = rep.ranking[i];
        rows.push_back(ordered_json{{"rank", i + 1},
                                    {"canonical_key", c.key},
                                    {"entropy", c.entropy},
                                    {"degree_gap", c.degree_gap}});
    }
    j["ranking"] = rows;
    return j;
}

void write_search_pretty(std::ostream& os, const std::string& tool,
                         const hyperent::SearchReport& rep) {
    os << tool << " over D_{" << rep.params.n << "," << rep.params.m << "," << rep.params.r
       << "}" << (rep.params.up_to_iso ? " (up to isomorphism)" : "") << "\n";
    os << "  candidates evaluated: " << rep.candidates_evaluated << "\n";
    os << "  max entropy: " << hyperent::format_g6(rep.max_entropy) << " bits\n";
    os << "  maximizers:\n";
    for (std::size_t i = 0; i < rep.maximizers.size(); ++i) {
        os << "    " << rep.maximizers[i] << " (degree gap "
           << rep.maximizer_degree_gaps[i] << ")\n";
    }
    os << "  conjecture 1 verdict: " << hyperent::to_string(rep.conjecture1_verdict) << "\n";
    os << std::left << std::setw(6) << "rank" << std::setw(30) << "key" << std::setw(12)
       << "entropy" << "gap\n";
    for (std::size_t i = 0; i < rep.ranking.size(); ++i) {
        const hyperent::RankedCandidate& c = rep.ranking[i];
        os << std::left << std::setw(6) << (i + 1) << std::setw(30) << c.key << std::setw(12)
           << hyperent::format_g6(c.entropy) << c.degree_gap << "\n";
    }
}

int run_search(const OutputOpts& out, const hyperent::SearchParams& params,
               const std::string& tool) {
    hyperent::SearchReport rep = hyperent::maximize_entropy(params);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();
    if (out.mode == "csv") {
        write_search_header(os, tool, rep);
        write_ranking_csv(os, rep);
    } else if (out.mode == "structured") {
        os << search_json(tool, rep).dump(2) << "\n";
    } else {
        write_search_pretty(os, tool, rep);
    }
    return 0;
}

int run_conjecture2(const OutputOpts& out, int r, int n_min, int n_max) {
    hyperent::CircularConjectureReport rep = hyperent::check_circular_conjecture(r, n_min, n_max);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();

    if (out.mode == "csv") {
        os << "# tool: hyperent conjecture2\n";
        os << "# params: r=" << rep.r << " n_min=" << rep.n_min << " n_max=" << rep.n_max
           << "\n";
        os << "# evaluated: " << rep.evaluated << "\n";
        os << "# min_residual: " << hyperent::format_g6(rep.min_residual) << "\n";
        os << "n,entropy,half_log_n_over_r,residual,skipped\n";
        for (const hyperent::CircularRow& row : rep.rows) {
            os << row.n << ',';
            if (row.skipped) {
                os << ',' << hyperent::format_g6(row.half_log_n_over_r) << ",,1\n";
            } else {
                os << hyperent::format_g6(row.entropy) << ','
                   << hyperent::format_g6(row.half_log_n_over_r) << ','
                   << hyperent::format_g6(row.residual) << ",0\n";
            }
        }
    } else if (out.mode == "structured") {
        ordered_json rows = ordered_json::array();
        for (const hyperent::CircularRow& row : rep.rows) {
            ordered_json jr{{"n", row.n}, {"skipped", row.skipped}};
            if (row.skipped) {
                jr["note"] = row.note;
            } else {
                jr["entropy"] = row.entropy;
                jr["half_log_n_over_r"] = row.half_log_n_over_r;
                jr["residual"] = row.residual;
            }
            rows.push_back(jr);
        }
        ordered_json j{{"tool", "conjecture2"},
                       {"params",
                        ordered_json{{"r", rep.r}, {"n_min", rep.n_min}, {"n_max", rep.n_max}}},
                       {"evaluated", rep.evaluated},
                       {"min_residual", rep.min_residual},
                       {"rows", rows}};
        os << j.dump(2) << "\n";
    } else {
        os << "circular-hypergraph residuals for r=" << rep.r << ", n=" << rep.n_min << ".."
           << rep.n_max << "\n";
        os << std::left << std::setw(6) << "n" << std::setw(12) << "entropy" << std::setw(18)
           << "0.5*log2(n/r)" << "residual\n";
        for (const hyperent::CircularRow& row : rep.rows) {
            if (row.skipped) {
                os << std::left << std::setw(6) << row.n << "skipped: " << row.note << "\n";
            } else {
                os << std::left << std::setw(6) << row.n << std::setw(12)
                   << hyperent::format_g6(row.entropy) << std::setw(18)
                   << hyperent::format_g6(row.half_log_n_over_r)
                   << hyperent::format_g6(row.residual) << "\n";
            }
        }
        os << "minimum residual over " << rep.evaluated
           << " evaluated rows: " << hyperent::format_g6(rep.min_residual) << "\n";
    }
    return 0;
}

int run_cycle_vs_all(const OutputOpts& out, int n, int top_k, int threads) {
    hyperent::CycleVsAllReport rep = hyperent::compare_cycle_vs_all(n, top_k, threads);
    OutputSink sink(out.path);
    std::ostream& os = sink.stream();

    if (out.mode == "csv") {
        os << "# tool: hyperent cycle-vs-all\n";
        os << "# params: n=" << rep.n << " top_k=" << top_k << "\n";
        os << "# cycle_entropy: " << hyperent::format_g6(rep.cycle_entropy) << "\n";
        os << "# max_entropy: " << hyperent::format_g6(rep.max_entropy) << "\n";
        os << "# gap: " << hyperent::format_g6(rep.gap) << "\n";
        os << "# cycle_attains_max: " << (rep.cycle_attains_max ? "yes" : "no") << "\n";
        write_ranking_csv(os, rep.search);
    } else if (out.mode == "structured") {
        ordered_json j{{"tool", "cycle-vs-all"},
                       {"n", rep.n},
                       {"cycle_entropy", rep.cycle_entropy},
                       {"max_entropy", rep.max_entropy},
                       {"gap", rep.gap},
                       {"cycle_attains_max", rep.cycle_attains_max},
                       {"search", search_json("search", rep.search)}};
        os << j.dump(2) << "\n";
    } else {
        os << "cycle C_" << rep.n << " vs all of G_" << rep.n << ":\n";
        os << "  cycle entropy: " << hyperent::format_g6(rep.cycle_entropy) << " bits\n";
        os << "  class maximum: " << hyperent::format_g6(rep.max_entropy) << " bits (gap "
           << hyperent::format_g6(rep.gap) << ")\n";
        os << "  cycle attains the maximum: " << (rep.cycle_attains_max ? "yes" : "no") << "\n";
        write_search_pretty(os, "search", rep.search);
    }
    return 0;
}

int run_gen(const InputOpts& in, const std::string& out_path, bool as_json) {
    InputOpts gen_only = in;
    gen_only.in_path.clear();
    hyperent::Hypergraph h = resolve_input(gen_only);
    if (!out_path.empty()) {
        hyperent::write_hypergraph_file(out_path, h, as_json);
    } else if (as_json) {
        hyperent::write_hypergraph_json(std::cout, h);
    } else {
        hyperent::write_hypergraph_text(std::cout, h);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy of the colour count of randomly oriented r-uniform multi-hypergraphs"};
    app.require_subcommand(1);
    std::function<int()> action;

    InputOpts in;
    OutputOpts out;
    SamplingOpts sampling;
    std::string engine_flag = "auto";
    bool assert_mode = false;
    bool as_json = false;
    int cycle_n = 3;
    int trials = 1;
    hyperent::SearchParams search_params;
    int conj2_r = 3;
    int conj2_n_min = 4;
    int conj2_n_max = 8;

    auto add_sampling_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", sampling.seed, "random seed for Monte Carlo runs");
        cmd->add_option("--samples", sampling.samples, "Monte Carlo sample count");
    };

    CLI::App* pmf = app.add_subcommand("pmf", "exact or estimated law of X");
    add_input_flags(pmf, in);
    add_output_flags(pmf, out);
    pmf->add_option("--engine", engine_flag, "enumerate|inclexcl|mc|auto");
    add_sampling_flags(pmf);
    pmf->callback([&] { action = [&] { return run_pmf(in, out, engine_flag, sampling); }; });

    CLI::App* entropy = app.add_subcommand("entropy", "Shannon entropy of X in bits");
    add_input_flags(entropy, in);
    add_output_flags(entropy, out);
    entropy->add_option("--engine", engine_flag, "enumerate|inclexcl|mc|auto");
    add_sampling_flags(entropy);
    entropy->callback(
        [&] { action = [&] { return run_entropy(in, out, engine_flag, sampling); }; });

    CLI::App* moments = app.add_subcommand("moments", "exact mean and variance of X");
    add_input_flags(moments, in);
    add_output_flags(moments, out);
    moments->callback([&] { action = [&] { return run_moments(in, out); }; });

    CLI::App* bounds = app.add_subcommand("bounds", "entropy against the Massey and cap bounds");
    add_input_flags(bounds, in);
    add_output_flags(bounds, out);
    bounds->add_flag("--assert", assert_mode, "exit 3 if any bound is violated");
    bounds->callback([&] { action = [&] { return run_bounds(in, out, assert_mode); }; });

    CLI::App* cycle = app.add_subcommand("cycle", "closed-form cycle law and its lower bound");
    cycle->add_option("--n", cycle_n, "cycle length")->required();
    add_output_flags(cycle, out);
    cycle->callback([&] { action = [&] { return run_cycle(out, cycle_n); }; });

    CLI::App* binom = app.add_subcommand("binom-even", "even-conditioned binomial law");
    binom->add_option("--n", trials, "trial count")->required();
    add_output_flags(binom, out);
    binom->callback([&] { action = [&] { return run_binom_even(out, trials); }; });

    CLI::App* search = app.add_subcommand("search", "exhaustive entropy maximization");
    search->add_option("--n", search_params.n, "vertex count")->required();
    search->add_option("--m", search_params.m, "edge count")->required();
    search->add_option("--r", search_params.r, "edge size");
    search->add_flag("--up-to-iso", search_params.up_to_iso, "deduplicate isomorphic candidates");
    search->add_option("--top-k", search_params.top_k, "ranking size");
    search->add_option("--threads", search_params.threads, "worker threads");
    add_output_flags(search, out);
    search->callback([&] { action = [&] { return run_search(out, search_params, "search"); }; });

    CLI::App* conj1 = app.add_subcommand("conjecture1", "degree-gap check of entropy maximizers");
    conj1->add_option("--n", search_params.n, "vertex count")->required();
    conj1->add_option("--m", search_params.m, "edge count")->required();
    conj1->add_option("--r", search_params.r, "edge size");
    conj1->add_option("--top-k", search_params.top_k, "ranking size");
    conj1->add_option("--threads", search_params.threads, "worker threads");
    add_output_flags(conj1, out);
    conj1->callback([&] {
        action = [&] {
            search_params.up_to_iso = search_params.n <= hyperent::kCanonicalCap;
            return run_search(out, search_params, "conjecture1");
        };
    });

    CLI::App* conj2 = app.add_subcommand("conjecture2", "circular-hypergraph residual table");
    conj2->add_option("--r", conj2_r, "edge size")->required();
    conj2->add_option("--n-min", conj2_n_min, "first n")->required();
    conj2->add_option("--n-max", conj2_n_max, "last n")->required();
    add_output_flags(conj2, out);
    conj2->callback(
        [&] { action = [&] { return run_conjecture2(out, conj2_r, conj2_n_min, conj2_n_max); }; });

    CLI::App* cva = app.add_subcommand("cycle-vs-all", "cycle entropy against its whole class");
    cva->add_option("--n", search_params.n, "vertex count")->required();
    cva->add_option("--top-k", search_params.top_k, "ranking size");
    cva->add_option("--threads", search_params.threads, "worker threads");
    add_output_flags(cva, out);
    cva->callback([&] {
        action = [&] {
            return run_cycle_vs_all(out, search_params.n, search_params.top_k,
                                    search_params.threads);
        };
    });

    CLI::App* gen = app.add_subcommand("gen", "write a generator's hypergraph");
    gen->add_option("--gen", in.gen, "cycle|circular|double-edges|star-plus-edge")->required();
    gen->add_option("--n", in.n, "vertex count")->required();
    gen->add_option("--r", in.r, "edge size for circular");
    gen->add_option("--out", out.path, "output file (default stdout)");
    gen->add_flag("--json", as_json, "write the JSON form");
    gen->callback([&] { action = [&] { return run_gen(in, out.path, as_json); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        return action();
    } catch (const hyperent::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hyperent::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
