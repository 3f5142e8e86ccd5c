#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool capture_stderr = false) {
    std::string cmd = std::string(HYPERENT_CLI_PATH) + " " + args;
    cmd += capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string golden(const std::string& name) {
    return read_file(std::filesystem::path(HYPERENT_GOLDEN_DIR) / name);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("pmf subcommand") {
    SECTION("triangle law as CSV") {
        RunResult r = run_cli("pmf --gen cycle --n 3 --engine enumerate");
        REQUIRE(r.exit_code == 0);
        auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 6);
        REQUIRE(lines[0] == "# tool: hyperent pmf");
        REQUIRE(lines[1] == "# input: n=3 m=3 r=2");
        REQUIRE(lines[2] == "# engine: enumeration");
        REQUIRE(lines[3] == "x,numerator,denominator,probability_float");
        REQUIRE(lines[4] == "2,3,4,0.75");
        REQUIRE(lines[5] == "3,1,4,0.25");
    }
    SECTION("engines agree through the CLI") {
        RunResult a = run_cli("pmf --gen circular --n 5 --r 3 --engine enumerate");
        RunResult b = run_cli("pmf --gen circular --n 5 --r 3 --engine inclexcl");
        REQUIRE(a.exit_code == 0);
        // engine header differs, the table must not
        auto at = lines_of(a.out);
        auto bt = lines_of(b.out);
        REQUIRE(std::vector<std::string>(at.begin() + 3, at.end()) ==
                std::vector<std::string>(bt.begin() + 3, bt.end()));
    }
    SECTION("auto engine resolves to enumeration on small instances") {
        RunResult r = run_cli("pmf --gen cycle --n 3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(lines_of(r.out)[2] == "# engine: enumeration");
    }
    SECTION("structured output") {
        RunResult r = run_cli("pmf --gen cycle --n 3 --output structured");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        REQUIRE(j["engine"] == "enumeration");
        REQUIRE(j["input"]["n"] == 3);
        REQUIRE(j["pmf"].size() == 2);
        REQUIRE(j["pmf"][0]["x"] == 2);
        REQUIRE(j["pmf"][0]["numerator"] == "3");
        REQUIRE(j["pmf"][0]["denominator"] == "4");
    }
    SECTION("pretty table output runs") {
        RunResult r = run_cli("pmf --gen cycle --n 3 --output pretty-table");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("3/4") != std::string::npos);
    }
    SECTION("missing input file exits 1 with a message on stderr") {
        RunResult r = run_cli("pmf --in missing.hg");
        REQUIRE(r.exit_code == 1);
        REQUIRE(r.out.empty());
        RunResult err = run_cli("pmf --in missing.hg", /*capture_stderr=*/true);
        REQUIRE(err.out.find("missing.hg") != std::string::npos);
    }
    SECTION("Monte Carlo runs are seed-reproducible") {
        std::string args = "pmf --gen cycle --n 3 --engine mc --seed 7 --samples 2000";
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        REQUIRE(a.exit_code == 0);
        REQUIRE(a.out == b.out);
        REQUIRE(a.out.find("# seed: 7") != std::string::npos);
        REQUIRE(a.out.find("# samples: 2000") != std::string::npos);
    }
}

TEST_CASE("entropy subcommand") {
    RunResult r = run_cli("entropy --gen cycle --n 3");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines[3] == "entropy_bits");
    REQUIRE(lines[4] == "0.811278");
}

TEST_CASE("moments subcommand") {
    RunResult r = run_cli("moments --gen cycle --n 3");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines[2] ==
            "n,m,r,mean_num,mean_den,variance_num,variance_den,mean_float,variance_float");
    REQUIRE(lines[3] == "3,3,2,9,4,3,16,2.25,0.1875");
}

TEST_CASE("bounds subcommand") {
    SECTION("triangle report matches the frozen values") {
        RunResult r = run_cli("bounds --gen cycle --n 3");
        REQUIRE(r.exit_code == 0);
        auto lines = lines_of(r.out);
        REQUIRE(lines[2] == "id,n,m,r,entropy,variance_num,variance_den,massey,theorem2,violations");
        auto fields = split_csv(lines[3]);
        REQUIRE(fields.size() == 10);
        REQUIRE(fields[0] == "n3r2:0.1|0.2|1.2");
        REQUIRE(fields[4] == "0.811278");
        REQUIRE(fields[5] == "3");
        REQUIRE(fields[6] == "16");
        REQUIRE(fields[7] == "1.10483");
        REQUIRE(fields[8] == "2.33958");
        REQUIRE(fields[9].empty());
    }
    SECTION("assert mode still exits 0 when nothing is violated") {
        RunResult r = run_cli("bounds --gen cycle --n 3 --assert");
        REQUIRE(r.exit_code == 0);
    }
}

TEST_CASE("cycle and binom-even subcommands") {
    SECTION("cycle law with its lower bound") {
        RunResult r = run_cli("cycle --n 4");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("# bound_satisfied: yes") != std::string::npos);
        REQUIRE(r.out.find("3,3,4,0.75") != std::string::npos);
    }
    SECTION("even-conditioned binomial with the coupling identity") {
        RunResult r = run_cli("binom-even --n 4");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("# coupling_identity: ok") != std::string::npos);
        REQUIRE(r.out.find("0,1,8,0.125") != std::string::npos);
    }
}

TEST_CASE("search family subcommands") {
    SECTION("search header carries the verdict") {
        RunResult r = run_cli("search --n 3 --m 3 --r 2 --up-to-iso");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("# candidates_evaluated: 3") != std::string::npos);
        REQUIRE(r.out.find("# conjecture1: ") != std::string::npos);
        REQUIRE(r.out.find("rank,canonical_key,entropy,degree_gap,is_maximizer") !=
                std::string::npos);
    }
    SECTION("oversized search exits 2") {
        RunResult r = run_cli("search --n 8 --m 8 --r 2");
        REQUIRE(r.exit_code == 2);
    }
    SECTION("conjecture1 wrapper") {
        RunResult r = run_cli("conjecture1 --n 3 --m 3 --r 2");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("# tool: hyperent conjecture1") != std::string::npos);
        REQUIRE(r.out.find("# in_conjecture_regime: yes") != std::string::npos);
    }
    SECTION("conjecture2 residual table") {
        RunResult r = run_cli("conjecture2 --r 3 --n-min 4 --n-max 8");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("# evaluated: 5") != std::string::npos);
        REQUIRE(r.out.find("n,entropy,half_log_n_over_r,residual,skipped") != std::string::npos);
    }
    SECTION("cycle-vs-all at n=4 reports the refutation") {
        RunResult r = run_cli("cycle-vs-all --n 4");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("# cycle_entropy: 1.06128") != std::string::npos);
        REQUIRE(r.out.find("# cycle_attains_max: no") != std::string::npos);
    }
}

TEST_CASE("gen round-trips byte-for-byte through pmf") {
    SECTION("text format") {
        auto path = temp_path("hyperent_cli_rt.hg");
        RunResult gen = run_cli("gen --gen cycle --n 5 --out " + path.string());
        REQUIRE(gen.exit_code == 0);
        RunResult via_file = run_cli("pmf --in " + path.string());
        RunResult direct = run_cli("pmf --gen cycle --n 5");
        REQUIRE(via_file.exit_code == 0);
        REQUIRE(via_file.out == direct.out);
        std::filesystem::remove(path);
    }
    SECTION("json format") {
        auto path = temp_path("hyperent_cli_rt.json");
        RunResult gen = run_cli("gen --gen circular --n 5 --r 3 --json --out " + path.string());
        REQUIRE(gen.exit_code == 0);
        RunResult via_file = run_cli("pmf --in " + path.string());
        RunResult direct = run_cli("pmf --gen circular --n 5 --r 3");
        REQUIRE(via_file.exit_code == 0);
        REQUIRE(via_file.out == direct.out);
        std::filesystem::remove(path);
    }
    SECTION("gen to stdout is the text format") {
        RunResult r = run_cli("gen --gen cycle --n 3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out == "n=3 r=2\n0 1\n0 2\n1 2\n");
    }
}

TEST_CASE("argument errors exit 1") {
    REQUIRE(run_cli("no-such-subcommand").exit_code == 1);
    REQUIRE(run_cli("pmf --gen no-such-generator --n 4").exit_code == 1);
    REQUIRE(run_cli("pmf").exit_code == 1);           // no input given
    REQUIRE(run_cli("cycle --n 2").exit_code == 1);   // cycle undefined
    REQUIRE(run_cli("search --n 3").exit_code == 1);  // --m is required
    REQUIRE(run_cli("pmf --gen cycle --n 3 --engine warp").exit_code == 1);
}

TEST_CASE("golden files") {
    SECTION("pmf of the triangle") {
        RunResult r = run_cli("pmf --gen cycle --n 3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out == golden("pmf_cycle3.golden"));
    }
    SECTION("bounds of the 4-cycle") {
        RunResult r = run_cli("bounds --gen cycle --n 4");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out == golden("bounds_cycle4.golden"));
    }
    SECTION("search over D_{4,4,2} up to isomorphism, any thread count") {
        std::string base = "search --n 4 --m 4 --r 2 --up-to-iso";
        RunResult t1 = run_cli(base);
        REQUIRE(t1.exit_code == 0);
        REQUIRE(t1.out == golden("search_4_4_2_iso.golden"));
        REQUIRE(run_cli(base + " --threads 2").out == t1.out);
        REQUIRE(run_cli(base + " --threads 4").out == t1.out);
        REQUIRE(run_cli(base).out == t1.out);
    }
}
