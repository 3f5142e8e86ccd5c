#include <catch2/catch_amalgamated.hpp>

#include "hyperent/enumerate.hpp"
#include "test_oracles.hpp"

using namespace hyperent;

namespace {

std::vector<Hypergraph> collect(int n, int m, int r, bool up_to_iso) {
    std::vector<Hypergraph> out;
    enumerate_class(n, m, r, up_to_iso, [&](const Hypergraph& h) { out.push_back(h); });
    return out;
}

}  // namespace

TEST_CASE("edge universe") {
    REQUIRE(edge_universe(3, 2) ==
            std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(edge_universe(4, 3).size() == 4);
    REQUIRE_THROWS_AS(edge_universe(2, 3), validation_error);
}

TEST_CASE("class sizes by stars and bars") {
    REQUIRE(class_size(2, 1, 2) == 1);
    REQUIRE(class_size(3, 3, 2) == 10);
    REQUIRE(class_size(4, 4, 2) == 126);
}

TEST_CASE("enumeration is complete and lexicographic") {
    SECTION("single candidate") {
        auto all = collect(2, 1, 2, false);
        REQUIRE(all.size() == 1);
        REQUIRE(all[0].edges() == std::vector<std::vector<int>>{{0, 1}});
    }
    SECTION("counts match stars and bars for n <= 4, m <= 4, r in {2,3}") {
        for (int r : {2, 3}) {
            for (int n = r; n <= 4; ++n) {
                for (int m = 1; m <= 4; ++m) {
                    auto all = collect(n, m, r, false);
                    REQUIRE(BigInt(all.size()) == class_size(n, m, r));
                }
            }
        }
    }
    SECTION("lexicographic order of the first few multisets") {
        auto all = collect(3, 2, 2, false);
        REQUIRE(all.size() == 6);
        REQUIRE(all[0].edges() == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
        REQUIRE(all[1].edges() == std::vector<std::vector<int>>{{0, 1}, {0, 2}});
        REQUIRE(all[2].edges() == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
        REQUIRE(all[3].edges() == std::vector<std::vector<int>>{{0, 2}, {0, 2}});
    }
}

TEST_CASE("enumeration up to isomorphism") {
    SECTION("two classes of 2-edge graphs on 3 vertices") {
        auto reps = collect(3, 2, 2, true);
        REQUIRE(reps.size() == 2);
        REQUIRE(reps[0].edges() == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
        REQUIRE(reps[1].edges() == std::vector<std::vector<int>>{{0, 1}, {0, 2}});
    }
    SECTION("representative count matches pairwise-isomorphism grouping") {
        for (int m = 1; m <= 3; ++m) {
            auto all = collect(4, m, 2, false);
            auto reps = collect(4, m, 2, true);
            REQUIRE(reps.size() == oracle::isomorphism_classes(all));
        }
        auto all3 = collect(4, 2, 3, false);
        auto reps3 = collect(4, 2, 3, true);
        REQUIRE(reps3.size() == oracle::isomorphism_classes(all3));
    }
    SECTION("pair overlap identities across an enumerated class") {
        enumerate_class(4, 3, 2, false, [&](const Hypergraph& h) {
            for (int v1 = 0; v1 < 4; ++v1) {
                for (int v2 = v1 + 1; v2 < 4; ++v2) {
                    PairOverlap o = h.pair_overlap(v1, v2);
                    REQUIRE(o.d1 + o.d3 == h.degree(v1));
                    REQUIRE(o.d2 + o.d3 == h.degree(v2));
                }
            }
        });
    }
}

TEST_CASE("enumeration budgets") {
    SECTION("multiset count above budget is refused with the count") {
        try {
            enumerate_class(8, 8, 2, false, [](const Hypergraph&) {});
            FAIL("expected budget_error");
        } catch (const budget_error& e) {
            REQUIRE(std::string(e.what()).find("23535820") != std::string::npos);
        }
    }
    SECTION("up-to-iso above the relabeling cap is refused") {
        REQUIRE_THROWS_AS(enumerate_class(9, 1, 2, true, [](const Hypergraph&) {}),
                          budget_error);
    }
}
