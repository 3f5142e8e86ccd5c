#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "hyperent/closed_form.hpp"
#include "hyperent/exact_dist.hpp"
#include "hyperent/hypergraph.hpp"

using namespace hyperent;

TEST_CASE("fair binomial law") {
    SECTION("frozen pmfs") {
        REQUIRE(binomial_pmf(0) == Pmf::from_weights({{0, 1}}));
        REQUIRE(binomial_pmf(1) ==
                Pmf::from_weights({{0, Rational(1, 2)}, {1, Rational(1, 2)}}));
        REQUIRE(binomial_pmf(3) == Pmf::from_weights({{0, Rational(1, 8)},
                                                      {1, Rational(3, 8)},
                                                      {2, Rational(3, 8)},
                                                      {3, Rational(1, 8)}}));
    }
    SECTION("moments") {
        for (int n = 0; n <= 32; ++n) {
            Pmf law = binomial_pmf(n);
            REQUIRE(law.mean() == Rational(n, 2));
            REQUIRE(law.variance() == Rational(n, 4));
        }
    }
    SECTION("frozen entropies") {
        REQUIRE(entropy_bits(binomial_pmf(1)) == 1.0);
        REQUIRE(entropy_bits(binomial_pmf(2)) == 1.5);
    }
    SECTION("rejects negative trials") {
        REQUIRE_THROWS_AS(binomial_pmf(-1), validation_error);
    }
}

TEST_CASE("even-conditioned binomial law") {
    SECTION("frozen pmfs") {
        REQUIRE(binomial_even_pmf(1) == Pmf::from_weights({{0, 1}}));
        REQUIRE(binomial_even_pmf(4) == Pmf::from_weights({{0, Rational(1, 8)},
                                                           {2, Rational(3, 4)},
                                                           {4, Rational(1, 8)}}));
    }
    SECTION("even outcomes carry exactly half the binomial mass") {
        for (int n = 1; n <= 16; ++n) {
            BigInt even_sum = 0;
            for (int k = 0; k <= n; k += 2) even_sum += binomial(n, k);
            REQUIRE(even_sum == pow_int(2, static_cast<unsigned>(n - 1)));
        }
    }
    SECTION("rejects the degenerate case") {
        REQUIRE_THROWS_AS(binomial_even_pmf(0), validation_error);
    }
}

TEST_CASE("cycle colour law") {
    SECTION("frozen pmfs") {
        REQUIRE(cycle_colour_pmf(3) ==
                Pmf::from_weights({{2, Rational(3, 4)}, {3, Rational(1, 4)}}));
        REQUIRE(cycle_colour_pmf(4) == Pmf::from_weights({{2, Rational(1, 8)},
                                                          {3, Rational(3, 4)},
                                                          {4, Rational(1, 8)}}));
        REQUIRE(std::abs(entropy_bits(cycle_colour_pmf(4)) - 1.06128) < 1e-5);
    }
    SECTION("matches orientation enumeration") {
        for (int n = 3; n <= 12; ++n) {
            REQUIRE(cycle_colour_pmf(n) == exact_pmf_enumeration(gen_cycle(n)));
        }
    }
    SECTION("moments match the covariance formula") {
        REQUIRE(cycle_colour_pmf(3).variance() == Rational(3, 16));
        for (int n = 3; n <= 32; ++n) {
            Pmf law = cycle_colour_pmf(n);
            REQUIRE(law.mean() == Rational(3 * n, 4));
            if (n >= 4) REQUIRE(law.variance() == Rational(n, 16));
        }
    }
    SECTION("is the even-binomial law relabelled") {
        for (int n = 3; n <= 64; ++n) {
            Pmf even = binomial_even_pmf(n);
            std::map<std::int64_t, Rational> mapped;
            for (std::size_t i = 0; i < even.support().size(); ++i) {
                std::int64_t j = even.support()[i];
                mapped[n - j / 2] = even.probs()[i];
            }
            REQUIRE(cycle_colour_pmf(n) == Pmf::from_weights(mapped));
        }
    }
    SECTION("rejects short cycles") {
        REQUIRE_THROWS_AS(cycle_colour_pmf(2), validation_error);
    }
}

TEST_CASE("rounding coupling") {
    SECTION("reproduces the even-binomial law") {
        for (int n = 1; n <= 64; ++n) {
            REQUIRE(coupling_pmf(n) == binomial_even_pmf(n));
        }
    }
    SECTION("spot check against hand sums") {
        REQUIRE(coupling_pmf(4) == Pmf::from_weights({{0, Rational(1, 8)},
                                                      {2, Rational(3, 4)},
                                                      {4, Rational(1, 8)}}));
    }
    SECTION("rejects the degenerate case") {
        REQUIRE_THROWS_AS(coupling_pmf(0), validation_error);
    }
}

TEST_CASE("entropy in bits") {
    SECTION("point mass has zero entropy") {
        REQUIRE(entropy_bits(Pmf::from_weights({{5, 1}})) == 0.0);
    }
    SECTION("uniform over four points") {
        Pmf uniform = Pmf::from_weights({{0, Rational(1, 4)},
                                         {1, Rational(1, 4)},
                                         {2, Rational(1, 4)},
                                         {3, Rational(1, 4)}});
        REQUIRE(entropy_bits(uniform) == 2.0);
    }
    SECTION("triangle law") {
        REQUIRE(std::abs(entropy_bits(cycle_colour_pmf(3)) - 0.811278) < 1e-6);
    }
    SECTION("merging a fair refinement loses at most one bit") {
        for (int n = 2; n <= 64; ++n) {
            double fine = entropy_bits(binomial_pmf(n - 1));
            double merged = entropy_bits(binomial_even_pmf(n));
            REQUIRE(merged <= fine + 1e-12);
            REQUIRE(merged >= fine - 1.0 - 1e-12);
        }
    }
}
