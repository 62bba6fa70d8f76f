#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sodlab/error.hpp"
#include "sodlab/symmetrize.hpp"
#include "test_support.hpp"

using namespace sodlab;
using sodlab::testing::parse;
using sodlab::testing::random_partition;
using sodlab::testing::random_invariant;

TEST_CASE("chart layout matches the ambient weight rule") {
    auto chart = make_chart(Partition({3, 2, 2, 1}));
    CHECK(chart.part_vars->size() == 4);
    CHECK(chart.invariant_vars->weights() == ambient_weights(chart.partition));
    CHECK(chart.invariant_vars->names() == std::vector<std::string>{"e1_1", "e2_1", "e2_2", "e3_1"});
    CHECK(chart.group_blocks == VariableBlocks{{3}, {1, 2}, {0}});
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            CHECK(make_chart(lambda).invariant_vars->weights() == ambient_weights(lambda));
}

TEST_CASE("restrict_to_fixed_locus") {
    auto x3 = VarSpec::numbered("x", 3);
    auto c21 = make_chart(Partition({2, 1}));
    CHECK(restrict_to_fixed_locus(parse("x1 + x2 + x3", x3), c21) == parse("2*u1 + u2", c21.part_vars));

    auto c3 = make_chart(Partition({3}));
    CHECK(restrict_to_fixed_locus(parse("x1*x2*x3", x3), c3) == parse("u1^3", c3.part_vars));

    // e1 -> 2u+v, e2 -> u^2+2uv, e3 -> u^2 v before expansion.
    auto u = c21.part_vars;
    auto e1 = restrict_to_fixed_locus(elementary_symmetric(x3, {0, 1, 2}, 1), c21);
    auto e2 = restrict_to_fixed_locus(elementary_symmetric(x3, {0, 1, 2}, 2), c21);
    auto e3 = restrict_to_fixed_locus(elementary_symmetric(x3, {0, 1, 2}, 3), c21);
    CHECK(e1 == parse("2*u1 + u2", u));
    CHECK(e2 == parse("u1^2 + 2*u1*u2", u));
    CHECK(e3 == parse("u1^2*u2", u));
    auto f = parse("x1^3 + x2^3 + x3^3", x3);
    CHECK_THROWS_AS(restrict_to_fixed_locus(f, make_chart(Partition({2, 2}))), Error);
}

TEST_CASE("invariantize known identities") {
    auto c11 = make_chart(Partition({1, 1}));
    auto u = c11.part_vars;
    auto e = c11.invariant_vars;
    CHECK(invariantize(parse("u1^2 + u2^2", u), c11) == parse("e1_1^2 - 2*e1_2", e));
    CHECK(invariantize(parse("u1^3 + u2^3", u), c11) == parse("e1_1^3 - 3*e1_1*e1_2", e));
    CHECK(invariantize(QPoly(u), c11).is_zero());

    auto c21 = make_chart(Partition({2, 1}));
    auto g = parse("2*u1 + u2", c21.part_vars);
    CHECK(invariantize(g, c21) == parse("2*e2_1 + e1_1", c21.invariant_vars));

    CHECK_THROWS_AS(invariantize(parse("u1^2*u2", u), c11), Error);
}

TEST_CASE("expand_invariant") {
    auto c11 = make_chart(Partition({1, 1}));
    CHECK(expand_invariant(parse("e1_1^2 - 2*e1_2", c11.invariant_vars), c11) ==
          parse("u1^2 + u2^2", c11.part_vars));
    auto c111 = make_chart(Partition({1, 1, 1}));
    CHECK(expand_invariant(parse("e1_2", c111.invariant_vars), c111) ==
          parse("u1*u2 + u1*u3 + u2*u3", c111.part_vars));
    CHECK(expand_invariant(QPoly(c111.invariant_vars), c111).is_zero());
}

TEST_CASE("roundtrip on 200 random block-symmetric polynomials") {
    std::mt19937 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto chart = make_chart(random_partition(rng));
        auto h = random_invariant(rng, chart, 6, false);
        auto g = expand_invariant(h, chart);
        auto back = invariantize(g, chart);
        CHECK(back == h);
        CHECK(expand_invariant(back, chart) == g);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("grading is preserved") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto chart = make_chart(random_partition(rng));
        int d = 1 + trial % 6;
        auto g = expand_invariant(random_invariant(rng, chart, d, true), chart);
        if (g.is_zero()) continue;
        auto wd = weighted_degree(g);
        REQUIRE(wd.homogeneous);
        auto inv = invariantize(g, chart);
        CHECK(weighted_degree(inv).homogeneous);
        CHECK(weighted_degree(inv).degree == wd.degree);
    }
}

TEST_CASE("symmetry gate and linearity") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        auto chart = make_chart(random_partition(rng));
        auto g1 = expand_invariant(random_invariant(rng, chart, 4, false), chart);
        auto g2 = expand_invariant(random_invariant(rng, chart, 4, false), chart);
        Rational a = testing::random_nonzero_rational(rng);
        CHECK(invariantize(g1.scaled(a) + g2, chart) ==
              invariantize(g1, chart).scaled(a) + invariantize(g2, chart));

        for (const auto& block : chart.group_blocks) {
            if (block.size() < 2) continue;
            auto broken = g1 + QPoly::variable(chart.part_vars, block.front());
            CHECK_THROWS_AS(invariantize(broken, chart), Error);
        }
    }
}
