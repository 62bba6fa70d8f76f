#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "sodlab/cyclic.hpp"
#include "sodlab/error.hpp"
#include "test_support.hpp"

using namespace sodlab;
using sodlab::testing::parse;

TEST_CASE("curve decomposition") {
    auto one = curve_decomposition(RamificationDatum::from_orders({5}));
    CHECK(one.exceptional_count == 4);
    REQUIRE(one.pieces.size() == 5);
    CHECK(one.pieces[0].label == "omega^1|D1");
    CHECK(one.pieces.back().kind == CurvePiece::Kind::Coarse);

    auto none = curve_decomposition(RamificationDatum{});
    CHECK(none.exceptional_count == 0);
    CHECK(none.pieces.size() == 1);

    auto two = curve_decomposition(RamificationDatum::from_orders({2, 3}));
    CHECK(two.exceptional_count == 3);
    std::map<int, int> block_sizes;
    for (const auto& p : two.pieces)
        if (p.kind == CurvePiece::Kind::Exceptional) ++block_sizes[p.block];
    CHECK(block_sizes == std::map<int, int>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(curve_decomposition(RamificationDatum::from_orders({1})), Error);
}

TEST_CASE("exceptional counts match twisted sectors of the local stabilizer") {
    // A point with stabilizer Z/m: the m-1 nontrivial elements each fix it,
    // and the local model mu_m on A^1 has m-1 twisted point pieces.
    for (int m = 2; m <= 9; ++m) {
        auto curve = curve_decomposition(RamificationDatum::from_orders({m}));
        int twisted = 0;
        for (const auto& p : mu_affine_decomposition({m}))
            if (p.fixed_dim == 0) ++twisted;
        CHECK(curve.exceptional_count == twisted);
    }
}

TEST_CASE("product order") {
    auto two = product_order({{"a", "b"}, {"x", "y"}});
    CHECK(two == std::vector<LabelTuple>{{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}});
    CHECK(product_order({{"p", "q", "r"}}) == std::vector<LabelTuple>{{"p"}, {"q"}, {"r"}});
    CHECK_THROWS_AS(product_order({{"a"}, {}}), Error);

    // Refinement of the componentwise order, exhaustively for chains up to 4.
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 2; ++c) {
                std::vector<std::vector<std::string>> factors;
                for (int len : {a, b, c}) {
                    std::vector<std::string> chain;
                    for (int i = 0; i < len; ++i) chain.push_back(std::to_string(i));
                    factors.push_back(chain);
                }
                auto order = product_order(factors);
                CHECK(order.size() == static_cast<std::size_t>(a * b * c));
                for (std::size_t i = 0; i < order.size(); ++i)
                    for (std::size_t j = 0; j < order.size(); ++j) {
                        bool leq = true;
                        for (std::size_t f = 0; f < 3; ++f) leq = leq && std::stoi(order[i][f]) <= std::stoi(order[j][f]);
                        if (leq) CHECK(i <= j);
                    }
            }
}

TEST_CASE("mu affine decomposition") {
    auto d22 = mu_affine_decomposition({2, 2});
    REQUIRE(d22.size() == 4);
    CHECK(d22[0].element.exponents == std::vector<int>{1, 1});
    CHECK(d22[0].fixed_dim == 0);
    CHECK(d22[1].element.exponents == std::vector<int>{1, 0});
    CHECK(d22[1].fixed_dim == 1);
    CHECK(d22[1].weights == std::vector<int>{2});
    CHECK(d22[2].element.exponents == std::vector<int>{0, 1});
    CHECK(d22[2].fixed_dim == 1);
    CHECK(d22[3].fixed_dim == 2);
    CHECK(d22[3].weights == std::vector<int>{2, 2});
    CHECK(d22[3].label == "pi^* D(A^2_{2,2})");

    for (int d = 2; d <= 6; ++d) {
        auto pieces = mu_affine_decomposition({d});
        REQUIRE(pieces.size() == static_cast<std::size_t>(d));
        for (int j = 0; j < d - 1; ++j) {
            CHECK(pieces[static_cast<std::size_t>(j)].character == std::vector<int>{d - 1 - j});
            CHECK(pieces[static_cast<std::size_t>(j)].fixed_dim == 0);
        }
        CHECK(pieces.back().fixed_dim == 1);
    }
    auto trivial = mu_affine_decomposition({1});
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].fixed_dim == 1);
}

TEST_CASE("n_g multiset matches the product expansion") {
    std::vector<std::vector<int>> cases{{2, 3}, {3, 3, 2}, {1, 4, 2}, {5}, {2, 2, 2, 2}};
    for (const auto& d : cases) {
        auto pieces = mu_affine_decomposition(d);
        std::size_t expected_count = 1;
        for (int x : d) expected_count *= static_cast<std::size_t>(x);
        CHECK(pieces.size() == expected_count);
        // Coefficients of prod (t + (d_i - 1)).
        std::vector<long> poly{1};
        for (int x : d) {
            std::vector<long> next(poly.size() + 1, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] += poly[i] * (x - 1);
            }
            poly = next;
        }
        std::vector<long> counts(d.size() + 1, 0);
        for (const auto& p : pieces) ++counts[static_cast<std::size_t>(p.fixed_dim)];
        CHECK(counts == poly);
        for (std::size_t i = 0; i < pieces.size(); ++i) CHECK(pieces[i].order_index == i);
        for (std::size_t i = 1; i < pieces.size(); ++i) CHECK(pieces[i - 1].element.exponents > pieces[i].element.exponents);
    }
}

TEST_CASE("mu projective decomposition") {
    auto r = mu_projective_decomposition({2, 2});
    std::vector<int> ranks;
    for (const auto& p : r.pieces) ranks.push_back(*p.rank);
    CHECK(ranks == std::vector<int>{0, 2, 2, 4});
    CHECK(*r.total_rank == 8);

    for (int d = 1; d <= 6; ++d) {
        auto rd = mu_projective_decomposition({d});
        CHECK(*rd.total_rank == d);
        CHECK(*rd.pieces.back().rank == d);
    }

    // Sum over g of sum d_g equals k * |G|.
    for (const auto& d : std::vector<std::vector<int>>{{2, 3}, {3, 1, 2}, {4, 4}}) {
        long order = 1;
        for (int x : d) order *= x;
        CHECK(*mu_projective_decomposition(d).total_rank == static_cast<long>(d.size()) * order);
    }
}

TEST_CASE("mu projective hypersurfaces") {
    auto v = VarSpec::numbered("x", 3);
    auto conic = mu_projective_decomposition({2, 1, 1}, parse("x1^2 - x2^2 - x3^2", v));
    REQUIRE(conic.notes.size() == 1);
    CHECK(conic.notes[0].find("cyclic cover of P^1") != std::string::npos);
    CHECK(*conic.total_rank == 4);
    CHECK(conic.pieces[0].label == "2 points");
    CHECK(conic.pieces[1].label == "P(1,1)");

    auto fermat = mu_projective_decomposition({2, 2, 2}, parse("x1^2 + x2^2 + x3^2", v));
    CHECK(fermat.pieces.size() == 8);

    try {
        mu_projective_decomposition({2, 1, 1}, parse("x2^2 - x3^2 + x1^2*0", v));
        FAIL("expected a failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisFailure);
    }
    try {
        mu_projective_decomposition({2, 2, 2}, parse("x1^2 + x2^2 - 2*x3^2", v).scaled(1) +
                                                   parse("0*x1", v));
    } catch (const Error&) {
        FAIL("smooth Fermat-type conic should pass");
    }
    try {
        mu_projective_decomposition({2, 2, 1}, parse("x1^2 + x2^2", v));
        FAIL("expected a failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisFailure);
    }
    try {
        mu_projective_decomposition({3, 1, 1}, parse("x1^2*x2 + x3^3", v));
        FAIL("expected a failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisFailure);
        CHECK(std::string(e.what()).find("invariant") != std::string::npos);
    }
    auto x4 = VarSpec::numbered("x", 3);
    try {
        mu_projective_decomposition({2, 2, 2}, parse("x1^2 + x2^2", x4));
        FAIL("expected a failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisFailure);
    }
}
