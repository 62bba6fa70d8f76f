#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sodlab/assembler.hpp"
#include "sodlab/symmetrize.hpp"
#include "test_support.hpp"

using namespace sodlab;
using sodlab::testing::parse;

namespace {

std::vector<std::size_t> all_indices(int n) {
    std::vector<std::size_t> out;
    for (int i = 0; i < n; ++i) out.push_back(static_cast<std::size_t>(i));
    return out;
}

/// alpha*e1^3 + beta*e1*e2 + gamma*e3 over x1..xn.
QPoly cubic(int n, Rational alpha, Rational beta, Rational gamma) {
    auto v = VarSpec::numbered("x", n);
    auto e = [&](int k) { return elementary_symmetric<RationalField>(v, all_indices(n), k); };
    QPoly f = e(1).pow(3).scaled(alpha) + (e(1) * e(2)).scaled(beta);
    if (n >= 3) f += e(3).scaled(gamma);
    return f;
}

/// alpha*p1^3 + beta*p1*p2 + gamma*p3 over x1..xn.
QPoly power_cubic(int n, Rational alpha, Rational beta, Rational gamma) {
    auto v = VarSpec::numbered("x", n);
    auto p = [&](int k) { return power_sum<RationalField>(v, all_indices(n), k); };
    return p(1).pow(3).scaled(alpha) + (p(1) * p(2)).scaled(beta) + p(3).scaled(gamma);
}

const Piece& piece_for(const DecompReport& r, const Partition& lambda) {
    for (const auto& p : r.pieces)
        if (p.partition == lambda) return p;
    throw std::runtime_error("missing piece");
}

}  // namespace

TEST_CASE("projective space decomposition") {
    auto r3 = decompose_projective_space(3);
    REQUIRE(r3.pieces.size() == 3);
    CHECK(r3.pieces[0].partition == Partition({1, 1, 1}));
    CHECK(r3.pieces[0].weights == WeightVector{1, 2, 3});
    CHECK(r3.pieces[0].label() == "P(1,2,3)");
    CHECK(*r3.pieces[0].classification.rank == 6);
    CHECK(r3.pieces[1].weights == WeightVector{1, 1});
    CHECK(*r3.pieces[1].classification.rank == 2);
    CHECK(*r3.pieces[2].classification.rank == 1);
    CHECK(*r3.total_rank == 9);

    auto r1 = decompose_projective_space(1);
    REQUIRE(r1.pieces.size() == 1);
    CHECK(r1.pieces[0].label() == "P(1)");
    CHECK(*r1.total_rank == 1);
    CHECK(*decompose_projective_space(4).total_rank == 20);

    for (int n = 1; n <= 9; ++n) {
        auto r = decompose_projective_space(n);
        long expected = 0;
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& [part, mult] : exponential_form(lambda)) expected += mult * (mult + 1) / 2;
        CHECK(*r.total_rank == expected);
        CHECK(*r.total_rank == static_cast<long>(n * enumerate_partitions(n).size()));
        CHECK(r.pieces.size() == enumerate_partitions(n).size());
    }
}

TEST_CASE("the S3 plane cubic example") {
    auto r = decompose_invariant_hypersurface(cubic(3, 1, 1, 1), 3);
    REQUIRE(r.pieces.size() == 3);
    CHECK(*r.degree == 3);
    const auto& p111 = r.pieces[0];
    const auto& p21 = r.pieces[1];
    const auto& p3 = r.pieces[2];
    CHECK(p3.classification.kind == PieceKind::Empty);
    CHECK(p21.classification.kind == PieceKind::FinitePoints);
    CHECK(p21.classification.plain_points == 3);
    CHECK(p21.classification.stacky_points == 0);
    CHECK(p21.classification.reduced);
    CHECK(p21.label() == "3 points");
    CHECK(p111.classification.kind == PieceKind::NormalForm);
    CHECK(p111.label() == "P(1,2)");
    CHECK(p111.classification.normal_form->verified());
    CHECK(p111.classification.notes.front() == "coarse birational piece");
    CHECK(*r.total_rank == 6);
    CHECK(to_string(*p111.fbar) == "e1_1^3 + e1_1*e1_2 + e1_3");
}

TEST_CASE("p3 and other coefficient triples give the same shapes") {
    std::vector<QPoly> fs{parse("x1^3 + x2^3 + x3^3", VarSpec::numbered("x", 3)), cubic(3, 2, -1, 5),
                          cubic(3, Rational(1, 2), 3, -2)};
    for (const auto& f : fs) {
        auto r = decompose_invariant_hypersurface(f, 3);
        CHECK(r.pieces[2].classification.kind == PieceKind::Empty);
        CHECK(r.pieces[1].label() == "3 points");
        CHECK(r.pieces[0].label() == "P(1,2)");
        CHECK(*r.total_rank == 6);
    }
}

TEST_CASE("weight removal for invariant cubics with n = 4 and 5") {
    auto r4 = decompose_invariant_hypersurface(power_cubic(4, 1, 2, 3), 4);
    const auto& top4 = piece_for(r4, Partition({1, 1, 1, 1}));
    CHECK(top4.weights == WeightVector{1, 2, 3, 4});
    REQUIRE(top4.classification.kind == PieceKind::NormalForm);
    CHECK(top4.classification.normal_form->model_weights == std::vector<int>{1, 2, 4});
    CHECK(top4.classification.normal_form->verified());
    CHECK(*top4.classification.rank == 7);

    auto r5 = decompose_invariant_hypersurface(power_cubic(5, 1, 2, 3), 5);
    const auto& top5 = piece_for(r5, Partition({1, 1, 1, 1, 1}));
    CHECK(top5.classification.normal_form->model_weights == std::vector<int>{1, 2, 4, 5});
    const auto& p2111 = piece_for(r5, Partition({2, 1, 1, 1}));
    CHECK(p2111.classification.normal_form->model_weights == std::vector<int>{1, 1, 2});
    CHECK(*r5.total_rank == 28);
}

TEST_CASE("n = 4 cubic strata") {
    auto r = decompose_invariant_hypersurface(power_cubic(4, 1, 2, 3), 4);
    const auto& p22 = piece_for(r, Partition({2, 2}));
    CHECK(p22.classification.plain_points == 1);
    CHECK(p22.classification.stacky_points == 1);
    CHECK(p22.classification.stacky_order == 2);
    CHECK(*p22.classification.rank == 3);
    CHECK(p22.classification.notes.size() == 1);

    const auto& p211 = piece_for(r, Partition({2, 1, 1}));
    REQUIRE(p211.classification.kind == PieceKind::NormalForm);
    CHECK(p211.label() == "P(1,2)");
    CHECK(p211.classification.normal_form->verified());
    CHECK(p211.classification.notes.size() == 2);

    CHECK(piece_for(r, Partition({3, 1})).label() == "3 points");
    CHECK(piece_for(r, Partition({4})).label() == "empty");
    CHECK(*r.total_rank == 16);
}

TEST_CASE("n = 6 cubic has an elliptic piece and a P(1,2)xP1 piece") {
    auto r = decompose_invariant_hypersurface(power_cubic(6, 1, 2, 3), 6);
    const auto& p321 = piece_for(r, Partition({3, 2, 1}));
    CHECK(p321.classification.kind == PieceKind::PlainProjectiveVariety);
    CHECK(p321.classification.elliptic);
    CHECK_FALSE(p321.classification.rank);
    const auto& p2211 = piece_for(r, Partition({2, 2, 1, 1}));
    REQUIRE(p2211.classification.kind == PieceKind::NormalForm);
    CHECK(p2211.label() == "P(1,2)xP1");
    CHECK(*p2211.classification.rank == 6);
    CHECK(p2211.classification.normal_form->verified());
    CHECK_FALSE(r.total_rank);
}

TEST_CASE("classify_piece examples") {
    auto c4 = make_chart(Partition({4}));
    CHECK(classify_piece(Partition({4}), parse("5*e4_1^3", c4.invariant_vars), 3).kind == PieceKind::Empty);

    auto c22 = make_chart(Partition({2, 2}));
    auto cls = classify_piece(Partition({2, 2}), parse("e2_1^3 + 3*e2_1*e2_2", c22.invariant_vars), 3);
    CHECK(cls.kind == PieceKind::FinitePoints);
    CHECK(cls.plain_points == 1);
    CHECK(cls.stacky_points == 1);
    CHECK(*cls.rank == 3);

    auto c21 = make_chart(Partition({2, 1}));
    auto nonreduced = classify_piece(Partition({2, 1}), parse("e1_1^2*e2_1", c21.invariant_vars), 3);
    CHECK(nonreduced.plain_points == 2);
    CHECK_FALSE(nonreduced.reduced);
    CHECK_FALSE(nonreduced.rank);

    CHECK_THROWS_AS(classify_piece(Partition({2, 1}), parse("e1_1*e2_1", c21.invariant_vars), 3), Error);
    CHECK_THROWS_AS(classify_piece(Partition({2, 2}), parse("e2_1^3", c21.invariant_vars), 3), Error);
}

TEST_CASE("cubic_normal_form degenerate coefficients") {
    auto c111 = make_chart(Partition({1, 1, 1}));
    try {
        cubic_normal_form(Partition({1, 1, 1}), parse("e1_1^3 + e1_1*e1_2", c111.invariant_vars));
        FAIL("expected a degenerate coefficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateCoefficient);
        CHECK(std::string(e.what()).find("gamma") != std::string::npos);
    }
    auto cls = classify_piece(Partition({1, 1, 1}), parse("e1_1^3 + e1_1*e1_2", c111.invariant_vars), 3);
    CHECK(cls.kind == PieceKind::WeightedStackHypersurface);
    CHECK_FALSE(cls.rank);

    auto c211 = make_chart(Partition({2, 1, 1}));
    CHECK_THROWS_AS(cubic_normal_form(Partition({2, 1, 1}), parse("e1_2*e1_1 + e2_1^3", c211.invariant_vars)),
                    Error);
    CHECK_THROWS_AS(cubic_normal_form(Partition({2, 1, 1}), parse("e1_2*e2_1 + e1_1^2*e2_1", c211.invariant_vars)),
                    Error);
    auto ok = cubic_normal_form(Partition({2, 1, 1}), parse("e1_2*e2_1 + e1_1^3", c211.invariant_vars));
    CHECK(ok.model == "P(1,2)");
    CHECK(ok.verified());

    auto c2211 = make_chart(Partition({2, 2, 1, 1}));
    CHECK_THROWS_AS(cubic_normal_form(Partition({2, 2, 1, 1}),
                                      parse("e1_2*e1_1 + e2_2*e1_1 + e2_1^3", c2211.invariant_vars)),
                    Error);
    CHECK_THROWS_AS(cubic_normal_form(Partition({3, 2, 1}), QPoly(make_chart(Partition({3, 2, 1})).invariant_vars)),
                    Error);
}

TEST_CASE("normal-form certificates compose to zero on random cubics") {
    std::mt19937 rng(31);
    int certified = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + trial % 4;
        QPoly f = power_cubic(n, testing::random_rational(rng), testing::random_rational(rng),
                              testing::random_nonzero_rational(rng));
        for (const auto& lambda : enumerate_partitions(n)) {
            auto chart = make_chart(lambda);
            QPoly fbar = invariantize(restrict_to_fixed_locus(f, chart), chart);
            if (fbar.is_zero() || chart.invariant_vars->size() < 2) continue;
            try {
                auto data = cubic_normal_form(lambda, fbar);
                for (const auto& cert : data.certificates) {
                    CHECK(substitute(fbar, cert.images).is_zero());
                    ++certified;
                }
            } catch (const Error& e) {
                CHECK((e.kind() == ErrorKind::DegenerateCoefficient || e.kind() == ErrorKind::UnsupportedStratum));
            }
        }
    }
    CHECK(certified > 60);
}

TEST_CASE("bijection and weighted homogeneity") {
    std::mt19937 rng(8);
    for (int n = 2; n <= 5; ++n) {
        QPoly f = power_cubic(n, 1, testing::random_rational(rng), 2 + n);
        DecompReport r;
        try {
            r = decompose_invariant_hypersurface(f, n);
        } catch (const HypothesisFailure&) {
            continue;
        }
        CHECK(r.pieces.size() == enumerate_partitions(n).size());
        auto order = sod_order(n);
        for (std::size_t i = 0; i < r.pieces.size(); ++i) {
            CHECK(r.pieces[i].partition == order[i]);
            auto wd = weighted_degree(*r.pieces[i].fbar);
            CHECK(wd.homogeneous);
            CHECK(wd.degree == 3);
        }
    }
}

TEST_CASE("hypothesis failures propagate") {
    auto v = VarSpec::numbered("x", 3);
    CHECK_THROWS_AS(decompose_invariant_hypersurface(parse("(x1 + x2 + x3)^3", v), 3), HypothesisFailure);
    CHECK_THROWS_AS(decompose_invariant_hypersurface(parse("x1^3 + x2^3", v), 3), HypothesisFailure);
}

TEST_CASE("even degree: quadrics and quartics") {
    auto r = decompose_invariant_hypersurface(power_cubic(3, 0, 0, 0) + power_sum<RationalField>(
                                                  VarSpec::numbered("x", 3), all_indices(3), 2), 3);
    CHECK(r.pieces[0].label() == "P(1,3)");
    CHECK(*r.pieces[0].classification.rank == 4);
    CHECK(r.pieces[1].label() == "2 points");
}
