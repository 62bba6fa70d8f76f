#include "sodlab/idealcheck.hpp"

#include "sodlab/symmetrize.hpp"

namespace sodlab {

const char* to_string(MonomialOrder order) {
    switch (order) {
        case MonomialOrder::GrevLex: return "grevlex";
        case MonomialOrder::Lex: return "lex";
    }
    return "unknown";
}

std::string HypothesisFailure::summary(const GenericityReport& report) {
    std::string out = "hypothesis failure:";
    for (const auto& f : report.failures) out += " [" + f + "]";
    return out;
}

bool difference_divides(const QPoly& f, std::size_t var_a, std::size_t var_b) {
    // (a - b) | f  iff  f vanishes on the hyperplane a = b.
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < f.vars().size(); ++i)
        images.push_back(QPoly::variable(f.vars_ptr(), i == var_a ? var_b : i));
    return substitute(f, images).is_zero();
}

GenericityReport genericity_report(const QPoly& f, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be positive");
    if (static_cast<int>(f.vars().size()) != n)
        throw Error(ErrorKind::InvalidInput, "polynomial must be over exactly n variables");
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "the zero polynomial defines no hypersurface");

    GenericityReport report;
    report.n = n;
    report.poly = to_string(f);

    auto wd = weighted_degree(f);
    report.degree = wd.degree;
    if (!wd.homogeneous) {
        report.homogeneous = false;
        report.failures.push_back("homogeneous: terms of degrees " + std::to_string(total_degree(wd.witness_a)) +
                                  " and " + std::to_string(total_degree(wd.witness_b)));
    }
    std::vector<std::size_t> all(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (auto bad = find_symmetry_violation(f, VariableBlocks{all})) {
        report.symmetric = false;
        report.failures.push_back("symmetric: not invariant under (" + f.vars().name(bad->first) + " " +
                                  f.vars().name(bad->second) + ")");
    }
    if (!report.passes()) throw HypothesisFailure(report);
    if (wd.degree < 1) {
        report.failures.push_back("degree: constant polynomial");
        throw HypothesisFailure(report);
    }

    report.value_at_ones = evaluate(f, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    if (report.value_at_ones == 0) report.failures.push_back("value_at_ones: f(1,...,1) = 0");

    for (const auto& lambda : sod_order(n)) {
        PartitionCheck check{lambda, true, true, std::nullopt};
        auto chart = make_chart(lambda);
        QPoly restricted = restrict_to_fixed_locus(f, chart);
        check.restriction_nonzero = !restricted.is_zero();
        if (!check.restriction_nonzero) {
            check.density_ok = false;
            report.failures.push_back("restriction_nonzero " + lambda.to_string() + ": f vanishes on V_lambda");
        } else {
            for (const auto& block : chart.group_blocks) {
                for (std::size_t a = 0; a < block.size() && check.density_ok; ++a)
                    for (std::size_t b = a + 1; b < block.size() && check.density_ok; ++b)
                        if (difference_divides(restricted, block[a], block[b])) {
                            check.density_ok = false;
                            check.offending_pair =
                                std::make_pair(chart.part_vars->name(block[a]), chart.part_vars->name(block[b]));
                        }
            }
            if (!check.density_ok)
                report.failures.push_back("density " + lambda.to_string() + ": (" + check.offending_pair->first +
                                          " - " + check.offending_pair->second + ") divides f_lambda");
        }
        report.partitions.push_back(std::move(check));
    }

    report.smooth = projective_smooth(f);
    if (!report.smooth) report.failures.push_back("smooth: projective hypersurface H(f) is singular");
    return report;
}

}  // namespace sodlab
