#include "sodlab/symmetrize.hpp"

#include <map>

namespace sodlab {

std::size_t FixedLocusChart::invariant_var(std::size_t block, int j) const {
    for (std::size_t v = 0; v < invariant_slots.size(); ++v)
        if (invariant_slots[v].first == block && invariant_slots[v].second == j) return v;
    throw Error(ErrorKind::InvalidInput, "no such invariant variable");
}

FixedLocusChart make_chart(const Partition& lambda) {
    FixedLocusChart chart{lambda, nullptr, {}, {}, nullptr, {}};
    chart.part_vars = VarSpec::numbered("u", static_cast<int>(lambda.length()));

    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& [part, mult] : exponential_form(lambda)) {
        std::vector<std::size_t> block;
        for (std::size_t k = 0; k < lambda.length(); ++k)
            if (lambda[k] == part) block.push_back(k);
        std::size_t b = chart.group_blocks.size();
        chart.group_blocks.push_back(std::move(block));
        chart.block_part_sizes.push_back(part);
        for (int j = 1; j <= mult; ++j) {
            names.push_back("e" + std::to_string(part) + "_" + std::to_string(j));
            weights.push_back(j);
            chart.invariant_slots.emplace_back(b, j);
        }
    }
    chart.invariant_vars = VarSpec::make(std::move(names), std::move(weights));
    return chart;
}

QPoly restrict_to_fixed_locus(const QPoly& f, const FixedLocusChart& chart) {
    const Partition& lambda = chart.partition;
    if (static_cast<int>(f.vars().size()) != lambda.n())
        throw Error(ErrorKind::InvalidInput, "polynomial has " + std::to_string(f.vars().size()) +
                                                 " variables but the partition is of " +
                                                 std::to_string(lambda.n()));
    std::vector<QPoly> images;
    for (std::size_t k = 0; k < lambda.length(); ++k)
        for (int c = 0; c < lambda[k]; ++c) images.push_back(QPoly::variable(chart.part_vars, k));
    return substitute(f, images);
}

std::vector<QPoly> invariant_images(const FixedLocusChart& chart) {
    std::vector<QPoly> images;
    for (const auto& [block, j] : chart.invariant_slots)
        images.push_back(elementary_symmetric(chart.part_vars, chart.group_blocks[block], j));
    return images;
}

QPoly expand_invariant(const QPoly& h, const FixedLocusChart& chart) {
    if (!(h.vars() == *chart.invariant_vars))
        throw Error(ErrorKind::InvalidInput, "polynomial is not over the chart's invariant variables");
    return substitute(h, invariant_images(chart));
}

QPoly invariantize(const QPoly& g, const FixedLocusChart& chart) {
    if (!(g.vars() == *chart.part_vars))
        throw Error(ErrorKind::InvalidInput, "polynomial is not over the chart's part variables");
    if (auto bad = find_symmetry_violation(g, chart.group_blocks))
        throw Error(ErrorKind::InvalidInput,
                    "polynomial is not invariant under the transposition (" +
                        chart.part_vars->name(bad->first) + " " + chart.part_vars->name(bad->second) + ")");

    const auto images = invariant_images(chart);
    std::map<std::pair<std::size_t, int>, std::vector<QPoly>> powers;
    auto power_of = [&](std::size_t var, int k) -> const QPoly& {
        auto& cache = powers[{var, 0}];
        if (cache.empty()) cache.push_back(QPoly::constant(chart.part_vars, 1));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[var]);
        return cache[static_cast<std::size_t>(k)];
    };

    QPoly remaining = g;
    QPoly result(chart.invariant_vars);
    while (!remaining.is_zero()) {
        // Lex-leading term: terms are keyed in lex order with variable 0 most
        // significant, and part variables are laid out block by block.
        const Exponents lead = remaining.terms().rbegin()->first;
        const Rational coeff = remaining.terms().rbegin()->second;

        Exponents inv(chart.invariant_vars->size(), 0);
        for (std::size_t b = 0; b < chart.group_blocks.size(); ++b) {
            const auto& block = chart.group_blocks[b];
            for (std::size_t j = 0; j < block.size(); ++j) {
                int here = lead[block[j]];
                int next = j + 1 < block.size() ? lead[block[j + 1]] : 0;
                if (here < next)
                    throw Error(ErrorKind::InternalError, "leading exponents not sorted within a block");
                inv[chart.invariant_var(b, static_cast<int>(j) + 1)] = here - next;
            }
        }
        QPoly expansion = QPoly::constant(chart.part_vars, coeff);
        for (std::size_t v = 0; v < inv.size(); ++v)
            if (inv[v] > 0) expansion *= power_of(v, inv[v]);
        remaining -= expansion;
        result.add_term(inv, coeff);
    }
    return result;
}

}  // namespace sodlab
