#ifndef SODLAB_SYMMETRIZE_HPP
#define SODLAB_SYMMETRIZE_HPP

#include <vector>

#include "sodlab/partitions.hpp"
#include "sodlab/poly.hpp"

namespace sodlab {

/// Coordinates on the fixed locus V_lambda of the consecutive-blocks
/// representative and on its quotient by the product of symmetric groups
/// permuting equal parts.
///
/// Part variables u1..um follow the parts of lambda in order (largest part
/// first). Invariant variables e{i}_{j} are grouped by distinct part size i in
/// ascending order, j = 1..r_i, with weight j; their weight vector is exactly
/// ambient_weights(lambda).
struct FixedLocusChart {
    Partition partition;
    VarSpecPtr part_vars;
    /// One block of part-variable indices per distinct part size, ascending.
    VariableBlocks group_blocks;
    std::vector<int> block_part_sizes;
    VarSpecPtr invariant_vars;
    /// (block, j) for each invariant variable, j starting at 1.
    std::vector<std::pair<std::size_t, int>> invariant_slots;

    std::size_t block_of_invariant(std::size_t var) const { return invariant_slots[var].first; }
    int index_of_invariant(std::size_t var) const { return invariant_slots[var].second; }
    /// Invariant variable index of e{block}_{j}.
    std::size_t invariant_var(std::size_t block, int j) const;
};

FixedLocusChart make_chart(const Partition& lambda);

/// f|_{V_lambda}: coordinate k of the ambient space is replaced by the part
/// variable of the block containing k. f must live over exactly n variables.
QPoly restrict_to_fixed_locus(const QPoly& f, const FixedLocusChart& chart);

/// Rewrites a block-symmetric polynomial over the part variables in the
/// elementary symmetric coordinates of the chart (multi-block Gauss
/// algorithm). Throws InvalidInput naming the violating transposition when g
/// is not block-symmetric.
QPoly invariantize(const QPoly& g, const FixedLocusChart& chart);

/// Substitutes each e{i}_{j} by the j-th elementary symmetric polynomial of
/// block i.
QPoly expand_invariant(const QPoly& h, const FixedLocusChart& chart);

/// The elementary symmetric polynomials standing behind the invariant
/// variables, over the part variables.
std::vector<QPoly> invariant_images(const FixedLocusChart& chart);

}  // namespace sodlab

#endif  // SODLAB_SYMMETRIZE_HPP
