#ifndef SODLAB_CYCLIC_HPP
#define SODLAB_CYCLIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "sodlab/poly.hpp"

namespace sodlab {

struct RamificationOrbit {
    std::string label;
    /// Order of the cyclic stabilizer of a point in the orbit.
    int m = 2;
};

struct RamificationDatum {
    std::vector<RamificationOrbit> orbits;

    /// Orbits labelled D1, D2, ... with the given stabilizer orders.
    static RamificationDatum from_orders(const std::vector<int>& orders);
};

struct CurvePiece {
    enum class Kind { Exceptional, Coarse };
    Kind kind = Kind::Coarse;
    /// Index of the orbit block, or -1 for the coarse piece.
    int block = -1;
    /// Tensor power j of the canonical sheaf restricted to the orbit.
    int power = 0;
    std::string label;
};

struct CurveDecomposition {
    std::vector<CurvePiece> pieces;
    int exceptional_count = 0;
};

/// Blocks of m-1 exceptional objects per ramification orbit, then the pull-back
/// of the coarse curve.
CurveDecomposition curve_decomposition(const RamificationDatum& datum);

using LabelTuple = std::vector<std::string>;

/// Lexicographic order on factor indices, which refines the componentwise order.
std::vector<LabelTuple> product_order(const std::vector<std::vector<std::string>>& factor_orders);

struct CyclicGroupElement {
    /// g = (zeta_1^{n_1}, ..., zeta_k^{n_k}) with 0 <= n_i < d_i.
    std::vector<int> exponents;
};

struct CyclicPiece {
    CyclicGroupElement element;
    /// Number of trivial components of g.
    int fixed_dim = 0;
    /// d_i for the trivial components, in coordinate order.
    std::vector<int> weights;
    /// Trivial coordinates (0-based), in order.
    std::vector<std::size_t> fixed_coordinates;
    /// Exponents of chi_g = chi_1^{n_1} ... chi_k^{n_k}.
    std::vector<int> character;
    std::size_t order_index = 0;
    std::string label;
};

/// One piece per element of mu_{d_1} x ... x mu_{d_k} acting on A^k, ordered
/// lexicographically with descending n_i in each factor.
std::vector<CyclicPiece> mu_affine_decomposition(const std::vector<int>& d);

struct ProjectiveCyclicPiece {
    CyclicPiece piece;
    bool empty = false;
    /// Equation of the hypersurface piece in P(d_g), over y_i = x_i^{d_i}.
    std::optional<QPoly> fbar;
    std::optional<int> rank;
    std::string label;
};

struct CyclicProjectiveReport {
    std::vector<int> d;
    std::optional<std::string> poly;
    std::vector<ProjectiveCyclicPiece> pieces;
    std::optional<long> total_rank;
    std::vector<std::string> notes;
};

/// Pieces P(d_g) of D[P^{k-1}/G], or with f the hypersurface pieces of
/// D[P H(f)/G]. Throws HypothesisFailure naming the offending coordinate
/// subspace when f vanishes on a required one.
CyclicProjectiveReport mu_projective_decomposition(const std::vector<int>& d,
                                                   const std::optional<QPoly>& f = std::nullopt);

/// Whether every monomial of f has i-th exponent divisible by d_i.
bool is_diagonal_invariant(const QPoly& f, const std::vector<int>& d);

/// Restriction of f to the span of the given coordinates, rewritten in
/// y_i = x_i^{d_i} with weight d_i.
QPoly restrict_to_coordinates(const QPoly& f, const std::vector<std::size_t>& coords, const std::vector<int>& d);

}  // namespace sodlab

#endif  // SODLAB_CYCLIC_HPP
