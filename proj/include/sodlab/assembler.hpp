#ifndef SODLAB_ASSEMBLER_HPP
#define SODLAB_ASSEMBLER_HPP

#include <optional>
#include <string>
#include <vector>

#include "sodlab/idealcheck.hpp"
#include "sodlab/partitions.hpp"
#include "sodlab/poly.hpp"

namespace sodlab {

enum class PieceKind {
    FullAmbient,
    Empty,
    FinitePoints,
    WeightedStackHypersurface,
    PlainProjectiveVariety,
    NormalForm,
};

const char* to_string(PieceKind kind);

/// A parametrization of a component of H(fbar): one image per invariant
/// variable, as polynomials in the parameters.
struct Certificate {
    std::string description;
    VarSpecPtr parameters;
    std::vector<QPoly> images;
    bool verified = false;
};

struct NormalFormData {
    /// Target model, e.g. "P(1,2)" or "P(1,2)xP1".
    std::string model;
    /// Weights of the model when it is a weighted projective stack.
    std::vector<int> model_weights;
    /// The reduced equation after the coordinate changes, e.g. "u*z1 + p1^3".
    std::string reduced_form;
    std::vector<std::string> steps;
    std::vector<Certificate> certificates;

    bool verified() const;
};

struct Classification {
    PieceKind kind = PieceKind::WeightedStackHypersurface;
    int plain_points = 0;
    int stacky_points = 0;
    /// Order of the cyclic stabilizer carried by each stacky point.
    int stacky_order = 0;
    bool reduced = true;
    std::optional<NormalFormData> normal_form;
    std::optional<int> rank;
    bool elliptic = false;
    std::vector<std::string> notes;
};

struct Piece {
    Partition partition;
    WeightVector weights;
    std::optional<QPoly> fbar;
    Classification classification;

    /// Short human-readable class, e.g. "empty", "3 points", "P(1,2)".
    std::string label() const;
};

struct DecompReport {
    int n = 0;
    /// Degree of the hypersurface, absent for projective space itself.
    std::optional<int> degree;
    std::optional<std::string> poly;
    std::optional<QPoly> input;
    std::optional<GenericityReport> genericity;
    std::vector<Piece> pieces;
    std::optional<long> total_rank;
};

std::string weights_label(const std::vector<int>& weights);

DecompReport decompose_projective_space(int n);

/// Restricts, invariantizes and classifies f over every stratum. Throws
/// HypothesisFailure when the genericity hypotheses fail.
DecompReport decompose_invariant_hypersurface(const QPoly& f, int n);

/// Classifies H(fbar) in the weighted projective stack of the stratum.
/// fbar must be over the invariant variables of make_chart(lambda).
Classification classify_piece(const Partition& lambda, const QPoly& fbar, int d);

/// Points of H(fbar) on a weighted projective line P(1,w): plain points off
/// the first coordinate axis plus the point where the weight-1 coordinate
/// vanishes, stacky when w > 1. Throws UnsupportedStratum without a weight 1.
Classification classify_line(const QPoly& fbar);

/// The cubic eliminations for the shapes: a part of multiplicity >= 3,
/// (l,l), (l1,l2), (l1,l2,l2) and (l1,l1,l2,l2). Throws
/// DegenerateCoefficient naming the coefficient when a required one
/// vanishes, and UnsupportedStratum for other shapes.
NormalFormData cubic_normal_form(const Partition& lambda, const QPoly& fbar);

/// H(fbar) is isomorphic to the weighted projective stack without the
/// weight-d variable y whenever fbar = c*y + R with c != 0.
std::optional<NormalFormData> remove_linear_weight(const QPoly& fbar, int d);

/// Checks that each certificate composes with fbar to zero.
bool verify_certificates(const QPoly& fbar, NormalFormData& data);

}  // namespace sodlab

#endif  // SODLAB_ASSEMBLER_HPP
