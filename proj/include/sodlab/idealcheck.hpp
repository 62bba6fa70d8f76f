#ifndef SODLAB_IDEALCHECK_HPP
#define SODLAB_IDEALCHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "sodlab/groebner.hpp"
#include "sodlab/partitions.hpp"
#include "sodlab/poly.hpp"

namespace sodlab {

/// True iff the homogeneous generators vanish simultaneously only at the
/// origin: the reduced basis is the unit ideal or its leading terms contain a
/// pure power of every variable. Throws InvalidInput on non-homogeneous input.
template <ComputableField Field>
bool only_zero_at_origin(const std::vector<Poly<Field>>& gens) {
    if (gens.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
    std::vector<Poly<Field>> nonzero;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!weighted_degree(g).homogeneous)
            throw Error(ErrorKind::InvalidInput, "generator " + to_string(g) + " is not homogeneous");
        nonzero.push_back(g);
    }
    const std::size_t nvars = gens.front().vars().size();
    if (nonzero.empty()) return nvars == 0;
    auto gb = groebner(nonzero, MonomialOrder::GrevLex);
    if (gb.is_unit_ideal()) return true;
    std::vector<char> has_pure_power(nvars, 0);
    for (const auto& lm : gb.leading_monomials()) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < lm.size(); ++i)
            if (lm[i] > 0) {
                ++support;
                var = i;
            }
        if (support == 1) has_pure_power[var] = 1;
    }
    return std::all_of(has_pure_power.begin(), has_pure_power.end(), [](char c) { return c != 0; });
}

template <ComputableField Field>
std::vector<Poly<Field>> jacobian(const Poly<Field>& f) {
    std::vector<Poly<Field>> partials;
    for (std::size_t i = 0; i < f.vars().size(); ++i) partials.push_back(partial_derivative(f, i));
    return partials;
}

/// Projective Jacobian criterion in characteristic zero: H(f) is smooth iff
/// the partial derivatives have no common zero off the origin (the Euler
/// relation puts f in the Jacobian ideal).
template <ComputableField Field>
bool projective_smooth(const Poly<Field>& f) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "projective_smooth of the zero polynomial");
    auto wd = weighted_degree(f);
    if (!wd.homogeneous) throw Error(ErrorKind::InvalidInput, "projective_smooth needs a homogeneous polynomial");
    if (wd.degree < 1) throw Error(ErrorKind::InvalidInput, "projective_smooth needs positive degree");
    return only_zero_at_origin(jacobian(f));
}

struct PartitionCheck {
    Partition partition;
    bool restriction_nonzero = true;
    bool density_ok = true;
    /// Part variables u, v of equal parts with (u - v) dividing f_lambda.
    std::optional<std::pair<std::string, std::string>> offending_pair;
};

/// Hypotheses for restricting the S_n decomposition to H(f): projective
/// smoothness, f(1,...,1) != 0, f_lambda != 0 for every lambda, and density
/// of the free locus in H(f_lambda).
struct GenericityReport {
    int n = 0;
    int degree = 0;
    std::string poly;
    bool symmetric = true;
    bool homogeneous = true;
    Rational value_at_ones;
    bool smooth = false;
    std::vector<PartitionCheck> partitions;
    /// One entry per failed hypothesis, naming it.
    std::vector<std::string> failures;

    bool passes() const { return failures.empty(); }
};

class HypothesisFailure : public Error {
public:
    explicit HypothesisFailure(GenericityReport report)
        : Error(ErrorKind::HypothesisFailure, summary(report)), report_(std::move(report)) {}

    const GenericityReport& report() const noexcept { return report_; }

private:
    static std::string summary(const GenericityReport& report);
    GenericityReport report_;
};

/// Checks the hypotheses for f over x1..xn. A non-symmetric or
/// non-homogeneous f raises HypothesisFailure carrying a report that names
/// the violation; otherwise the report is returned whether it passes or not.
GenericityReport genericity_report(const QPoly& f, int n);

/// Whether the linear form (var_a - var_b) divides f.
bool difference_divides(const QPoly& f, std::size_t var_a, std::size_t var_b);

}  // namespace sodlab

#endif  // SODLAB_IDEALCHECK_HPP
