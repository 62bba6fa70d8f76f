#include "sodlab/cyclic.hpp"

#include <numeric>

#include "sodlab/assembler.hpp"
#include "sodlab/idealcheck.hpp"

namespace sodlab {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string coordinate_set(const std::vector<std::size_t>& coords) {
    std::string out = "{";
    for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? "," : "") + std::string("x") + std::to_string(coords[i] + 1);
    return out + "}";
}

void validate_orders(const std::vector<int>& d) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "need at least one factor");
    for (int di : d)
        if (di < 1) throw Error(ErrorKind::InvalidInput, "factor orders must be positive");
}

}  // namespace

RamificationDatum RamificationDatum::from_orders(const std::vector<int>& orders) {
    RamificationDatum datum;
    for (std::size_t i = 0; i < orders.size(); ++i) datum.orbits.push_back({"D" + std::to_string(i + 1), orders[i]});
    return datum;
}

CurveDecomposition curve_decomposition(const RamificationDatum& datum) {
    CurveDecomposition out;
    for (std::size_t i = 0; i < datum.orbits.size(); ++i) {
        const auto& orbit = datum.orbits[i];
        if (orbit.m < 2)
            throw Error(ErrorKind::InvalidInput,
                        "stabilizer order of " + orbit.label + " must be at least 2, got " + std::to_string(orbit.m));
        for (int j = 1; j < orbit.m; ++j) {
            out.pieces.push_back({CurvePiece::Kind::Exceptional, static_cast<int>(i), j,
                                  "omega^" + std::to_string(j) + "|" + orbit.label});
            ++out.exceptional_count;
        }
    }
    out.pieces.push_back({CurvePiece::Kind::Coarse, -1, 0, "pi^* D(C/G)"});
    return out;
}

std::vector<LabelTuple> product_order(const std::vector<std::vector<std::string>>& factor_orders) {
    for (const auto& f : factor_orders)
        if (f.empty()) throw Error(ErrorKind::InvalidInput, "each factor order must be nonempty");
    std::vector<LabelTuple> out{LabelTuple{}};
    for (const auto& factor : factor_orders) {
        std::vector<LabelTuple> next;
        for (const auto& prefix : out)
            for (const auto& label : factor) {
                auto t = prefix;
                t.push_back(label);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<CyclicPiece> mu_affine_decomposition(const std::vector<int>& d) {
    validate_orders(d);
    const std::size_t k = d.size();
    std::vector<CyclicPiece> out;
    std::vector<int> n(k);
    for (std::size_t i = 0; i < k; ++i) n[i] = d[i] - 1;
    while (true) {
        CyclicPiece piece;
        piece.element.exponents = n;
        piece.character = n;
        for (std::size_t i = 0; i < k; ++i)
            if (n[i] == 0) {
                ++piece.fixed_dim;
                piece.weights.push_back(d[i]);
                piece.fixed_coordinates.push_back(i);
            }
        piece.order_index = out.size();
        std::string ambient = piece.fixed_dim == 0 ? "D(pt)"
                                                   : "D(A^" + std::to_string(piece.fixed_dim) + "_{" +
                                                         join_ints(piece.weights) + "})";
        bool trivial_character = std::all_of(n.begin(), n.end(), [](int x) { return x == 0; });
        piece.label = trivial_character ? "pi^* " + ambient : ambient + " x chi^(" + join_ints(n) + ")";
        out.push_back(std::move(piece));

        // Next element: descending in each factor, last factor fastest.
        std::size_t i = k;
        while (i > 0 && n[i - 1] == 0) --i;
        if (i == 0) return out;
        --n[i - 1];
        for (std::size_t j = i; j < k; ++j) n[j] = d[j] - 1;
    }
}

bool is_diagonal_invariant(const QPoly& f, const std::vector<int>& d) {
    if (f.vars().size() != d.size()) throw Error(ErrorKind::InvalidInput, "polynomial must have one variable per factor");
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < d.size(); ++i)
            if (e[i] % d[i] != 0) return false;
    return true;
}

QPoly restrict_to_coordinates(const QPoly& f, const std::vector<std::size_t>& coords, const std::vector<int>& d) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (std::size_t c : coords) {
        names.push_back("y" + std::to_string(c + 1));
        weights.push_back(d[c]);
    }
    auto vars = VarSpec::make(names, weights);
    QPoly out(vars);
    for (const auto& [e, c] : f.terms()) {
        bool inside = true;
        for (std::size_t i = 0; i < e.size() && inside; ++i)
            if (e[i] > 0 && std::find(coords.begin(), coords.end(), i) == coords.end()) inside = false;
        if (!inside) continue;
        Exponents y(coords.size());
        for (std::size_t j = 0; j < coords.size(); ++j) y[j] = e[coords[j]] / d[coords[j]];
        out.add_term(y, c);
    }
    return out;
}

CyclicProjectiveReport mu_projective_decomposition(const std::vector<int>& d, const std::optional<QPoly>& f) {
    validate_orders(d);
    const std::size_t k = d.size();
    CyclicProjectiveReport report;
    report.d = d;

    int degree = 0;
    if (f) {
        if (f->vars().size() != k)
            throw Error(ErrorKind::InvalidInput, "polynomial must have " + std::to_string(k) + " variables");
        if (f->is_zero()) throw Error(ErrorKind::InvalidInput, "the zero polynomial defines no hypersurface");
        auto wd = weighted_degree(*f);
        if (!wd.homogeneous) throw Error(ErrorKind::HypothesisFailure, "homogeneous: f is not homogeneous");
        if (!is_diagonal_invariant(*f, d))
            throw Error(ErrorKind::HypothesisFailure,
                        "invariant: some monomial has an x_i exponent not divisible by d_i = (" + join_ints(d) + ")");
        if (!projective_smooth(*f)) throw Error(ErrorKind::HypothesisFailure, "smooth: P H(f) is singular");
        degree = wd.degree;
        report.poly = to_string(*f);

        std::vector<std::vector<std::size_t>> required;
        std::vector<std::size_t> trivial;
        for (std::size_t i = 0; i < k; ++i)
            if (d[i] == 1) trivial.push_back(i);
        if (!trivial.empty())
            required.push_back(trivial);
        else
            for (std::size_t i = 0; i < k; ++i) required.push_back({i});
        for (const auto& coords : required)
            if (restrict_to_coordinates(*f, coords, d).is_zero())
                throw Error(ErrorKind::HypothesisFailure,
                            "nonvanishing: f vanishes on the coordinate subspace " + coordinate_set(coords));

        if (k >= 2 && d[0] > 1 && std::all_of(d.begin() + 1, d.end(), [](int x) { return x == 1; }) &&
            degree == d[0]) {
            Exponents pure(k, 0);
            pure[0] = d[0];
            if (f->coefficient(pure) != 0)
                report.notes.push_back("P H(f) is a cyclic cover of P^" + std::to_string(k - 2) +
                                       " branched along the zero locus of the x1-free part");
        }
    }

    std::optional<long> total = 0;
    for (auto& piece : mu_affine_decomposition(d)) {
        ProjectiveCyclicPiece out;
        out.piece = piece;
        if (piece.fixed_dim == 0) {
            out.empty = true;
            out.rank = 0;
            out.label = "empty";
        } else if (!f) {
            out.rank = std::accumulate(piece.weights.begin(), piece.weights.end(), 0);
            out.label = weights_label(piece.weights);
        } else {
            QPoly fbar = restrict_to_coordinates(*f, piece.fixed_coordinates, d);
            out.fbar = fbar;
            if (fbar.is_zero()) {
                out.rank = std::accumulate(piece.weights.begin(), piece.weights.end(), 0);
                out.label = weights_label(piece.weights);
            } else if (piece.fixed_dim == 1) {
                out.empty = true;
                out.rank = 0;
                out.label = "empty";
            } else if (piece.fixed_dim == 2 && std::find(piece.weights.begin(), piece.weights.end(), 1) !=
                                                       piece.weights.end()) {
                Piece line{Partition({1}), piece.weights, fbar, classify_line(fbar)};
                out.rank = line.classification.rank;
                out.label = line.label();
            } else if (auto data = remove_linear_weight(fbar, degree)) {
                out.rank = std::accumulate(data->model_weights.begin(), data->model_weights.end(), 0);
                out.label = data->model;
            } else {
                out.label = "hypersurface in " + weights_label(piece.weights);
            }
        }
        if (total && out.rank)
            *total += *out.rank;
        else
            total.reset();
        report.pieces.push_back(std::move(out));
    }
    report.total_rank = total;
    return report;
}

}  // namespace sodlab
