#include "sodlab/assembler.hpp"

#include <numeric>

#include "sodlab/symmetrize.hpp"
#include "sodlab/univariate.hpp"

namespace sodlab {

namespace {

Exponents unit_exponent(std::size_t nvars, std::size_t i, int k = 1) {
    Exponents e(nvars, 0);
    e[i] = k;
    return e;
}

Exponents pair_exponent(std::size_t nvars, std::size_t i, std::size_t j) {
    Exponents e(nvars, 0);
    ++e[i];
    ++e[j];
    return e;
}

/// Terms of p divisible by the given variable, with one factor removed.
QPoly divide_by_variable_part(const QPoly& p, std::size_t var) {
    QPoly out(p.vars_ptr());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponents lowered = e;
        --lowered[var];
        out.add_term(lowered, c);
    }
    return out;
}

int sum_of(const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0); }

enum class CubicShape { HighMultiplicity, Pair, TwoDistinct, SingleAndPair, TwoPairs, Other };

CubicShape cubic_shape(const Partition& lambda) {
    auto form = exponential_form(lambda);
    for (const auto& [part, mult] : form)
        if (mult >= 3) return CubicShape::HighMultiplicity;
    if (form.size() == 1 && form.begin()->second == 2) return CubicShape::Pair;
    if (form.size() == 2) {
        int a = form.begin()->second, b = std::next(form.begin())->second;
        if (a == 1 && b == 1) return CubicShape::TwoDistinct;
        if (a + b == 3) return CubicShape::SingleAndPair;
        if (a == 2 && b == 2) return CubicShape::TwoPairs;
    }
    return CubicShape::Other;
}

void require_chart_vars(const QPoly& fbar, const FixedLocusChart& chart) {
    if (!(fbar.vars() == *chart.invariant_vars))
        throw Error(ErrorKind::InvalidInput, "inconsistent weights: polynomial is not over the invariant variables " +
                                                 weights_label(chart.invariant_vars->weights()) + " of " +
                                                 chart.partition.to_string());
}

struct PointCount {
    int plain = 0;
    int stacky = 0;
    int stacky_order = 0;
    bool reduced = true;
};

/// Points of H(fbar) in a weighted projective line P(1,w) or P(1,1).
PointCount count_points(const QPoly& fbar) {
    const VarSpec& vars = fbar.vars();
    if (vars.size() != 2 || (vars.weight(0) != 1 && vars.weight(1) != 1))
        throw Error(ErrorKind::UnsupportedStratum, "point count needs a line P(1,w), got " + weights_label(vars.weights()));
    std::size_t a = vars.weight(0) == 1 ? 0 : 1;
    std::size_t b = 1 - a;
    const int wb = vars.weight(b);

    // Chart a = 1: roots of fbar(1, b).
    univariate::UPoly g;
    int order_in_a = -1;
    for (const auto& [e, c] : fbar.terms()) {
        std::size_t k = static_cast<std::size_t>(e[b]);
        if (g.size() <= k) g.resize(k + 1);
        g[k] += c;
        if (order_in_a < 0 || e[a] < order_in_a) order_in_a = e[a];
    }
    univariate::trim(g);
    PointCount count;
    count.plain = univariate::distinct_root_count(g);
    if (univariate::degree(univariate::gcd(g, univariate::derivative(g))) > 0) count.reduced = false;

    // The point a = 0.
    if (order_in_a > 0) {
        if (wb == 1) {
            ++count.plain;
        } else {
            count.stacky = 1;
            count.stacky_order = wb;
        }
        if (order_in_a > 1) count.reduced = false;
    }
    return count;
}

/// Eliminates the variable y from fbar = c*y + R.
std::optional<NormalFormData> eliminate_variable(const QPoly& fbar, std::size_t y) {
    const VarSpec& vars = fbar.vars();
    const std::size_t m = vars.size();
    Rational c = fbar.coefficient(unit_exponent(m, y));
    if (c == 0) return std::nullopt;
    QPoly rest = fbar - QPoly::monomial(fbar.vars_ptr(), unit_exponent(m, y), c);
    for (const auto& [e, coeff] : rest.terms())
        if (e[y] != 0) return std::nullopt;

    std::vector<std::string> names;
    std::vector<int> weights;
    for (std::size_t i = 0; i < m; ++i)
        if (i != y) {
            names.push_back(vars.name(i));
            weights.push_back(vars.weight(i));
        }
    auto params = VarSpec::make(names, weights);
    std::vector<QPoly> to_params;
    for (std::size_t i = 0, k = 0; i < m; ++i)
        to_params.push_back(i == y ? QPoly(params) : QPoly::variable(params, k++));
    QPoly rest_in_params = substitute(rest, to_params);
    to_params[y] = rest_in_params.scaled(-1 / c);

    NormalFormData data;
    data.model_weights = weights;
    std::sort(data.model_weights.begin(), data.model_weights.end());
    data.model = weights_label(data.model_weights);
    data.reduced_form = vars.name(y);
    data.steps.push_back("coefficient of " + vars.name(y) + " (weight " + std::to_string(vars.weight(y)) +
                         ") is " + c.get_str() + ", nonzero");
    data.steps.push_back("solve " + vars.name(y) + " = " + to_string(to_params[y]));
    data.steps.push_back("remove the weight " + std::to_string(vars.weight(y)) + " from " +
                         weights_label(vars.weights()));
    Certificate cert;
    cert.description = "graph of " + vars.name(y) + " over " + data.model;
    cert.parameters = params;
    cert.images = std::move(to_params);
    data.certificates.push_back(std::move(cert));
    verify_certificates(fbar, data);
    return data;
}

NormalFormData pair_points(const QPoly& fbar, const FixedLocusChart& chart) {
    // fbar = a * (c1*a^2 + c2*b) with a = p1, b the weight-2 invariant.
    const std::size_t a = chart.invariant_var(0, 1), b = chart.invariant_var(0, 2);
    const auto& vars = *chart.invariant_vars;
    Rational c1 = fbar.coefficient(unit_exponent(2, a, 3));
    Rational c2 = fbar.coefficient(pair_exponent(2, a, b));
    if (c2 == 0)
        throw Error(ErrorKind::DegenerateCoefficient,
                    "degenerate coefficient c2 (coefficient of " + vars.name(a) + "*" + vars.name(b) + ") vanishes");
    NormalFormData data;
    data.model = "1 point + 1 stacky Z/2 point";
    data.reduced_form = vars.name(a) + "*(" + to_string(divide_by_variable_part(fbar, a)) + ")";
    data.steps.push_back("fbar is divisible by " + vars.name(a) + " = p1");
    data.steps.push_back("plain point: " + vars.name(b) + " = " + Rational(-c1 / c2).get_str() + "*" + vars.name(a) +
                         "^2");
    data.steps.push_back("stacky point: " + vars.name(a) + " = 0, stabilizer Z/2");

    auto t = VarSpec::make({"t"}, {1});
    Certificate plain;
    plain.description = "(t) -> (" + vars.name(a) + "=t, " + vars.name(b) + "=" + Rational(-c1 / c2).get_str() + "*t^2)";
    plain.parameters = t;
    plain.images = {QPoly(t), QPoly(t)};
    plain.images[a] = QPoly::variable(t, 0);
    plain.images[b] = QPoly::monomial(t, {2}, -c1 / c2);
    auto s = VarSpec::make({"s"}, {2});
    Certificate stacky;
    stacky.description = "(s) -> (" + vars.name(a) + "=0, " + vars.name(b) + "=s)";
    stacky.parameters = s;
    stacky.images = {QPoly(s), QPoly(s)};
    stacky.images[b] = QPoly::variable(s, 0);
    data.certificates = {plain, stacky};
    verify_certificates(fbar, data);
    return data;
}

NormalFormData distinct_points(const QPoly& fbar) {
    PointCount count = count_points(fbar);
    if (count.plain != 3 || !count.reduced)
        throw Error(ErrorKind::DegenerateCoefficient,
                    "degenerate coefficient discriminant: binary cubic has a repeated root");
    NormalFormData data;
    data.model = "3 points";
    data.reduced_form = to_string(fbar);
    data.steps.push_back("binary cubic with three distinct roots in P1");
    return data;
}

NormalFormData single_and_pair(const QPoly& fbar, const FixedLocusChart& chart) {
    const auto& vars = *chart.invariant_vars;
    const std::size_t pair_block = chart.group_blocks[0].size() == 2 ? 0 : 1;
    const std::size_t a = chart.invariant_var(pair_block, 1), b = chart.invariant_var(pair_block, 2);
    const std::size_t z = chart.invariant_var(1 - pair_block, 1);

    Rational alpha = fbar.coefficient(pair_exponent(3, b, z));
    Rational beta = fbar.coefficient(pair_exponent(3, b, a));
    if (alpha == 0)
        throw Error(ErrorKind::DegenerateCoefficient, "degenerate coefficient alpha (coefficient of " +
                                                          vars.name(b) + "*" + vars.name(z) + ") vanishes");
    NormalFormData data;
    QPoly linear = QPoly::monomial(fbar.vars_ptr(), unit_exponent(3, z), alpha) +
                   QPoly::monomial(fbar.vars_ptr(), unit_exponent(3, a), beta);
    data.steps.push_back("p1 = " + vars.name(a));
    data.steps.push_back("z1 = " + to_string(linear));

    // C(p1, z1): fbar with the weight-2 invariant set to zero.
    auto w = VarSpec::make({"p1", "z1"}, {1, 1});
    QPoly P = QPoly::variable(w, 0), Z = QPoly::variable(w, 1);
    std::vector<QPoly> into_w(3, QPoly(w));
    into_w[a] = P;
    into_w[z] = (Z - P.scaled(beta)).scaled(1 / alpha);
    QPoly cubic = substitute(fbar, into_w);
    Rational kappa = cubic.coefficient({3, 0});
    if (kappa == 0)
        throw Error(ErrorKind::DegenerateCoefficient,
                    "degenerate coefficient kappa (coefficient of p1^3 after the change of variables) vanishes");
    QPoly quadratic = divide_by_variable_part(cubic, 1);
    data.steps.push_back("fbar = " + vars.name(b) + "*z1 + C(p1,z1) with C = " + to_string(cubic));
    data.steps.push_back("u = " + vars.name(b) + " + " + to_string(quadratic));

    auto r = VarSpec::make({"u", "z1", "p1"}, {2, 1, 1});
    QPoly reduced = QPoly::variable(r, 0) * QPoly::variable(r, 1) + QPoly::monomial(r, {0, 0, 3}, kappa);
    data.reduced_form = to_string(reduced);
    data.steps.push_back("fbar = " + data.reduced_form);
    data.model = "P(1,2)";
    data.model_weights = {1, 2};

    auto params = VarSpec::make({"t", "v"}, {1, 2});
    QPoly t = QPoly::variable(params, 0), v = QPoly::variable(params, 1);
    QPoly p1_img = v * t;
    QPoly z1_img = t.pow(3).scaled(-kappa);
    QPoly u_img = v.pow(3);
    Certificate cert;
    cert.description = "(t:v) -> (u=v^3, z1=" + to_string(z1_img) + ", p1=v*t)";
    cert.parameters = params;
    cert.images.assign(3, QPoly(params));
    cert.images[a] = p1_img;
    cert.images[z] = (z1_img - p1_img.scaled(beta)).scaled(1 / alpha);
    cert.images[b] = u_img - substitute(quadratic, {p1_img, z1_img});
    data.certificates.push_back(std::move(cert));
    verify_certificates(fbar, data);
    return data;
}

NormalFormData two_pairs(const QPoly& fbar, const FixedLocusChart& chart) {
    const auto& vars = *chart.invariant_vars;
    const std::size_t a0 = chart.invariant_var(0, 1), b0 = chart.invariant_var(0, 2);
    const std::size_t a1 = chart.invariant_var(1, 1), b1 = chart.invariant_var(1, 2);
    Rational m00 = fbar.coefficient(pair_exponent(4, b0, a0)), m01 = fbar.coefficient(pair_exponent(4, b0, a1));
    Rational m10 = fbar.coefficient(pair_exponent(4, b1, a0)), m11 = fbar.coefficient(pair_exponent(4, b1, a1));
    Rational det = m00 * m11 - m01 * m10;
    if (det == 0)
        throw Error(ErrorKind::DegenerateCoefficient,
                    "degenerate coefficient det (the linear forms z1, z2 are linearly dependent)");
    NormalFormData data;
    auto zvars = VarSpec::make({"z1", "z2"}, {1, 1});
    QPoly Z1 = QPoly::variable(zvars, 0), Z2 = QPoly::variable(zvars, 1);
    auto a_of = [&](const QPoly& z1, const QPoly& z2) {
        return std::make_pair((z1.scaled(m11) - z2.scaled(m01)).scaled(1 / det),
                              (z2.scaled(m00) - z1.scaled(m10)).scaled(1 / det));
    };
    QPoly L0 = QPoly::monomial(fbar.vars_ptr(), unit_exponent(4, a0), m00) +
               QPoly::monomial(fbar.vars_ptr(), unit_exponent(4, a1), m01);
    QPoly L1 = QPoly::monomial(fbar.vars_ptr(), unit_exponent(4, a0), m10) +
               QPoly::monomial(fbar.vars_ptr(), unit_exponent(4, a1), m11);
    data.steps.push_back("z1 = " + to_string(L0));
    data.steps.push_back("z2 = " + to_string(L1));

    std::vector<QPoly> into_z(4, QPoly(zvars));
    auto [A0, A1] = a_of(Z1, Z2);
    into_z[a0] = A0;
    into_z[a1] = A1;
    QPoly cubic = substitute(fbar, into_z);
    QPoly q1 = divide_by_variable_part(cubic, 0);
    QPoly q2 = divide_by_variable_part(cubic - Z1 * q1, 1);
    data.steps.push_back("fbar = " + vars.name(b0) + "*z1 + " + vars.name(b1) + "*z2 + C(z1,z2) with C = " +
                         to_string(cubic));
    data.steps.push_back("u1 = " + vars.name(b0) + " + " + to_string(q1));
    data.steps.push_back("u2 = " + vars.name(b1) + " + " + to_string(q2));
    data.reduced_form = "u1*z1 + u2*z2";
    data.steps.push_back("fbar = " + data.reduced_form);
    data.model = "P(1,2)xP1";

    auto params = VarSpec::make({"t", "v", "s1", "s2"}, {1, 2, 1, 1});
    QPoly t = QPoly::variable(params, 0), v = QPoly::variable(params, 1);
    QPoly s1 = QPoly::variable(params, 2), s2 = QPoly::variable(params, 3);
    QPoly u1 = v * s1, u2 = v * s2, z1 = t * s2, z2 = -(t * s1);
    Certificate cert;
    cert.description = "(t:v),(s1:s2) -> (u1=v*s1, u2=v*s2, z1=t*s2, z2=-t*s1)";
    cert.parameters = params;
    cert.images.assign(4, QPoly(params));
    auto [I0, I1] = a_of(z1, z2);
    cert.images[a0] = I0;
    cert.images[a1] = I1;
    cert.images[b0] = u1 - substitute(q1, {z1, z2});
    cert.images[b1] = u2 - substitute(q2, {z1, z2});
    data.certificates.push_back(std::move(cert));
    verify_certificates(fbar, data);
    return data;
}

std::optional<int> rank_of_model(const NormalFormData& data) {
    if (data.model == "P(1,2)xP1") return 6;
    if (data.model == "3 points") return 3;
    if (data.model == "1 point + 1 stacky Z/2 point") return 3;
    if (!data.model_weights.empty()) return sum_of(data.model_weights);
    return std::nullopt;
}

}  // namespace

const char* to_string(PieceKind kind) {
    switch (kind) {
        case PieceKind::FullAmbient: return "full_ambient";
        case PieceKind::Empty: return "empty";
        case PieceKind::FinitePoints: return "finite_points";
        case PieceKind::WeightedStackHypersurface: return "weighted_stack_hypersurface";
        case PieceKind::PlainProjectiveVariety: return "plain_projective_variety";
        case PieceKind::NormalForm: return "normal_form";
    }
    return "unknown";
}

std::string weights_label(const std::vector<int>& weights) {
    std::string out = "P(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(weights[i]);
    }
    return out + ")";
}

bool NormalFormData::verified() const {
    return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.verified; });
}

bool verify_certificates(const QPoly& fbar, NormalFormData& data) {
    bool all = true;
    for (auto& cert : data.certificates) {
        cert.verified = cert.images.size() == fbar.vars().size() && substitute(fbar, cert.images).is_zero();
        all = all && cert.verified;
    }
    return all;
}

std::string Piece::label() const {
    const auto& c = classification;
    switch (c.kind) {
        case PieceKind::FullAmbient: return weights_label(weights);
        case PieceKind::Empty: return "empty";
        case PieceKind::FinitePoints: {
            std::string out;
            if (c.plain_points > 0 || c.stacky_points == 0)
                out = std::to_string(c.plain_points) + (c.plain_points == 1 ? " point" : " points");
            if (c.stacky_points > 0) {
                if (!out.empty()) out += " + ";
                out += std::to_string(c.stacky_points) + " stacky Z/" + std::to_string(c.stacky_order) +
                       (c.stacky_points == 1 ? " point" : " points");
            }
            return out;
        }
        case PieceKind::NormalForm: return c.normal_form->model;
        case PieceKind::WeightedStackHypersurface: return "hypersurface in " + weights_label(weights);
        case PieceKind::PlainProjectiveVariety:
            if (c.elliptic) return "elliptic curve in P2";
            return "hypersurface in P" + std::to_string(weights.size() - 1);
    }
    return "unknown";
}

std::optional<NormalFormData> remove_linear_weight(const QPoly& fbar, int d) {
    for (std::size_t y = 0; y < fbar.vars().size(); ++y) {
        if (fbar.vars().weight(y) != d) continue;
        if (auto data = eliminate_variable(fbar, y)) return data;
    }
    return std::nullopt;
}

NormalFormData cubic_normal_form(const Partition& lambda, const QPoly& fbar) {
    auto chart = make_chart(lambda);
    require_chart_vars(fbar, chart);
    if (fbar.is_zero() || weighted_degree(fbar).degree != 3 || !weighted_degree(fbar).homogeneous)
        throw Error(ErrorKind::InvalidInput, "cubic_normal_form needs a weighted cubic");
    switch (cubic_shape(lambda)) {
        case CubicShape::HighMultiplicity: {
            for (std::size_t blk = 0; blk < chart.group_blocks.size(); ++blk) {
                if (chart.group_blocks[blk].size() < 3) continue;
                if (auto data = eliminate_variable(fbar, chart.invariant_var(blk, 3))) return *data;
            }
            std::string names;
            for (std::size_t blk = 0; blk < chart.group_blocks.size(); ++blk)
                if (chart.group_blocks[blk].size() >= 3)
                    names += (names.empty() ? "" : ", ") + chart.invariant_vars->name(chart.invariant_var(blk, 3));
            throw Error(ErrorKind::DegenerateCoefficient,
                        "degenerate coefficient gamma (coefficient of " + names + ") vanishes");
        }
        case CubicShape::Pair: return pair_points(fbar, chart);
        case CubicShape::TwoDistinct: return distinct_points(fbar);
        case CubicShape::SingleAndPair: return single_and_pair(fbar, chart);
        case CubicShape::TwoPairs: return two_pairs(fbar, chart);
        case CubicShape::Other: break;
    }
    throw Error(ErrorKind::UnsupportedStratum, "no cubic normal form for the shape " + lambda.to_string());
}

Classification classify_line(const QPoly& fbar) {
    if (fbar.is_zero()) throw Error(ErrorKind::InvalidInput, "zero polynomial on a line");
    PointCount count = count_points(fbar);
    Classification out;
    out.kind = PieceKind::FinitePoints;
    out.plain_points = count.plain;
    out.stacky_points = count.stacky;
    out.stacky_order = count.stacky_order;
    out.reduced = count.reduced;
    if (count.reduced)
        out.rank = count.plain + count.stacky * count.stacky_order;
    else
        out.notes.push_back("non-reduced point scheme; no rank assigned");
    return out;
}

Classification classify_piece(const Partition& lambda, const QPoly& fbar, int d) {
    auto chart = make_chart(lambda);
    require_chart_vars(fbar, chart);
    if (fbar.is_zero()) throw Error(ErrorKind::InvalidInput, "restriction to " + lambda.to_string() + " vanishes");
    auto wd = weighted_degree(fbar);
    if (!wd.homogeneous || wd.degree != d)
        throw Error(ErrorKind::InvalidInput, "inconsistent weights: fbar is not weighted-homogeneous of degree " +
                                                 std::to_string(d));

    Classification out;
    const std::size_t dim = fbar.vars().size();
    if (dim == 1) {
        out.kind = PieceKind::Empty;
        out.rank = 0;
        return out;
    }
    if (dim == 2) {
        out = classify_line(fbar);
        if (d == 3 && cubic_shape(lambda) == CubicShape::Pair)
            out.notes.push_back("(l,l) discrepancy: expected 2 plain + 1 stacky, factorization gives " +
                                std::to_string(out.plain_points) + " plain and " + std::to_string(out.stacky_points) +
                                " stacky");
        return out;
    }

    const CubicShape shape = cubic_shape(lambda);
    if (d == 3 && (shape == CubicShape::HighMultiplicity || shape == CubicShape::SingleAndPair ||
                   shape == CubicShape::TwoPairs)) {
        if (shape == CubicShape::SingleAndPair) {
            auto form = exponential_form(lambda);
            int single = 0, pair = 0;
            for (const auto& [part, mult] : form) (mult == 1 ? single : pair) = part;
            if (!(single < pair || single > 2))
                out.notes.push_back("side condition l1<l2 or l1>2 fails for " + lambda.to_string() +
                                    "; the reduction was attempted anyway");
        }
        try {
            out.normal_form = cubic_normal_form(lambda, fbar);
            out.kind = PieceKind::NormalForm;
            out.rank = rank_of_model(*out.normal_form);
            if (!out.normal_form->verified()) {
                out.kind = PieceKind::WeightedStackHypersurface;
                out.rank.reset();
                out.notes.push_back("normal-form certificate failed to verify");
                out.normal_form.reset();
            } else if (!out.notes.empty()) {
                out.notes.push_back("reduction succeeded");
            }
            return out;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateCoefficient) throw;
            out.kind = PieceKind::WeightedStackHypersurface;
            out.notes.push_back(e.what());
            return out;
        }
    }

    if (auto data = remove_linear_weight(fbar, d)) {
        out.kind = PieceKind::NormalForm;
        out.rank = rank_of_model(*data);
        out.normal_form = std::move(data);
        return out;
    }

    if (lambda.all_parts_distinct()) {
        out.kind = PieceKind::PlainProjectiveVariety;
        bool smooth = projective_smooth(fbar);
        if (!smooth) out.notes.push_back("singular hypersurface");
        if (dim == 3 && d == 2 && smooth) {
            out.rank = 2;
            out.notes.push_back("smooth conic");
        }
        if (dim == 3 && d == 3 && smooth) {
            out.elliptic = true;
            out.notes.push_back("elliptic curve: no full exceptional collection");
        }
        return out;
    }

    auto form = exponential_form(lambda);
    int doubled = 0;
    bool others_single = true;
    for (const auto& [part, mult] : form) {
        if (mult == 2 && doubled == 0)
            doubled = part;
        else if (mult != 1)
            others_single = false;
    }
    if (doubled != 0 && others_single && d % 2 == 0) {
        std::size_t blk = 0;
        while (chart.block_part_sizes[blk] != doubled) ++blk;
        Exponents at_stacky(dim, 0);
        at_stacky[chart.invariant_var(blk, 2)] = d / 2;
        if (fbar.coefficient(at_stacky) != 0) {
            out.kind = PieceKind::PlainProjectiveVariety;
            out.notes.push_back("misses the stacky locus of " + weights_label(chart.invariant_vars->weights()));
            return out;
        }
    }
    out.kind = PieceKind::WeightedStackHypersurface;
    return out;
}

DecompReport decompose_projective_space(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be positive");
    DecompReport report;
    report.n = n;
    long total = 0;
    for (const auto& lambda : sod_order(n)) {
        Piece piece{lambda, ambient_weights(lambda), std::nullopt, {}};
        piece.classification.kind = PieceKind::FullAmbient;
        piece.classification.rank = sum_of(piece.weights);
        total += *piece.classification.rank;
        report.pieces.push_back(std::move(piece));
    }
    report.total_rank = total;
    return report;
}

DecompReport decompose_invariant_hypersurface(const QPoly& f, int n) {
    GenericityReport genericity = genericity_report(f, n);
    if (!genericity.passes()) throw HypothesisFailure(genericity);

    DecompReport report;
    report.n = n;
    report.degree = genericity.degree;
    report.poly = to_string(f);
    report.input = f;
    std::optional<long> total = 0;
    const auto order = sod_order(n);
    for (const auto& lambda : order) {
        auto chart = make_chart(lambda);
        QPoly fbar = invariantize(restrict_to_fixed_locus(f, chart), chart);
        Piece piece{lambda, ambient_weights(lambda), fbar, classify_piece(lambda, fbar, genericity.degree)};
        if (lambda.length() == static_cast<std::size_t>(n))
            piece.classification.notes.insert(piece.classification.notes.begin(), "coarse birational piece");
        if (total && piece.classification.rank)
            *total += *piece.classification.rank;
        else
            total.reset();
        report.pieces.push_back(std::move(piece));
    }
    report.total_rank = total;
    report.genericity = std::move(genericity);
    return report;
}

}  // namespace sodlab
