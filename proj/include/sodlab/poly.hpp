#ifndef SODLAB_POLY_HPP
#define SODLAB_POLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sodlab/error.hpp"
#include "sodlab/field.hpp"

namespace sodlab {

/// Ordered variable names with positive grading weights.
class VarSpec {
public:
    VarSpec(std::vector<std::string> names, std::vector<int> weights);

    static std::shared_ptr<const VarSpec> make(std::vector<std::string> names,
                                               std::vector<int> weights);
    /// All weights 1.
    static std::shared_ptr<const VarSpec> unit(std::vector<std::string> names);
    /// x1..xn (or prefix1..prefixn), unit weights.
    static std::shared_ptr<const VarSpec> numbered(const std::string& prefix, int n);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int weight(std::size_t i) const { return weights_[i]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<int>& weights() const noexcept { return weights_; }
    /// -1 when absent.
    int index_of(const std::string& name) const;

    friend bool operator==(const VarSpec&, const VarSpec&) = default;

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using VarSpecPtr = std::shared_ptr<const VarSpec>;
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic comparison, greater first; the serialization order.
inline bool grlex_greater(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

/// Sparse multivariate polynomial with exact coefficients in Field. Terms are
/// stored keyed by exponent vector in plain lexicographic order (variable 0
/// most significant); zero coefficients are never stored.
template <ComputableField Field>
class Poly {
public:
    using Coeff = typename Field::Element;
    using TermMap = std::map<Exponents, Coeff>;

    explicit Poly(VarSpecPtr vars, Field field = Field{})
        : vars_(std::move(vars)), field_(std::move(field)) {}

    static Poly constant(VarSpecPtr vars, const Coeff& c, Field field = Field{}) {
        Poly p(std::move(vars), std::move(field));
        p.add_term(Exponents(p.vars_->size(), 0), c);
        return p;
    }
    static Poly variable(VarSpecPtr vars, std::size_t index, Field field = Field{}) {
        Poly p(std::move(vars), std::move(field));
        Exponents e(p.vars_->size(), 0);
        e.at(index) = 1;
        p.add_term(e, p.field_.one());
        return p;
    }
    static Poly monomial(VarSpecPtr vars, Exponents e, const Coeff& c, Field field = Field{}) {
        Poly p(std::move(vars), std::move(field));
        p.add_term(e, c);
        return p;
    }

    const VarSpec& vars() const noexcept { return *vars_; }
    const VarSpecPtr& vars_ptr() const noexcept { return vars_; }
    const Field& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Coeff coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    /// Adds c * x^e, dropping the term if it cancels.
    void add_term(const Exponents& e, const Coeff& c) {
        if (e.size() != vars_->size())
            throw Error(ErrorKind::InvalidInput, "exponent vector length mismatch");
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly scaled(const Coeff& c) const {
        Poly out(vars_, field_);
        if (field_.is_zero(c)) return out;
        for (const auto& [e, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, field_.mul(a, c));
        return out;
    }

    Poly operator-() const { return scaled(field_.neg(field_.one())); }

    Poly& operator+=(const Poly& b) {
        check_compatible(b);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& b) {
        check_compatible(b);
        for (const auto& [e, c] : b.terms_) add_term(e, field_.neg(c));
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly out(a.vars_, a.field_);
        Exponents e(a.vars_->size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, a.field_.mul(ca, cb));
            }
        }
        return out;
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly pow(unsigned k) const {
        Poly result = constant(vars_, field_.one(), field_);
        Poly base = *this;
        while (k) {
            if (k & 1u) result *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return result;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!(*a.vars_ == *b.vars_) || a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [e, c] : a.terms_) {
            if (e != it->first || !a.field_.equal(c, it->second)) return false;
            ++it;
        }
        return true;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& term : terms_) d = std::max(d, sodlab::total_degree(term.first));
        return d;
    }

    int weighted_degree_of(const Exponents& e) const {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += vars_->weight(i) * e[i];
        return d;
    }

    /// Highest exponent of variable i (or -1 for the zero polynomial).
    int degree_in(std::size_t i) const {
        int d = -1;
        for (const auto& term : terms_) d = std::max(d, term.first[i]);
        return d;
    }

    void check_compatible(const Poly& b) const {
        if (vars_ != b.vars_ && !(*vars_ == *b.vars_))
            throw Error(ErrorKind::InvalidInput, "polynomials over different variable sets");
        if (!(field_ == b.field_))
            throw Error(ErrorKind::InvalidInput, "polynomials over different fields");
    }

private:
    VarSpecPtr vars_;
    Field field_;
    TermMap terms_;
};

using QPoly = Poly<RationalField>;
using CycPoly = Poly<CyclotomicField>;

/// Canonical text form, terms in descending graded-lex order. Over Q the
/// output reparses to the same polynomial.
template <ComputableField Field>
std::string to_string(const Poly<Field>& f) {
    if (f.is_zero()) return "0";
    std::vector<const typename Poly<Field>::TermMap::value_type*> order;
    for (const auto& term : f.terms()) order.push_back(&term);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return grlex_greater(a->first, b->first); });
    const Field& F = f.field();
    std::ostringstream out;
    bool first = true;
    for (auto* term : order) {
        const auto& [e, c] = *term;
        bool negative = F.sign(c) < 0 && F.is_atomic(c);
        auto mag = negative ? F.neg(c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        bool is_constant = sodlab::total_degree(e) == 0;
        bool unit = F.equal(mag, F.one());
        if (!unit || is_constant) {
            if (F.is_atomic(mag))
                out << F.format(mag);
            else
                out << '(' << F.format(mag) << ')';
            if (!is_constant) out << '*';
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << '*';
            first_var = false;
            out << f.vars().name(i);
            if (e[i] > 1) out << '^' << e[i];
        }
    }
    return out.str();
}

/// Replaces variable i of f by images[i]; every image lives over one shared
/// target ring.
template <ComputableField Field>
Poly<Field> substitute(const Poly<Field>& f, const std::vector<Poly<Field>>& images) {
    if (images.size() != f.vars().size())
        throw Error(ErrorKind::InvalidInput, "substitution must assign every variable");
    if (images.empty()) return f;
    const auto& target = images.front();
    for (const auto& img : images) target.check_compatible(img);
    if (!(f.field() == target.field()))
        throw Error(ErrorKind::InvalidInput, "substitution field mismatch");

    const std::size_t nv = images.size();
    std::vector<std::vector<Poly<Field>>> powers(nv);
    auto power_of = [&](std::size_t i, int k) -> const Poly<Field>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly<Field>::constant(target.vars_ptr(), target.field().one(), target.field()));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[static_cast<std::size_t>(k)];
    };
    Poly<Field> out(target.vars_ptr(), target.field());
    for (const auto& [e, c] : f.terms()) {
        Poly<Field> term = Poly<Field>::constant(target.vars_ptr(), c, target.field());
        for (std::size_t i = 0; i < nv; ++i)
            if (e[i] > 0) term *= power_of(i, e[i]);
        out += term;
    }
    return out;
}

/// Substitution by name; every variable of f must be assigned.
template <ComputableField Field>
Poly<Field> substitute_by_name(const Poly<Field>& f,
                               const std::map<std::string, Poly<Field>>& assignment) {
    std::vector<Poly<Field>> images;
    images.reserve(f.vars().size());
    for (const auto& name : f.vars().names()) {
        auto it = assignment.find(name);
        if (it == assignment.end())
            throw Error(ErrorKind::InvalidInput, "no assignment for variable " + name);
        images.push_back(it->second);
    }
    return substitute(f, images);
}

template <ComputableField Field>
Poly<Field> partial_derivative(const Poly<Field>& f, std::size_t var) {
    if (var >= f.vars().size()) throw Error(ErrorKind::InvalidInput, "unknown variable index");
    Poly<Field> out(f.vars_ptr(), f.field());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        out.add_term(d, f.field().mul(c, f.field().from_rational(e[var])));
    }
    return out;
}

template <ComputableField Field>
Poly<Field> partial_derivative(const Poly<Field>& f, const std::string& var) {
    int i = f.vars().index_of(var);
    if (i < 0) throw Error(ErrorKind::InvalidInput, "unknown variable " + var);
    return partial_derivative(f, static_cast<std::size_t>(i));
}

struct WeightedDegree {
    bool homogeneous = true;
    int degree = 0;
    /// Two terms of different weighted degree when not homogeneous.
    Exponents witness_a, witness_b;
};

/// Throws InvalidInput (undefined degree) for the zero polynomial.
template <ComputableField Field>
WeightedDegree weighted_degree(const Poly<Field>& f) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "weighted degree of the zero polynomial is undefined");
    WeightedDegree out;
    const Exponents* first = nullptr;
    for (const auto& [e, c] : f.terms()) {
        int d = f.weighted_degree_of(e);
        if (!first) {
            first = &e;
            out.degree = d;
        } else if (d != out.degree) {
            out.homogeneous = false;
            out.witness_a = *first;
            out.witness_b = e;
            return out;
        }
    }
    return out;
}

template <ComputableField Field>
bool is_homogeneous(const Poly<Field>& f) {
    return f.is_zero() || weighted_degree(f).homogeneous;
}

/// Swaps variables a and b.
template <ComputableField Field>
Poly<Field> swap_variables(const Poly<Field>& f, std::size_t a, std::size_t b) {
    Poly<Field> out(f.vars_ptr(), f.field());
    for (const auto& [e, c] : f.terms()) {
        Exponents s = e;
        std::swap(s[a], s[b]);
        out.add_term(s, c);
    }
    return out;
}

using VariableBlocks = std::vector<std::vector<std::size_t>>;

/// First adjacent transposition inside a block that changes f, if any.
/// Throws InvalidInput when blocks overlap or name unknown variables.
template <ComputableField Field>
std::optional<std::pair<std::size_t, std::size_t>> find_symmetry_violation(
    const Poly<Field>& f, const VariableBlocks& blocks) {
    std::vector<char> used(f.vars().size(), 0);
    for (const auto& block : blocks)
        for (auto v : block) {
            if (v >= used.size()) throw Error(ErrorKind::InvalidInput, "block variable out of range");
            if (used[v]) throw Error(ErrorKind::InvalidInput, "variable blocks overlap");
            used[v] = 1;
        }
    for (const auto& block : blocks)
        for (std::size_t k = 0; k + 1 < block.size(); ++k)
            if (!(swap_variables(f, block[k], block[k + 1]) == f))
                return std::make_pair(block[k], block[k + 1]);
    return std::nullopt;
}

template <ComputableField Field>
bool is_symmetric(const Poly<Field>& f, const VariableBlocks& blocks) {
    return !find_symmetry_violation(f, blocks).has_value();
}

/// e_k in the given variables; throws InvalidInput unless 1 <= k <= |group|.
template <ComputableField Field = RationalField>
Poly<Field> elementary_symmetric(const VarSpecPtr& vars, const std::vector<std::size_t>& group,
                                 int k, Field field = Field{}) {
    if (k < 1 || k > static_cast<int>(group.size()))
        throw Error(ErrorKind::InvalidInput, "elementary symmetric index out of range");
    Poly<Field> out(vars, field);
    std::vector<char> pick(group.size(), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        Exponents e(vars->size(), 0);
        for (std::size_t i = 0; i < group.size(); ++i)
            if (pick[i]) e[group[i]] = 1;
        out.add_term(e, field.one());
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

template <ComputableField Field = RationalField>
Poly<Field> power_sum(const VarSpecPtr& vars, const std::vector<std::size_t>& group, int k,
                      Field field = Field{}) {
    if (k < 1) throw Error(ErrorKind::InvalidInput, "power sum index must be positive");
    Poly<Field> out(vars, field);
    for (auto v : group) {
        Exponents e(vars->size(), 0);
        e[v] = k;
        out.add_term(e, field.one());
    }
    return out;
}

template <ComputableField Field>
typename Field::Element evaluate(const Poly<Field>& f, const std::vector<typename Field::Element>& point) {
    if (point.size() != f.vars().size()) throw Error(ErrorKind::InvalidInput, "evaluation point has wrong length");
    const Field& F = f.field();
    auto total = F.zero();
    for (const auto& [e, c] : f.terms()) {
        auto term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term = F.mul(term, point[i]);
        total = F.add(total, term);
    }
    return total;
}

/// Same polynomial with coefficients embedded into another field.
template <ComputableField To>
Poly<To> embed(const QPoly& f, const To& field) {
    Poly<To> out(f.vars_ptr(), field);
    for (const auto& [e, c] : f.terms()) out.add_term(e, field.from_rational(c));
    return out;
}

/// Same terms over a different (equal-length) variable set.
template <ComputableField Field>
Poly<Field> with_vars(const Poly<Field>& f, VarSpecPtr vars) {
    if (vars->size() != f.vars().size()) throw Error(ErrorKind::InvalidInput, "with_vars needs equal variable counts");
    Poly<Field> out(std::move(vars), f.field());
    for (const auto& [e, c] : f.terms()) out.add_term(e, c);
    return out;
}

}  // namespace sodlab

#endif  // SODLAB_POLY_HPP
