#ifndef SODLAB_GROEBNER_HPP
#define SODLAB_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "sodlab/poly.hpp"

namespace sodlab {

enum class MonomialOrder { GrevLex, Lex };

const char* to_string(MonomialOrder order);

/// Strict "a is greater than b" in the given order. Lex treats variable 0 as
/// the largest.
inline bool monomial_greater(const Exponents& a, const Exponents& b, MonomialOrder order) {
    if (order == MonomialOrder::Lex) return a > b;
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

/// A reduced Groebner basis: monic generators sorted by decreasing leading
/// monomial. The zero ideal has no generators.
template <ComputableField Field>
struct GroebnerBasis {
    std::vector<Poly<Field>> generators;
    MonomialOrder order = MonomialOrder::GrevLex;

    std::vector<Exponents> leading_monomials() const;
    bool is_unit_ideal() const;
};

namespace groebner_detail {

template <ComputableField Field>
struct Term {
    Exponents mono;
    typename Field::Element coeff;
};

/// Polynomial as a term list sorted in decreasing monomial order.
template <ComputableField Field>
struct Sorted {
    std::vector<Term<Field>> terms;
    bool empty() const { return terms.empty(); }
    const Term<Field>& lead() const { return terms.front(); }
};

template <ComputableField Field>
Sorted<Field> to_sorted(const Poly<Field>& p, MonomialOrder order) {
    Sorted<Field> s;
    s.terms.reserve(p.size());
    for (const auto& [e, c] : p.terms()) s.terms.push_back({e, c});
    std::sort(s.terms.begin(), s.terms.end(),
              [order](const auto& a, const auto& b) { return monomial_greater(a.mono, b.mono, order); });
    return s;
}

template <ComputableField Field>
Poly<Field> from_sorted(const Sorted<Field>& s, const VarSpecPtr& vars, const Field& field) {
    Poly<Field> p(vars, field);
    for (const auto& t : s.terms) p.add_term(t.mono, t.coeff);
    return p;
}

/// a - c * x^shift * b, merging two sorted term lists.
template <ComputableField Field>
Sorted<Field> sub_scaled(const Sorted<Field>& a, const typename Field::Element& c, const Exponents& shift,
                         const Sorted<Field>& b, MonomialOrder order, const Field& F) {
    Sorted<Field> out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    Exponents shifted(shift.size());
    auto shifted_b = [&](std::size_t k) -> const Exponents& {
        for (std::size_t v = 0; v < shift.size(); ++v) shifted[v] = b.terms[k].mono[v] + shift[v];
        return shifted;
    };
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            out.terms.push_back(a.terms[i++]);
            continue;
        }
        const Exponents& mb = shifted_b(j);
        if (i == a.terms.size() || monomial_greater(mb, a.terms[i].mono, order)) {
            out.terms.push_back({mb, F.neg(F.mul(c, b.terms[j].coeff))});
            ++j;
        } else if (monomial_greater(a.terms[i].mono, mb, order)) {
            out.terms.push_back(a.terms[i++]);
        } else {
            auto v = F.sub(a.terms[i].coeff, F.mul(c, b.terms[j].coeff));
            if (!F.is_zero(v)) out.terms.push_back({a.terms[i].mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <ComputableField Field>
void make_monic(Sorted<Field>& s, const Field& F) {
    if (s.empty()) return;
    auto inv = F.inv(s.lead().coeff);
    for (auto& t : s.terms) t.coeff = F.mul(t.coeff, inv);
}

/// Full normal form of p modulo the basis.
template <ComputableField Field>
Sorted<Field> normal_form(Sorted<Field> p, const std::vector<Sorted<Field>>& basis, MonomialOrder order,
                          const Field& F) {
    Sorted<Field> remainder;
    while (!p.empty()) {
        const auto& lt = p.lead();
        const Sorted<Field>* divisor = nullptr;
        for (const auto& g : basis)
            if (!g.empty() && divides(g.lead().mono, lt.mono)) {
                divisor = &g;
                break;
            }
        if (!divisor) {
            remainder.terms.push_back(lt);
            p.terms.erase(p.terms.begin());
            continue;
        }
        Exponents shift(lt.mono.size());
        for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = lt.mono[v] - divisor->lead().mono[v];
        auto c = F.mul(lt.coeff, F.inv(divisor->lead().coeff));
        p = sub_scaled(p, c, shift, *divisor, order, F);
    }
    return remainder;
}

template <ComputableField Field>
Sorted<Field> s_polynomial(const Sorted<Field>& f, const Sorted<Field>& g, MonomialOrder order, const Field& F) {
    Exponents l = monomial_lcm(f.lead().mono, g.lead().mono);
    Exponents sf(l.size()), sg(l.size());
    for (std::size_t v = 0; v < l.size(); ++v) {
        sf[v] = l[v] - f.lead().mono[v];
        sg[v] = l[v] - g.lead().mono[v];
    }
    Sorted<Field> zero;
    auto a = sub_scaled(zero, F.neg(F.inv(f.lead().coeff)), sf, f, order, F);
    return sub_scaled(a, F.inv(g.lead().coeff), sg, g, order, F);
}

}  // namespace groebner_detail

/// Buchberger's algorithm with the coprime-leading-term and chain criteria,
/// normal selection strategy; returns the reduced basis.
template <ComputableField Field>
GroebnerBasis<Field> groebner(const std::vector<Poly<Field>>& gens, MonomialOrder order = MonomialOrder::GrevLex) {
    using namespace groebner_detail;
    GroebnerBasis<Field> result;
    result.order = order;
    if (gens.empty()) return result;
    const VarSpecPtr vars = gens.front().vars_ptr();
    const Field F = gens.front().field();
    for (const auto& g : gens) gens.front().check_compatible(g);

    std::vector<Sorted<Field>> basis;
    for (const auto& g : gens) {
        auto s = normal_form(to_sorted(g, order), basis, order, F);
        if (s.empty()) continue;
        make_monic(s, F);
        basis.push_back(std::move(s));
    }

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);

    auto lcm_of = [&](const std::pair<std::size_t, std::size_t>& p) {
        return monomial_lcm(basis[p.first].lead().mono, basis[p.second].lead().mono);
    };
    auto pending = [&](std::size_t a, std::size_t b) {
        return pairs.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!pairs.empty()) {
        auto best = pairs.begin();
        Exponents best_lcm = lcm_of(*best);
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Exponents l = lcm_of(*it);
            if (monomial_greater(best_lcm, l, order)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *best;
        pairs.erase(best);

        if (coprime(basis[i].lead().mono, basis[j].lead().mono)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (divides(basis[k].lead().mono, best_lcm) && !pending(i, k) && !pending(j, k)) chain = true;
        }
        if (chain) continue;

        auto s = normal_form(s_polynomial(basis[i], basis[j], order, F), basis, order, F);
        if (s.empty()) continue;
        make_monic(s, F);
        basis.push_back(std::move(s));
        std::size_t n = basis.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pairs.emplace(k, n);
    }

    // Minimalize, then interreduce.
    std::vector<Sorted<Field>> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
            if (a == b) continue;
            const auto& la = basis[a].lead().mono;
            const auto& lb = basis[b].lead().mono;
            if (divides(lb, la) && (la != lb || b < a)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[a]);
    }
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Sorted<Field>> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        Sorted<Field> head;
        head.terms.push_back(minimal[a].lead());
        Sorted<Field> tail;
        tail.terms.assign(minimal[a].terms.begin() + 1, minimal[a].terms.end());
        auto reduced_tail = normal_form(tail, others, order, F);
        head.terms.insert(head.terms.end(), reduced_tail.terms.begin(), reduced_tail.terms.end());
        minimal[a] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(), [order](const auto& a, const auto& b) {
        return monomial_greater(a.lead().mono, b.lead().mono, order);
    });
    for (const auto& s : minimal) result.generators.push_back(from_sorted(s, vars, F));
    return result;
}

/// Normal form of p modulo a Groebner basis.
template <ComputableField Field>
Poly<Field> reduce(const Poly<Field>& p, const GroebnerBasis<Field>& gb) {
    using namespace groebner_detail;
    std::vector<Sorted<Field>> basis;
    for (const auto& g : gb.generators) basis.push_back(to_sorted(g, gb.order));
    return from_sorted(normal_form(to_sorted(p, gb.order), basis, gb.order, p.field()), p.vars_ptr(), p.field());
}

template <ComputableField Field>
bool ideal_contains(const GroebnerBasis<Field>& gb, const Poly<Field>& p) {
    return reduce(p, gb).is_zero();
}

template <ComputableField Field>
std::vector<Exponents> GroebnerBasis<Field>::leading_monomials() const {
    std::vector<Exponents> out;
    for (const auto& g : generators) out.push_back(groebner_detail::to_sorted(g, order).lead().mono);
    return out;
}

template <ComputableField Field>
bool GroebnerBasis<Field>::is_unit_ideal() const {
    for (const auto& lm : leading_monomials())
        if (total_degree(lm) == 0) return true;
    return false;
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
template <ComputableField Field>
bool satisfies_buchberger_criterion(const GroebnerBasis<Field>& gb) {
    using namespace groebner_detail;
    std::vector<Sorted<Field>> basis;
    for (const auto& g : gb.generators) basis.push_back(to_sorted(g, gb.order));
    if (basis.empty()) return true;
    const Field F = gb.generators.front().field();
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!normal_form(s_polynomial(basis[i], basis[j], gb.order, F), basis, gb.order, F).empty())
                return false;
    return true;
}

}  // namespace sodlab

#endif  // SODLAB_GROEBNER_HPP
