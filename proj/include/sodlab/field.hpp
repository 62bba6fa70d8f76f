#ifndef SODLAB_FIELD_HPP
#define SODLAB_FIELD_HPP

#include <gmpxx.h>

#include <concepts>
#include <memory>
#include <string>
#include <vector>

#include "sodlab/univariate.hpp"

namespace sodlab {

using Rational = mpq_class;

/// A computable field: a value-type handle that performs arithmetic on its
/// elements. Polynomials carry one handle so the same code runs over Q and
/// over Q(zeta_N).
template <class F>
concept ComputableField = requires(const F& f, const typename F::Element& a,
                                   const Rational& q) {
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_rational(q) } -> std::same_as<typename F::Element>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.equal(a, a) } -> std::same_as<bool>;
    { f.add(a, a) } -> std::same_as<typename F::Element>;
    { f.sub(a, a) } -> std::same_as<typename F::Element>;
    { f.mul(a, a) } -> std::same_as<typename F::Element>;
    { f.neg(a) } -> std::same_as<typename F::Element>;
    { f.inv(a) } -> std::same_as<typename F::Element>;
    { f.format(a) } -> std::convertible_to<std::string>;
    { f.tag() } -> std::convertible_to<std::string>;
};

struct RationalField {
    using Element = Rational;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_rational(const Rational& q) const { return q; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const;
    std::string format(const Element& a) const { return a.get_str(); }
    /// -1 when the element prints with a leading minus sign.
    int sign(const Element& a) const { return sgn(a); }
    /// True when format() needs no parentheses as a product factor.
    bool is_atomic(const Element&) const { return true; }
    std::string tag() const { return "rational"; }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Element of Q[t]/Phi_N(t): residue coefficients, always length phi(N).
struct CycNum {
    std::vector<Rational> residue;
};

/// The cyclotomic field Q(zeta_N). Handles are cheap to copy.
class CyclotomicField {
public:
    using Element = CycNum;

    explicit CyclotomicField(int order = 1);

    int order() const { return data_->order; }
    int degree() const { return data_->degree; }
    const univariate::UPoly& modulus() const { return data_->modulus; }

    Element zero() const;
    Element one() const;
    Element from_rational(const Rational& q) const;
    /// zeta^k, k taken mod N (negative k allowed).
    Element zeta_power(long k) const;
    bool is_zero(const Element& a) const;
    bool equal(const Element& a, const Element& b) const { return a.residue == b.residue; }
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    /// Throws DivisionByZero on zero.
    Element inv(const Element& a) const;
    std::string format(const Element& a) const;
    int sign(const Element& a) const;
    bool is_atomic(const Element& a) const;
    std::string tag() const { return "cyclotomic(" + std::to_string(order()) + ")"; }

    friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) {
        return a.order() == b.order();
    }

private:
    struct Data {
        int order;
        int degree;
        univariate::UPoly modulus;
    };
    Element reduce(univariate::UPoly p) const;
    std::shared_ptr<const Data> data_;
};

}  // namespace sodlab

#endif  // SODLAB_FIELD_HPP
