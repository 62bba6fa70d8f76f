#include "sodlab/field.hpp"

#include <sstream>

#include "sodlab/error.hpp"

namespace sodlab {

namespace uv = univariate;

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational");
    return 1 / a;
}

CyclotomicField::CyclotomicField(int order) {
    if (order < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
    auto modulus = uv::cyclotomic_polynomial(order);
    int degree = uv::degree(modulus);
    data_ = std::make_shared<const Data>(Data{order, degree, std::move(modulus)});
}

CycNum CyclotomicField::reduce(uv::UPoly p) const {
    uv::UPoly r = uv::rem(p, data_->modulus);
    r.resize(static_cast<std::size_t>(data_->degree));
    return CycNum{std::move(r)};
}

CycNum CyclotomicField::zero() const {
    return CycNum{std::vector<Rational>(static_cast<std::size_t>(degree()))};
}

CycNum CyclotomicField::one() const { return from_rational(1); }

CycNum CyclotomicField::from_rational(const Rational& q) const {
    CycNum out = zero();
    out.residue[0] = q;
    return out;
}

CycNum CyclotomicField::zeta_power(long k) const {
    long n = order();
    long e = ((k % n) + n) % n;
    uv::UPoly p(static_cast<std::size_t>(e) + 1);
    p[static_cast<std::size_t>(e)] = 1;
    return reduce(std::move(p));
}

bool CyclotomicField::is_zero(const CycNum& a) const {
    for (const auto& c : a.residue)
        if (sgn(c) != 0) return false;
    return true;
}

CycNum CyclotomicField::add(const CycNum& a, const CycNum& b) const {
    CycNum out = a;
    for (std::size_t i = 0; i < out.residue.size(); ++i) out.residue[i] += b.residue[i];
    return out;
}

CycNum CyclotomicField::sub(const CycNum& a, const CycNum& b) const {
    CycNum out = a;
    for (std::size_t i = 0; i < out.residue.size(); ++i) out.residue[i] -= b.residue[i];
    return out;
}

CycNum CyclotomicField::mul(const CycNum& a, const CycNum& b) const {
    if (degree() == 1) return CycNum{{a.residue[0] * b.residue[0]}};
    uv::UPoly pa = a.residue, pb = b.residue;
    uv::trim(pa);
    uv::trim(pb);
    return reduce(uv::mul(pa, pb));
}

CycNum CyclotomicField::neg(const CycNum& a) const {
    CycNum out = a;
    for (auto& c : out.residue) c = -c;
    return out;
}

CycNum CyclotomicField::inv(const CycNum& a) const {
    if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero cyclotomic number");
    uv::UPoly pa = a.residue;
    uv::trim(pa);
    return reduce(uv::inverse_mod(pa, modulus()));
}

bool CyclotomicField::is_atomic(const CycNum& a) const {
    int nonzero = 0;
    for (std::size_t i = 0; i < a.residue.size(); ++i)
        if (sgn(a.residue[i]) != 0) {
            ++nonzero;
            if (i > 0) return false;
        }
    return nonzero <= 1;
}

int CyclotomicField::sign(const CycNum& a) const {
    return is_atomic(a) ? sgn(a.residue[0]) : 1;
}

std::string CyclotomicField::format(const CycNum& a) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.residue.size(); ++i) {
        const Rational& c = a.residue[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << '*';
            out << 'z';
            if (i > 1) out << '^' << i;
        }
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace sodlab
