#ifndef SODLAB_UNIVARIATE_HPP
#define SODLAB_UNIVARIATE_HPP

#include <gmpxx.h>

#include <vector>

namespace sodlab::univariate {

/// Dense polynomial over Q, coefficient i multiplies t^i. Canonical form has
/// no trailing zeros; the zero polynomial is the empty vector.
using UPoly = std::vector<mpq_class>;

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const mpq_class& c);
/// Throws DivisionByZero when b is zero.
void divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder);
UPoly rem(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& p);
UPoly gcd(UPoly a, UPoly b);
UPoly derivative(const UPoly& p);
/// Number of distinct complex roots.
int distinct_root_count(const UPoly& p);
/// Inverse of a modulo m, for a coprime to m.
UPoly inverse_mod(const UPoly& a, const UPoly& m);
/// The n-th cyclotomic polynomial, monic with integer coefficients.
UPoly cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace sodlab::univariate

#endif  // SODLAB_UNIVARIATE_HPP
