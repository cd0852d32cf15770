#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace levo::upoly {

// Dense univariate polynomials, coefficient i multiplies x^i, no trailing
// zeros (the zero polynomial is empty).
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(QPoly& a);
void trim(ZPoly& a);
int degree(const QPoly& a);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly mod(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
// Monic gcd (empty when both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
// s*a + t*b = g with g monic.
QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
QPoly monic(const QPoly& a);

// Primitive integer multiple with positive leading coefficient.
ZPoly primitive(const QPoly& a);
QPoly to_q(const ZPoly& a);

// Irreducible factors over Q of a squarefree primitive polynomial, each
// primitive with positive leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

// Irreducible factors with multiplicities of any nonzero polynomial.
std::vector<std::pair<ZPoly, int>> factor(const QPoly& f);

}  // namespace levo::upoly
