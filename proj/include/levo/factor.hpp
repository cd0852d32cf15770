#pragma once

#include <utility>
#include <vector>

#include "levo/polynomial.hpp"

namespace levo {

struct Factorization {
    mpq_class unit = 1;
    // Irreducible over Q, integer coefficients with unit content and positive
    // leading coefficient; pairwise non-associate.
    std::vector<std::pair<Polynomial, int>> factors;
};

// Complete factorization over Q: monomial content, recursive content,
// squarefree decomposition, then Hensel lifting from a univariate image.
Factorization factor(const Polynomial& f);

// Distinct irreducible factors (the radical's factors).
std::vector<Polynomial> irreducible_factors(const Polynomial& f);

bool is_irreducible(const Polynomial& f);

// Normalized gcd (primitive, positive leading coefficient); recursive
// primitive remainder sequences.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Content with respect to v: gcd of the coefficients of powers of v.
Polynomial content_in(const Polynomial& f, int v);

// Squarefree parts with multiplicities, product equal to f up to a unit.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

}  // namespace levo
