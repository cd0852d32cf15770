#pragma once

#include <vector>

#include "levo/polynomial.hpp"

namespace levo {

// Reduced Groebner basis (monic, sorted by increasing leading monomial).
// Buchberger with the Gebauer-Moeller pair criteria and sugar selection.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord);

// Full reduction of p by `basis` (any generating set; a Groebner basis for a
// canonical normal form).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& ord);

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& ord);
mpq_class leading_coefficient(const Polynomial& p, const MonomialOrder& ord);

// S-polynomial of a pair under `ord`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Krull dimension of R/I from the leading monomials of a Groebner basis;
// -1 for the unit ideal.  `indep` receives a maximal independent set.
int dimension_from_leading(const std::vector<Monomial>& lms, int nvars, std::vector<int>* indep = nullptr);

// Number of monomials in the variables of `mask` divisible by no element of
// `lms` (which must only involve those variables); -1 when infinite or above
// `cap`.
long long count_standard_monomials(const std::vector<Monomial>& lms, std::uint32_t mask, long long cap = 5000000);

}  // namespace levo
