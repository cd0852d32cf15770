#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levo/ideal.hpp"

namespace levo {

struct PrimeComponent {
    Ideal ideal;  // canonical generators
    bool certified = false;
};

// Minimal primes over Q.  Splits on factors of basis elements, saturates
// away leading coefficients with respect to a maximal independent set, and
// certifies primality by a primitive-element eliminant.  Throws InputError on
// the unit ideal.
std::vector<PrimeComponent> split_components(const Ideal& I, std::uint64_t seed = 1);

// Certified-prime class: linear forms plus at most one nonlinear basis
// element that is irreducible.
bool in_simple_prime_class(const Ideal& P);

// Radical of the intersection equals the radical of I, and no component
// contains another.
bool verify_decomposition(const Ideal& I, const std::vector<PrimeComponent>& comps);

// Drop duplicates and non-minimal members.
std::vector<PrimeComponent> minimalize(std::vector<PrimeComponent> comps);

}  // namespace levo
