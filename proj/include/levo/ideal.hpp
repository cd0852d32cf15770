#pragma once

#include <memory>
#include <string>
#include <vector>

#include "levo/groebner.hpp"
#include "levo/polynomial.hpp"

namespace levo {

// Ideal with a lazily computed reduced grevlex Groebner basis.  Copies share
// the cache.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(Ring ring, std::vector<Polynomial> gens = {});

    static Ideal unit(const Ring& ring);
    // Ideal generated by the named variables.
    static Ideal of_vars(const Ring& ring, const std::vector<int>& vars);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    // Reduced grevlex basis, sorted by increasing leading monomial.
    const std::vector<Polynomial>& gb() const;
    std::vector<Monomial> leading_monomials() const;

    bool is_unit() const;
    bool is_zero() const;
    bool contains(const Polynomial& p) const;
    bool contains(const Ideal& j) const;
    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    Polynomial reduce(const Polynomial& p) const;

    // Krull dimension of R/I, -1 for the unit ideal.
    int dimension() const;
    std::vector<int> independent_set() const;
    // dim_Q R/I, or -1 when infinite.
    long long vdim() const;

    Ideal operator+(const Ideal& o) const;
    Ideal operator+(const Polynomial& p) const;
    Ideal with(const std::vector<Polynomial>& ps) const;

    // Same ideal in another ring (variables matched by name).
    Ideal map_to(const Ring& target) const;

    // Ideal generated by its reduced basis, listed by degree then variable
    // order; used for display and component identity.
    Ideal canonical() const;
    // Structural key of the reduced basis.
    std::string key() const;
    std::vector<std::string> gen_strings() const;
    std::string str() const;

private:
    struct Cache {
        std::vector<Polynomial> gb;
        int dim = -2;
        std::vector<int> indep;
    };
    const Cache& cache() const;

    Ring ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<Cache> cache_;
};

// Generators of I lying in the subring without the `drop` variables; block
// order with the dropped variables greater.
Ideal eliminate(const Ideal& I, std::uint32_t drop);
// Elimination followed by restriction to the ring `sub` (matched by name).
Ideal eliminate_to(const Ideal& I, std::uint32_t drop, const Ring& sub);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect(const std::vector<Ideal>& ideals);
Ideal colon(const Ideal& I, const Polynomial& g);
Ideal saturate(const Ideal& I, const Polynomial& g);
// Saturation by iterated colon with stabilization by equality.
Ideal saturate_by_colon(const Ideal& I, const Polynomial& g);
Ideal saturate(const Ideal& I, const Ideal& J);
bool radical_member(const Polynomial& g, const Ideal& I);
// Every generator of J in the radical of I.
bool radical_contains(const Ideal& I, const Ideal& J);
bool same_radical(const Ideal& I, const Ideal& J);

Ideal product(const Ideal& I, const Ideal& J);
// I^k by repeated products.
Ideal power(const Ideal& I, int k);

}  // namespace levo
