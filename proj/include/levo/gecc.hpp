#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levo/cycle.hpp"
#include "levo/geom.hpp"

namespace levo {

// One stratum: closure in the base ring, Morse modules by degree.
struct StratumSpec {
    std::string name;
    Ideal closure;
    std::optional<Ideal> conormal;  // in the (z, w) ring; computed when absent
    int dimension = -1;             // -1: take it from the closure
    std::map<int, AbGroup> morse;

    bool visible() const;
};

// Either a list of strata or a directly supplied cycle.
struct SheafSpec {
    Ring ring;  // (z, w) ring
    std::vector<StratumSpec> strata;
    std::optional<GradedEnrichedCycle> direct;

    bool strata_mode() const { return !direct.has_value(); }
};

// Checks the stratum invariants and fills in dimensions.
void validate_spec(SheafSpec& spec, std::uint64_t seed = 1);

GradedEnrichedCycle build_gecc(const SheafSpec& spec, std::uint64_t seed = 1);

struct Support {
    std::map<int, std::vector<Ideal>> per_degree;  // maximal projections in each degree
    std::vector<Ideal> total;                      // maximal projections overall
    std::vector<Ideal> essential;                  // every projection of a component
};

Support support_of_gecc(const GradedEnrichedCycle& G);

// Strata whose closures are the projections of the components of G, with
// the components themselves as explicit conormals.
SheafSpec spec_from_gecc(const GradedEnrichedCycle& G);

// Cycle of the nearby cycles along f.  Strata on which f is constant are
// skipped and listed in the warnings of every degree.
GradedEnrichedCycle nearby_gecc(const SheafSpec& spec, const Polynomial& f, std::uint64_t seed = 1);

// Stalk at p of the vanishing cycles of f - f(p), degree by degree.  Throws
// ImproperIntersection when |G| meets the graph of df in positive dimension
// at (p, d_p f).
std::map<int, AbGroup> isolated_vanishing_stalk(const GradedEnrichedCycle& G, const Polynomial& f, const Point& p,
                                                std::uint64_t seed = 1);

struct CriticalComponent {
    Ideal component;  // base ring
    std::optional<mpq_class> value;
};

std::vector<CriticalComponent> critical_locus(const GradedEnrichedCycle& G, const Polynomial& f,
                                              std::uint64_t seed = 1);

// Base point followed by the covector d_p f.
Point lift_point(const Polynomial& f, const Point& p, const Ring& full);

// Minimal primes among the given ones (largest varieties), deduplicated.
std::vector<Ideal> maximal_varieties(std::vector<Ideal> primes);

}  // namespace levo
