#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "levo/cycle.hpp"
#include "levo/ideal.hpp"

namespace levo {

// Rational point with one coordinate per ring variable.
using Point = std::vector<mpq_class>;

Ideal point_ideal(const Ring& ring, const Point& p);
bool passes_through(const Ideal& P, const Point& p);
// Largest dimension of a component of V(J) through p; -1 if p is not on V(J).
int dimension_at(const Ideal& J, const Point& p, std::uint64_t seed = 1);

struct MultiplicityRecord {
    std::string source;     // component intersected
    std::string component;  // resulting component
    long long multiplicity = 0;
    std::vector<std::uint64_t> seeds;  // slice seeds, empty when no slice was needed
};

struct IntersectionResult {
    EnrichedCycle cycle;
    std::vector<MultiplicityRecord> records;
    bool proper = true;
};

// E . V(g).  Throws ImproperIntersection (labelled `stage`) when g vanishes
// on a component.
IntersectionResult intersect_hypersurface(const EnrichedCycle& E, const Polynomial& g, std::uint64_t seed = 1,
                                          const std::string& stage = "hypersurface");

// Length of R/(P + g) localized at the minimal prime W, by generic affine
// slicing.  Two independent slices must agree; throws NonGenericSlice after
// three failed rounds.
long long multiplicity_along(const Ideal& P, const Polynomial& g, const Ideal& W, std::uint64_t seed = 1,
                             std::vector<std::uint64_t>* seeds = nullptr);

// dim_Q of the local ring of R/J at p, by m_p-power stabilization.  J must be
// zero-dimensional; 0 when p is not on V(J).
long long local_multiplicity_at_point(const Ideal& J, const Point& p);

// Same, but components of V(J) missing p are saturated away first.  Throws
// ImproperIntersection (labelled `stage`) when a component through p has
// positive dimension.
long long local_length(const Ideal& J, const Point& p, std::uint64_t seed = 1,
                       const std::string& stage = "local length");

// Graph of df in the (z, w) ring `full`: w_i - df/dz_i.
Ideal im_df(const Polynomial& f, const Ring& full);

// Closure of the conormal to the smooth part of V(I), in the (z, w) ring.
Ideal conormal_ideal(const Ideal& I, const Ring& full, std::uint64_t seed = 1);

// True when f restricted to some component of V(I) is constant.
bool constant_on_component(const Ideal& I, const Polynomial& f, std::uint64_t seed = 1);

// Closure of the covectors annihilating T_x S cap ker d_x f.  Throws
// InputError when f is constant on a component of V(I).
Ideal relative_conormal_ideal(const Ideal& I, const Polynomial& f, const Ring& full, std::uint64_t seed = 1);

// Push a cycle lying in the graph of df down to the base ring.
EnrichedCycle graph_pushforward(const EnrichedCycle& E, const Polynomial& f);

struct BlowupResult {
    Ring ring;  // ambient ring followed by u_0..u_d
    Ideal rees;
    std::vector<std::pair<Ideal, long long>> exceptional;
};

// Blow-up of V(P) along g and its exceptional divisor with multiplicities.
// Experimental.
BlowupResult blowup_exceptional(const Ideal& P, const std::vector<Polynomial>& g, std::uint64_t seed = 1);

}  // namespace levo
