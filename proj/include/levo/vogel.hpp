#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "levo/gecc.hpp"

namespace levo {

struct VogelDecomposition {
    int degree = 0;
    std::vector<EnrichedCycle> pi;     // pi[j], j = 0..n+1
    std::vector<EnrichedCycle> delta;  // delta[j], j = 0..n
    std::vector<std::string> dropped;  // components of the input inside the graph of df
    std::vector<MultiplicityRecord> log;
    std::vector<std::string> warnings;
    std::uint64_t seed = 0;
    // Union of the |delta^j| equals |G_k| cap V(im df) up to radical.
    bool set_identity = false;
};

// Pi^{j+1} . V(w_j - df/dz_j) = Pi^j + Delta^j for j = n..0.  Throws
// ImproperIntersection with stage "j=<j>" when a hypersurface contains a
// component.
VogelDecomposition vogel_decompose(const EnrichedCycle& Gk, const Polynomial& f, std::uint64_t seed = 1,
                                   int degree = 0);

// j -> pushforward of Delta^j to the base ring.
std::map<int, EnrichedCycle> levo_cycles(const VogelDecomposition& D, const Polynomial& f);

// Module at p of a single cycle against the first j coordinate hyperplanes.
AbGroup sliced_module(const EnrichedCycle& L, int j, const Point& p, std::uint64_t seed = 1);

// j -> module at p.  Zero modules are omitted.
std::map<int, AbGroup> levo_modules(const std::map<int, EnrichedCycle>& lambda, const Point& p,
                                    std::uint64_t seed = 1);

struct PolarPackage {
    std::map<int, VogelDecomposition> decompositions;       // by degree
    std::map<int, std::map<int, EnrichedCycle>> cycles;     // degree -> j -> Gamma^j
    std::map<int, std::map<int, AbGroup>> modules;          // degree -> j -> gamma^j
};

// The Vogel route with f = 0.
PolarPackage polar_package(const GradedEnrichedCycle& G, const Point& p, std::uint64_t seed = 1);

// Iterated nearby cycles along z_0 - p_0, ..., z_{j-1} - p_{j-1}, then the
// vanishing stalk along z_j - p_j.  Throws InputError ("coordinates not
// isolating for oracle") when a step is not proper.
std::map<int, AbGroup> polar_modules_iterative(const SheafSpec& spec, const Point& p, int j, std::uint64_t seed = 1);

struct ThetaSet {
    std::vector<Ideal> theta;  // maximal components
    std::vector<Ideal> gamma;  // the m-dimensional ones
};

ThetaSet theta_sets(const GradedEnrichedCycle& G, int m, std::uint64_t seed = 1);

}  // namespace levo
