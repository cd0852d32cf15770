#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "levo/abgroup.hpp"
#include "levo/ideal.hpp"

namespace levo {

struct CycleComponent {
    Ideal prime;  // canonical generators
    AbGroup coeff;
    bool certified = true;
};

// Formal sum of prime components with abelian-group coefficients.  Zero
// coefficients are never stored; components are keyed by their reduced basis.
class EnrichedCycle {
public:
    EnrichedCycle() = default;
    explicit EnrichedCycle(Ring ring) : ring_(std::move(ring)) {}

    const Ring& ring() const { return ring_; }
    const std::map<std::string, CycleComponent>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    std::size_t size() const { return comps_.size(); }

    // Adds coeff to the coefficient of the prime (direct sum).
    void add(const Ideal& prime, const AbGroup& coeff, bool certified = true);
    AbGroup coefficient(const Ideal& prime) const;

    const std::set<std::string>& warnings() const { return warnings_; }
    void add_warning(const std::string& w) { warnings_.insert(w); }
    void merge_warnings(const EnrichedCycle& o) { warnings_.insert(o.warnings_.begin(), o.warnings_.end()); }

    bool operator==(const EnrichedCycle& o) const;
    bool operator!=(const EnrichedCycle& o) const { return !(*this == o); }

    // "Z^2[V(x, y)] + Z[V(y)]", or "0".
    std::string str() const;

private:
    Ring ring_;
    std::map<std::string, CycleComponent> comps_;
    std::set<std::string> warnings_;
};

std::string variety_str(const Ideal& prime);

EnrichedCycle cycle_add(const EnrichedCycle& d, const EnrichedCycle& e);
EnrichedCycle cycle_scale(const AbGroup& q, const EnrichedCycle& e);
bool cycle_le(const EnrichedCycle& d, const EnrichedCycle& e);

struct OrdinaryCycle {
    std::map<std::string, std::pair<Ideal, std::int64_t>> terms;  // nonzero multiplicities

    void add(const Ideal& prime, std::int64_t m);
    bool operator==(const OrdinaryCycle& o) const;
    std::string str() const;
};

OrdinaryCycle cycle_ord(const EnrichedCycle& e);

// Degree k -> enriched cycle.
class GradedEnrichedCycle {
public:
    GradedEnrichedCycle() = default;
    explicit GradedEnrichedCycle(Ring ring) : ring_(std::move(ring)) {}

    const Ring& ring() const { return ring_; }
    const std::map<int, EnrichedCycle>& degrees() const { return deg_; }
    // Empty cycle for absent degrees.
    EnrichedCycle at(int k) const;
    void set(int k, EnrichedCycle e);
    void add(int k, const Ideal& prime, const AbGroup& coeff, bool certified = true);
    bool empty() const { return deg_.empty(); }

    bool operator==(const GradedEnrichedCycle& o) const { return deg_ == o.deg_; }
    std::string str() const;

private:
    Ring ring_;
    std::map<int, EnrichedCycle> deg_;
};

// (E[k])^i = E^{i+k}.
GradedEnrichedCycle cycle_shift(const GradedEnrichedCycle& e, int k);
// Sum of (-1)^i [E^i]^ord.
OrdinaryCycle cycle_ord(const GradedEnrichedCycle& e);

}  // namespace levo
