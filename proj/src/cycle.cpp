#include "levo/cycle.hpp"

#include "levo/errors.hpp"

namespace levo {

std::string variety_str(const Ideal& prime) {
    std::string s = "V(";
    const auto& g = prime.gens();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ", ";
        s += g[i].str();
    }
    return s + ")";
}

void EnrichedCycle::add(const Ideal& prime, const AbGroup& coeff, bool certified) {
    if (!ring_) ring_ = prime.ring();
    if (!same_ring(ring_, prime.ring())) throw InputError("cycle component from a different ring");
    if (coeff.is_zero()) return;
    Ideal c = prime.canonical();
    std::string k = c.key();
    auto it = comps_.find(k);
    if (it == comps_.end()) {
        comps_.emplace(k, CycleComponent{c, coeff, certified});
    } else {
        it->second.coeff = ab_dsum(it->second.coeff, coeff);
        it->second.certified = it->second.certified && certified;
    }
    if (!certified) warnings_.insert("component " + variety_str(c) + " is not certified prime");
}

AbGroup EnrichedCycle::coefficient(const Ideal& prime) const {
    auto it = comps_.find(prime.key());
    return it == comps_.end() ? AbGroup{} : it->second.coeff;
}

bool EnrichedCycle::operator==(const EnrichedCycle& o) const {
    if (comps_.size() != o.comps_.size()) return false;
    for (const auto& [k, c] : comps_) {
        auto it = o.comps_.find(k);
        if (it == o.comps_.end() || it->second.coeff != c.coeff) return false;
    }
    return true;
}

std::string EnrichedCycle::str() const {
    if (comps_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : comps_) {
        if (!s.empty()) s += " + ";
        std::string g = c.coeff.str();
        if (g.find('+') != std::string::npos) g = "(" + g + ")";
        s += g + "[" + variety_str(c.prime) + "]";
    }
    return s;
}

EnrichedCycle cycle_add(const EnrichedCycle& d, const EnrichedCycle& e) {
    if (d.ring() && e.ring() && !same_ring(d.ring(), e.ring())) throw InputError("cycle ring mismatch");
    EnrichedCycle r = d;
    for (const auto& [k, c] : e.components()) r.add(c.prime, c.coeff, c.certified);
    r.merge_warnings(e);
    return r;
}

EnrichedCycle cycle_scale(const AbGroup& q, const EnrichedCycle& e) {
    EnrichedCycle r(e.ring());
    for (const auto& [k, c] : e.components()) r.add(c.prime, ab_tensor(q, c.coeff), c.certified);
    r.merge_warnings(e);
    return r;
}

bool cycle_le(const EnrichedCycle& d, const EnrichedCycle& e) {
    for (const auto& [k, c] : d.components()) {
        auto it = e.components().find(k);
        if (it == e.components().end() || !ab_le(c.coeff, it->second.coeff)) return false;
    }
    return true;
}

void OrdinaryCycle::add(const Ideal& prime, std::int64_t m) {
    if (m == 0) return;
    Ideal c = prime.canonical();
    std::string k = c.key();
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, std::make_pair(c, m));
    } else {
        it->second.second += m;
        if (it->second.second == 0) terms.erase(it);
    }
}

bool OrdinaryCycle::operator==(const OrdinaryCycle& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (const auto& [k, v] : terms) {
        auto it = o.terms.find(k);
        if (it == o.terms.end() || it->second.second != v.second) return false;
    }
    return true;
}

std::string OrdinaryCycle::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms) {
        if (!s.empty()) s += " + ";
        s += std::to_string(v.second) + "[" + variety_str(v.first) + "]";
    }
    return s;
}

OrdinaryCycle cycle_ord(const EnrichedCycle& e) {
    OrdinaryCycle o;
    for (const auto& [k, c] : e.components()) o.add(c.prime, c.coeff.rank);
    return o;
}

EnrichedCycle GradedEnrichedCycle::at(int k) const {
    auto it = deg_.find(k);
    return it == deg_.end() ? EnrichedCycle(ring_) : it->second;
}

void GradedEnrichedCycle::set(int k, EnrichedCycle e) {
    if (!ring_) ring_ = e.ring();
    if (e.empty() && e.warnings().empty()) deg_.erase(k);
    else deg_[k] = std::move(e);
}

void GradedEnrichedCycle::add(int k, const Ideal& prime, const AbGroup& coeff, bool certified) {
    if (coeff.is_zero()) return;
    if (!ring_) ring_ = prime.ring();
    auto it = deg_.find(k);
    if (it == deg_.end()) it = deg_.emplace(k, EnrichedCycle(ring_)).first;
    it->second.add(prime, coeff, certified);
}

std::string GradedEnrichedCycle::str() const {
    if (deg_.empty()) return "0";
    std::string s;
    for (const auto& [k, e] : deg_) s += "degree " + std::to_string(k) + ": " + e.str() + "\n";
    return s;
}

GradedEnrichedCycle cycle_shift(const GradedEnrichedCycle& e, int k) {
    GradedEnrichedCycle r(e.ring());
    for (const auto& [i, c] : e.degrees()) r.set(i - k, c);
    return r;
}

OrdinaryCycle cycle_ord(const GradedEnrichedCycle& e) {
    OrdinaryCycle o;
    for (const auto& [i, c] : e.degrees()) {
        std::int64_t sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& [k, comp] : c.components()) o.add(comp.prime, sign * comp.coeff.rank);
    }
    return o;
}

}  // namespace levo
