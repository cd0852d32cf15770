#include "levo/gecc.hpp"

#include <algorithm>

#include "levo/decompose.hpp"
#include "levo/errors.hpp"

namespace levo {

namespace {

Ideal projection(const Ideal& P) {
    const Ring& full = P.ring();
    return eliminate_to(P, full->cot_mask(), full->base_ring()).canonical();
}

Ideal stratum_conormal(const StratumSpec& s, const Ring& full, std::uint64_t seed) {
    if (s.conormal) return s.conormal->map_to(full);
    return conormal_ideal(s.closure, full, seed);
}

}  // namespace

bool StratumSpec::visible() const {
    return std::any_of(morse.begin(), morse.end(), [](const auto& kv) { return !kv.second.is_zero(); });
}

void validate_spec(SheafSpec& spec, std::uint64_t seed) {
    if (!spec.ring || !spec.ring->has_cotangent()) throw InputError("sheaf spec needs a ring with cotangent variables");
    if (!spec.strata_mode()) {
        if (!same_ring(spec.direct->ring(), spec.ring)) throw InputError("supplied cycle lives in a different ring");
        return;
    }
    Ring base = spec.ring->base_ring();
    std::vector<std::string> seen;
    for (auto& s : spec.strata) {
        s.closure = s.closure.map_to(base);
        if (s.closure.is_unit()) throw InputError("stratum " + s.name + ": empty closure");
        int d = s.closure.dimension();
        if (s.dimension >= 0 && s.dimension != d)
            throw InputError("stratum " + s.name + ": dimension " + std::to_string(s.dimension) +
                             " differs from the closure dimension " + std::to_string(d));
        s.dimension = d;
        if (!s.visible()) continue;
        if (!s.conormal) s.conormal = conormal_ideal(s.closure, spec.ring, seed);
        std::string key = s.conormal->map_to(spec.ring).key();
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw InputError("stratum " + s.name + ": conormal repeats another stratum");
        seen.push_back(key);
    }
}

GradedEnrichedCycle build_gecc(const SheafSpec& spec, std::uint64_t seed) {
    if (!spec.strata_mode()) return *spec.direct;
    GradedEnrichedCycle G(spec.ring);
    for (const auto& s : spec.strata) {
        if (!s.visible()) continue;
        Ideal con = stratum_conormal(s, spec.ring, seed);
        auto comps = split_components(con, seed);
        for (const auto& [k, A] : s.morse) {
            if (A.is_zero()) continue;
            for (const auto& c : comps) G.add(k, c.ideal, A, c.certified);
        }
    }
    return G;
}

std::vector<Ideal> maximal_varieties(std::vector<Ideal> primes) {
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < primes.size() && !drop; ++j) {
            if (i == j || !primes[i].contains(primes[j])) continue;
            // Keep the first of equal ideals.
            drop = !primes[j].contains(primes[i]) || j < i;
        }
        if (!drop) out.push_back(primes[i].canonical());
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) { return a.key() < b.key(); });
    return out;
}

Support support_of_gecc(const GradedEnrichedCycle& G) {
    Support s;
    std::map<std::string, Ideal> all;
    for (const auto& [k, E] : G.degrees()) {
        std::vector<Ideal> here;
        for (const auto& [key, c] : E.components()) {
            Ideal eta = projection(c.prime);
            here.push_back(eta);
            all.emplace(eta.key(), eta);
        }
        s.per_degree[k] = maximal_varieties(std::move(here));
    }
    for (const auto& [key, eta] : all) s.essential.push_back(eta);
    s.total = maximal_varieties(s.essential);
    return s;
}

SheafSpec spec_from_gecc(const GradedEnrichedCycle& G) {
    SheafSpec spec;
    spec.ring = G.ring();
    std::map<std::string, std::size_t> index;
    for (const auto& [k, E] : G.degrees()) {
        for (const auto& [key, c] : E.components()) {
            auto it = index.find(key);
            if (it == index.end()) {
                StratumSpec s;
                s.closure = projection(c.prime);
                s.name = variety_str(s.closure);
                s.conormal = c.prime;
                s.dimension = s.closure.dimension();
                it = index.emplace(key, spec.strata.size()).first;
                spec.strata.push_back(std::move(s));
            }
            spec.strata[it->second].morse[k] = c.coeff;
        }
    }
    return spec;
}

GradedEnrichedCycle nearby_gecc(const SheafSpec& spec, const Polynomial& f, std::uint64_t seed) {
    if (!spec.strata_mode()) throw InputError("nearby cycles need a stratified sheaf spec");
    const Ring& full = spec.ring;
    Polynomial ff = f.map_to(full);
    std::map<int, EnrichedCycle> rel;
    std::vector<std::string> skipped;
    for (const auto& s : spec.strata) {
        if (!s.visible()) continue;
        Ideal closure = s.closure.map_to(full->base_ring());
        if (constant_on_component(closure, f.map_to(full->base_ring()), seed)) {
            skipped.push_back(s.name.empty() ? variety_str(closure) : s.name);
            continue;
        }
        Ideal rc = relative_conormal_ideal(closure, f, full, seed);
        auto comps = split_components(rc, seed);
        for (const auto& [k, A] : s.morse) {
            if (A.is_zero()) continue;
            auto& E = rel.try_emplace(k, full).first->second;
            for (const auto& c : comps) E.add(c.ideal, A, c.certified);
        }
    }
    GradedEnrichedCycle out(full);
    for (const auto& [k, E] : rel) {
        EnrichedCycle cut = intersect_hypersurface(E, ff, seed, "nearby cycles along " + f.str()).cycle;
        for (const auto& name : skipped) cut.add_warning("stratum " + name + " skipped: function is constant on it");
        out.set(k, std::move(cut));
    }
    return out;
}

Point lift_point(const Polynomial& f, const Point& p, const Ring& full) {
    Ring base = full->base_ring();
    if (static_cast<int>(p.size()) != base->nvars()) throw InputError("point has the wrong number of coordinates");
    Polynomial fb = f.map_to(base);
    Point q = p;
    for (int i = 0; i < base->nvars(); ++i) q.push_back(fb.derivative(i).evaluate(p));
    return q;
}

std::map<int, AbGroup> isolated_vanishing_stalk(const GradedEnrichedCycle& G, const Polynomial& f, const Point& p,
                                                std::uint64_t seed) {
    const Ring& full = G.ring();
    Ideal graph = im_df(f, full);
    Point q = lift_point(f, p, full);
    std::map<int, AbGroup> out;
    for (const auto& [k, E] : G.degrees()) {
        AbGroup total;
        for (const auto& [key, c] : E.components()) {
            long long m = 0;
            try {
                m = local_length(c.prime + graph, q, seed, "vanishing stalk, degree " + std::to_string(k));
            } catch (const ImproperIntersection& e) {
                throw ImproperIntersection(e.stage() + " (critical locus is not isolated at the point; use the "
                                                       "Le-Vogel route)",
                                           e.component());
            }
            if (m > 0) total = ab_dsum(total, ab_tensor(c.coeff, AbGroup::free(m)));
        }
        if (!total.is_zero()) out[k] = total;
    }
    return out;
}

std::vector<CriticalComponent> critical_locus(const GradedEnrichedCycle& G, const Polynomial& f,
                                              std::uint64_t seed) {
    const Ring& full = G.ring();
    Ring base = full->base_ring();
    Ideal graph = im_df(f, full);
    std::vector<Ideal> found;
    std::map<std::string, bool> seen;
    for (const auto& [k, E] : G.degrees()) {
        for (const auto& [key, c] : E.components()) {
            Ideal J = c.prime + graph;
            if (J.is_unit()) continue;
            for (const auto& comp : split_components(J, seed)) {
                if (seen.emplace(comp.ideal.key(), true).second) found.push_back(projection(comp.ideal));
            }
        }
    }
    std::vector<CriticalComponent> out;
    Polynomial fb = f.map_to(base);
    for (auto& P : maximal_varieties(std::move(found))) {
        CriticalComponent c{P, std::nullopt};
        Polynomial r = P.reduce(fb);
        if (r.is_constant()) c.value = r.constant_coeff();
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace levo
