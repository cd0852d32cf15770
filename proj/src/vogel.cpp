#include "levo/vogel.hpp"

#include "levo/decompose.hpp"
#include "levo/errors.hpp"
#include "levo/random.hpp"

namespace levo {

namespace {

Ideal zero_section(const Ring& full) {
    std::vector<int> w;
    for (int i = 0; i < full->cot_count(); ++i) w.push_back(full->cot_var(i));
    return Ideal::of_vars(full, w);
}

// Every minimal prime of |G| + graph contains some delta prime, and every
// delta prime contains some component of |G| + graph.
bool check_set_identity(const EnrichedCycle& Gk, const std::vector<EnrichedCycle>& delta, const Ideal& graph,
                        std::uint64_t seed) {
    std::vector<Ideal> ds;
    for (const auto& d : delta)
        for (const auto& [key, c] : d.components()) ds.push_back(c.prime);
    for (const auto& Q : ds) {
        if (!Q.contains(graph)) return false;
        bool inside = false;
        for (const auto& [key, c] : Gk.components()) inside = inside || Q.contains(c.prime);
        if (!inside) return false;
    }
    for (const auto& [key, c] : Gk.components()) {
        Ideal J = c.prime + graph;
        if (J.is_unit()) continue;
        for (const auto& comp : split_components(J, seed)) {
            bool covered = false;
            for (const auto& Q : ds) covered = covered || comp.ideal.contains(Q);
            if (!covered) return false;
        }
    }
    return true;
}

EnrichedCycle through_point(const EnrichedCycle& E, const Point& p) {
    EnrichedCycle out(E.ring());
    for (const auto& [key, c] : E.components())
        if (passes_through(c.prime, p)) out.add(c.prime, c.coeff, c.certified);
    return out;
}

}  // namespace

VogelDecomposition vogel_decompose(const EnrichedCycle& Gk, const Polynomial& f, std::uint64_t seed, int degree) {
    const Ring& full = Gk.ring();
    if (!full || !full->has_cotangent()) throw InputError("Vogel decomposition needs a cycle in the (z, w) ring");
    const int n1 = full->base_count();
    Ideal graph = im_df(f, full);
    Polynomial ff = f.map_to(full);
    Rng rng(seed);

    VogelDecomposition D;
    D.degree = degree;
    D.seed = seed;
    D.pi.assign(n1 + 1, EnrichedCycle(full));
    D.delta.assign(n1, EnrichedCycle(full));

    EnrichedCycle& top = D.pi[n1];
    for (const auto& [key, c] : Gk.components()) {
        if (c.prime.dimension() != n1)
            throw InputError("component " + variety_str(c.prime) + " is not of dimension " + std::to_string(n1));
        if (c.prime.contains(graph)) {
            D.dropped.push_back(variety_str(c.prime));
            D.warnings.push_back("component " + variety_str(c.prime) + " lies in the graph of df and was dropped");
            continue;
        }
        top.add(c.prime, c.coeff, c.certified);
    }
    for (const auto& w : Gk.warnings()) D.warnings.push_back(w);

    for (int j = n1 - 1; j >= 0; --j) {
        Polynomial h = Polynomial::variable(full, full->cot_var(j)) - ff.derivative(j);
        auto res = intersect_hypersurface(D.pi[j + 1], h, rng.fork(), "j=" + std::to_string(j));
        D.log.insert(D.log.end(), res.records.begin(), res.records.end());
        for (const auto& [key, c] : res.cycle.components()) {
            if (c.prime.contains(graph))
                D.delta[j].add(c.prime, c.coeff, c.certified);
            else
                D.pi[j].add(c.prime, c.coeff, c.certified);
        }
        for (const auto& w : res.cycle.warnings()) D.warnings.push_back(w);
    }
    D.set_identity = check_set_identity(Gk, D.delta, graph, rng.fork());
    if (!D.set_identity) D.warnings.push_back("union of the Delta supports differs from |G| cap im df");
    return D;
}

std::map<int, EnrichedCycle> levo_cycles(const VogelDecomposition& D, const Polynomial& f) {
    std::map<int, EnrichedCycle> out;
    for (std::size_t j = 0; j < D.delta.size(); ++j) out[static_cast<int>(j)] = graph_pushforward(D.delta[j], f);
    return out;
}

AbGroup sliced_module(const EnrichedCycle& L, int j, const Point& p, std::uint64_t seed) {
    if (L.empty()) return {};
    const Ring& R = L.ring();
    Rng rng(seed);
    EnrichedCycle cur = through_point(L, p);
    for (int i = 0; i < j && !cur.empty(); ++i) {
        Polynomial h = Polynomial::variable(R, i) - Polynomial::constant(R, p[i]);
        cur = through_point(
            intersect_hypersurface(cur, h, rng.fork(), "slice " + R->name(i) + " at j=" + std::to_string(j)).cycle,
            p);
    }
    AbGroup total;
    for (const auto& [key, c] : cur.components()) {
        if (c.prime.dimension() > 0)
            throw ImproperIntersection("slice at j=" + std::to_string(j), variety_str(c.prime));
        total = ab_dsum(total, ab_tensor(c.coeff, AbGroup::free(local_multiplicity_at_point(c.prime, p))));
    }
    return total;
}

std::map<int, AbGroup> levo_modules(const std::map<int, EnrichedCycle>& lambda, const Point& p, std::uint64_t seed) {
    std::map<int, AbGroup> out;
    Rng rng(seed);
    for (const auto& [j, L] : lambda) {
        AbGroup m = sliced_module(L, j, p, rng.fork());
        if (!m.is_zero()) out[j] = m;
    }
    return out;
}

PolarPackage polar_package(const GradedEnrichedCycle& G, const Point& p, std::uint64_t seed) {
    PolarPackage out;
    Polynomial zero(G.ring()->base_ring());
    Rng rng(seed);
    for (const auto& [k, E] : G.degrees()) {
        auto D = vogel_decompose(E, zero, rng.fork(), k);
        auto cycles = levo_cycles(D, zero);
        out.modules[k] = levo_modules(cycles, p, rng.fork());
        out.cycles[k] = std::move(cycles);
        out.decompositions.emplace(k, std::move(D));
    }
    return out;
}

std::map<int, AbGroup> polar_modules_iterative(const SheafSpec& spec, const Point& p, int j, std::uint64_t seed) {
    Ring base = spec.ring->base_ring();
    if (j < 0 || j >= base->nvars()) throw InputError("polar index out of range");
    Rng rng(seed);
    auto coordinate = [&](int i) { return Polynomial::variable(base, i) - Polynomial::constant(base, p[i]); };
    try {
        GradedEnrichedCycle G = build_gecc(spec, rng.fork());
        for (int i = 0; i < j; ++i) G = nearby_gecc(spec_from_gecc(G), coordinate(i), rng.fork());
        return isolated_vanishing_stalk(G, coordinate(j), p, rng.fork());
    } catch (const ImproperIntersection& e) {
        throw InputError(std::string("coordinates not isolating for oracle: ") + e.what());
    }
}

ThetaSet theta_sets(const GradedEnrichedCycle& G, int m, std::uint64_t seed) {
    const Ring& full = G.ring();
    const int n1 = full->base_count();
    if (m < 0 || m >= n1) throw InputError("theta index out of range");
    std::vector<Polynomial> ws;
    for (int i = m + 1; i < n1; ++i) ws.push_back(Polynomial::variable(full, full->cot_var(i)));
    Ideal zs = zero_section(full);
    Ring base = full->base_ring();
    std::vector<Ideal> found;
    for (const auto& [k, E] : G.degrees()) {
        for (const auto& [key, c] : E.components()) {
            Ideal J = c.prime.with(ws);
            if (J.is_unit()) continue;
            for (const auto& comp : split_components(J, seed)) {
                if (comp.ideal.contains(zs)) continue;
                found.push_back(eliminate_to(comp.ideal, full->cot_mask(), base).canonical());
            }
        }
    }
    ThetaSet out;
    out.theta = maximal_varieties(std::move(found));
    for (const auto& t : out.theta)
        if (t.dimension() == m) out.gamma.push_back(t);
    return out;
}

}  // namespace levo
