#include "levo/decompose.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "levo/errors.hpp"
#include "levo/factor.hpp"
#include "levo/random.hpp"

namespace levo {

namespace {

constexpr int kMaxDepth = 64;

std::uint32_t mask_of(const std::vector<int>& vars) {
    std::uint32_t m = 0;
    for (int v : vars) m |= 1u << v;
    return m;
}

// Split a polynomial into its part in the variables of `outer` and the
// coefficient in the remaining variables, at the leading outer monomial.
Polynomial leading_coeff_wrt(const Polynomial& g, std::uint32_t outer, const MonomialOrder& ord) {
    Monomial lm = leading_monomial(g, ord);
    Monomial key;
    for (int i = 0; i < kMaxVars; ++i)
        if (outer >> i & 1u) key.set(i, lm[i]);
    std::vector<Term> c;
    for (const auto& t : g.terms()) {
        bool match = true;
        for (int i = 0; i < kMaxVars && match; ++i)
            if ((outer >> i & 1u) && t.m[i] != key[i]) match = false;
        if (!match) continue;
        Monomial m = t.m;
        for (int i = 0; i < kMaxVars; ++i)
            if (outer >> i & 1u) m.set(i, 0);
        c.push_back({m, t.c});
    }
    return Polynomial::from_terms(g.ring(), std::move(c));
}

class Decomposer {
public:
    explicit Decomposer(std::uint64_t seed) : rng_(seed) {}

    std::vector<PrimeComponent> run(const Ideal& I, int depth) {
        if (I.is_unit()) return {};
        if (depth > kMaxDepth) return {{I.canonical(), false}};
        auto memo = memo_.find(I.key());
        if (memo != memo_.end()) return memo->second;
        auto out = compute(I, depth);
        memo_[I.key()] = out;
        return out;
    }

private:
    std::vector<PrimeComponent> branches(const std::vector<Ideal>& parts, int depth) {
        std::vector<PrimeComponent> all;
        for (const auto& J : parts) {
            auto c = run(J, depth + 1);
            all.insert(all.end(), c.begin(), c.end());
        }
        return minimalize(std::move(all));
    }

    std::vector<PrimeComponent> compute(const Ideal& I, int depth) {
        const auto& gb = I.gb();
        bool all_linear = true;
        for (const auto& g : gb) all_linear = all_linear && g.is_linear();
        if (all_linear) return {{I.canonical(), true}};
        if (auto r = solve_variable(I, depth)) return *r;
        // Split on reducible or non-squarefree basis elements.
        std::vector<Polynomial> candidates = I.gens();
        candidates.insert(candidates.end(), gb.begin(), gb.end());
        for (const auto& g : candidates) {
            if (g.is_linear() || g.is_constant()) continue;
            auto fac = factor(g);
            if (fac.factors.size() > 1 || fac.factors[0].second > 1) {
                std::vector<Ideal> parts;
                bool trivial = false;
                for (const auto& [h, m] : fac.factors) {
                    trivial = trivial || I.contains(h);
                    parts.push_back(I + h);
                }
                if (!trivial) return branches(parts, depth);
            }
        }
        if (in_simple_prime_class(I)) return {{I.canonical(), true}};
        return gtz(I, depth);
    }

    // A basis element c*v + r with r free of v identifies R/I with a ring
    // without v; decompose there and add the element back.
    std::optional<std::vector<PrimeComponent>> solve_variable(const Ideal& I, int depth) {
        const auto& gb = I.gb();
        const Polynomial* best = nullptr;
        int best_var = -1;
        for (const auto& g : gb) {
            if (g.support_mask() == 0) continue;
            for (int v = 0; v < g.ring()->nvars(); ++v) {
                if (g.degree_in(v) != 1 || !g.coeff_in(v, 1).is_constant()) continue;
                if (g.support_mask() == (1u << v)) continue;
                bool better = !best || (g.is_linear() && !best->is_linear()) ||
                              (g.is_linear() == best->is_linear() && g.size() < best->size());
                if (better) {
                    best = &g;
                    best_var = v;
                }
                break;
            }
        }
        if (!best) return std::nullopt;
        const Ring& R = I.ring();
        mpq_class c = best->coeff_in(best_var, 1).constant_coeff();
        Polynomial sub = (Polynomial::variable(R, best_var) * c - *best) * mpq_class(1 / c);
        std::vector<Polynomial> rest;
        for (const auto& g : gb) {
            if (&g == best) continue;
            Polynomial h = g.substitute(best_var, sub);
            if (!h.is_zero()) rest.push_back(std::move(h));
        }
        Ideal J(R, std::move(rest));
        if (J.is_unit()) return std::vector<PrimeComponent>{};
        std::vector<PrimeComponent> out;
        if (J.is_zero()) {
            out.push_back({Ideal(R, {*best}).canonical(), true});
            return out;
        }
        for (auto& comp : run(J, depth + 1)) out.push_back({(comp.ideal + *best).canonical(), comp.certified});
        return minimalize(std::move(out));
    }

    std::vector<PrimeComponent> gtz(const Ideal& I, int depth) {
        Ring R = I.ring();
        std::vector<int> S = I.independent_set();
        std::uint32_t smask = mask_of(S);
        std::uint32_t all = R->nvars() >= 32 ? ~0u : (1u << R->nvars()) - 1;
        std::uint32_t N = all & ~smask;

        MonomialOrder ord = MonomialOrder::block(N);
        auto G = groebner_basis(I.gens(), ord);
        // Leading coefficients in Q[S].
        std::vector<Polynomial> lcs;
        for (const auto& g : G) {
            Polynomial c = leading_coeff_wrt(g, N, ord);
            if (c.is_constant()) continue;
            for (const auto& h : irreducible_factors(c))
                if (std::find(lcs.begin(), lcs.end(), h) == lcs.end()) lcs.push_back(h);
        }
        if (!lcs.empty()) {
            Polynomial h = Polynomial::constant(R, 1);
            for (const auto& c : lcs) h = h * c;
            Ideal J = saturate(I, h);
            if (J != I) {
                std::vector<Ideal> parts{J};
                for (const auto& c : lcs) parts.push_back(I + c);
                return branches(parts, depth);
            }
        }

        // I is now the contraction of its extension to Q(S)[N].
        std::vector<Monomial> lms;
        for (const auto& g : G) {
            Monomial lm = leading_monomial(g, ord), p;
            for (int i = 0; i < kMaxVars; ++i)
                if (N >> i & 1u) p.set(i, lm[i]);
            lms.push_back(p);
        }
        long long degree = count_standard_monomials(lms, N);
        if (degree <= 0) return {{I.canonical(), false}};

        Ring Rt = R->extended({R->fresh_name("t_")});
        int t = Rt->nvars() - 1;
        for (int attempt = 0; attempt < 4; ++attempt) {
            int range = attempt < 2 ? 9 : 50;
            Polynomial ell(R);
            for (int v = 0; v < R->nvars(); ++v)
                if (N >> v & 1u)
                    ell += Polynomial::variable(R, v) * mpq_class(static_cast<long>(rng_.uniform(-range, range)));
            std::vector<Polynomial> gens;
            for (const auto& g : I.gens()) gens.push_back(g.map_to(Rt));
            gens.push_back(Polynomial::variable(Rt, t) - ell.map_to(Rt));
            Ideal K = eliminate(Ideal(Rt, std::move(gens)), N);
            const Polynomial* best = nullptr;
            for (const auto& k : K.gb()) {
                if (!k.uses(t)) continue;
                if (!best || k.degree_in(t) < best->degree_in(t) ||
                    (k.degree_in(t) == best->degree_in(t) && k.total_degree() < best->total_degree()))
                    best = &k;
            }
            if (!best) continue;
            auto fac = factor(*best);
            std::vector<Polynomial> tf, cf;
            int mult = 0;
            for (const auto& [h, m] : fac.factors) {
                if (h.uses(t)) {
                    tf.push_back(h);
                    mult = m;
                } else {
                    cf.push_back(h);
                }
            }
            std::vector<Polynomial> back(Rt->nvars(), Polynomial(R));
            for (int v = 0; v < R->nvars(); ++v) back[v] = Polynomial::variable(R, v);
            back[t] = ell;
            if (tf.size() > 1) {
                std::vector<Ideal> parts;
                for (const auto& h : tf) parts.push_back(I + h.compose(back));
                for (const auto& c : cf) parts.push_back(I + c.compose(back));
                return branches(parts, depth);
            }
            if (tf.size() == 1 && mult == 1 && tf[0].degree_in(t) == degree) return {{I.canonical(), true}};
            if (tf.size() == 1) {
                Polynomial hl = tf[0].compose(back);
                if (!I.contains(hl)) {
                    std::vector<Ideal> parts{I + hl};
                    for (const auto& c : cf) parts.push_back(I + c.compose(back));
                    return branches(parts, depth);
                }
            }
        }
        return {{I.canonical(), false}};
    }

    Rng rng_;
    std::map<std::string, std::vector<PrimeComponent>> memo_;
};

}  // namespace

bool in_simple_prime_class(const Ideal& P) {
    if (P.is_unit()) return false;
    int nonlinear = 0;
    const Polynomial* q = nullptr;
    for (const auto& g : P.gb()) {
        if (g.is_linear()) continue;
        ++nonlinear;
        q = &g;
    }
    if (nonlinear == 0) return true;
    if (nonlinear > 1) return false;
    return is_irreducible(*q);
}

std::vector<PrimeComponent> minimalize(std::vector<PrimeComponent> comps) {
    std::vector<PrimeComponent> uniq;
    std::map<std::string, std::size_t> seen;
    for (auto& c : comps) {
        std::string k = c.ideal.key();
        auto it = seen.find(k);
        if (it != seen.end()) {
            uniq[it->second].certified = uniq[it->second].certified || c.certified;
            continue;
        }
        seen[k] = uniq.size();
        uniq.push_back(std::move(c));
    }
    std::vector<PrimeComponent> out;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < uniq.size() && !redundant; ++j)
            if (i != j && uniq[i].ideal.contains(uniq[j].ideal)) redundant = true;
        if (!redundant) out.push_back(uniq[i]);
    }
    std::sort(out.begin(), out.end(),
              [](const PrimeComponent& a, const PrimeComponent& b) { return a.ideal.key() < b.ideal.key(); });
    return out;
}

std::vector<PrimeComponent> split_components(const Ideal& I, std::uint64_t seed) {
    if (I.is_unit()) throw InputError("split_components: unit ideal");
    Decomposer d(seed);
    return d.run(I, 0);
}

bool verify_decomposition(const Ideal& I, const std::vector<PrimeComponent>& comps) {
    if (comps.empty()) return I.is_unit();
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = 0; j < comps.size(); ++j)
            if (i != j && comps[i].ideal.contains(comps[j].ideal)) return false;
    std::vector<Ideal> ids;
    for (const auto& c : comps) {
        // Every generator of I vanishes on each component.
        for (const auto& g : I.gens())
            if (!c.ideal.contains(g)) return false;
        ids.push_back(c.ideal);
    }
    Ideal inter = intersect(ids);
    return radical_contains(I, inter);
}

}  // namespace levo
