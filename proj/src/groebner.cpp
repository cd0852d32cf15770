#include "levo/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "levo/errors.hpp"

namespace levo {

namespace {

struct OrderLess {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

// Polynomial sorted by a specific order, leading term first.
struct GPoly {
    std::vector<Term> t;
    unsigned sugar = 0;
    std::uint32_t lm_mask = 0;
    const Monomial& lm() const { return t.front().m; }
};

std::vector<Term> sorted_terms(const Polynomial& p, const MonomialOrder& ord) {
    std::vector<Term> t = p.terms();
    if (ord.kind != OrderKind::grevlex)
        std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return t;
}

void make_monic(std::vector<Term>& t) {
    if (t.empty() || t.front().c == 1) return;
    mpq_class inv = 1 / t.front().c;
    for (auto& x : t) x.c *= inv;
}

using WorkMap = std::map<Monomial, mpq_class, OrderLess>;

void add_scaled(WorkMap& w, const std::vector<Term>& g, const Monomial& m, const mpq_class& c, std::size_t skip) {
    for (std::size_t i = skip; i < g.size(); ++i) {
        Monomial mm = g[i].m * m;
        auto it = w.find(mm);
        if (it == w.end()) {
            w.emplace(mm, -(c * g[i].c));
        } else {
            it->second -= c * g[i].c;
            if (it->second == 0) w.erase(it);
        }
    }
}

// Full reduction; `sugar` tracks the sugar degree when non-null.
std::vector<Term> reduce(std::vector<Term> p, const std::vector<const GPoly*>& basis, const MonomialOrder& ord,
                         unsigned* sugar) {
    if (p.empty() || basis.empty()) return p;
    OrderLess cmp{&ord};
    WorkMap w(cmp);
    for (auto& t : p) w.emplace(t.m, std::move(t.c));
    std::vector<Term> out;
    while (!w.empty()) {
        auto it = w.begin();
        const Monomial& m = it->first;
        std::uint32_t mm = m.support_mask();
        const GPoly* div = nullptr;
        for (const GPoly* g : basis) {
            if ((g->lm_mask & ~mm) == 0 && g->lm().divides(m)) {
                div = g;
                break;
            }
        }
        if (!div) {
            out.push_back({it->first, std::move(it->second)});
            w.erase(it);
            continue;
        }
        Monomial q = m / div->lm();
        mpq_class c = it->second / div->t.front().c;
        if (sugar) *sugar = std::max(*sugar, div->sugar + q.deg);
        w.erase(it);
        add_scaled(w, div->t, q, c, 1);
    }
    return out;
}

struct Pair {
    int i, j;
    Monomial lcm;
    unsigned sugar;
};

}  // namespace

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw InternalError("leading monomial of zero");
    if (ord.kind == OrderKind::grevlex) return p.leading().m;
    const Term* best = &p.terms()[0];
    for (const auto& t : p.terms())
        if (ord.greater(t.m, best->m)) best = &t;
    return best->m;
}

mpq_class leading_coefficient(const Polynomial& p, const MonomialOrder& ord) {
    Monomial m = leading_monomial(p, ord);
    for (const auto& t : p.terms())
        if (t.m == m) return t.c;
    return 0;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    Monomial a = leading_monomial(f, ord), b = leading_monomial(g, ord);
    Monomial l = Monomial::lcm(a, b);
    mpq_class ca = leading_coefficient(f, ord), cb = leading_coefficient(g, ord);
    return f.mul_term(l / a, 1 / ca) - g.mul_term(l / b, 1 / cb);
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    std::vector<GPoly> gs;
    gs.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        GPoly g;
        g.t = sorted_terms(b, ord);
        g.lm_mask = g.lm().support_mask();
        gs.push_back(std::move(g));
    }
    std::vector<const GPoly*> ptrs;
    for (const auto& g : gs) ptrs.push_back(&g);
    auto r = reduce(sorted_terms(p, ord), ptrs, ord, nullptr);
    return Polynomial::from_terms(p.ring(), std::move(r));
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    Ring ring;
    std::vector<GPoly> polys;
    std::vector<char> active;
    std::vector<Pair> pairs;

    for (const auto& g : gens)
        if (!g.is_zero()) ring = g.ring();
    if (!ring) return {};

    auto active_ptrs = [&]() {
        std::vector<const GPoly*> v;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (active[i]) v.push_back(&polys[i]);
        return v;
    };

    auto insert = [&](GPoly h) {
        make_monic(h.t);
        h.lm_mask = h.lm().support_mask();
        int k = static_cast<int>(polys.size());
        const Monomial& lh = h.lm();
        // Candidate pairs with the new element.
        std::vector<Pair> cand;
        for (int i = 0; i < k; ++i) {
            if (!active[i]) continue;
            const Monomial& li = polys[i].lm();
            Monomial l = Monomial::lcm(li, lh);
            unsigned s = std::max(polys[i].sugar + (l.deg - li.deg), h.sugar + (l.deg - lh.deg));
            cand.push_back({i, k, l, s});
        }
        // Gebauer-Moeller: drop pairs in `cand` whose lcm is a proper multiple
        // of another candidate's lcm, or equal to an earlier one.
        std::vector<char> keep(cand.size(), 1);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
                if (a == b || !keep[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && (cand[b].lcm != cand[a].lcm || b < a)) keep[a] = 0;
            }
        }
        // Chain criterion on the old pairs.
        std::vector<Pair> kept;
        for (auto& p : pairs) {
            const Monomial& lcm = p.lcm;
            if (lh.divides(lcm)) {
                Monomial a = Monomial::lcm(polys[p.i].lm(), lh);
                Monomial b = Monomial::lcm(polys[p.j].lm(), lh);
                if (a != lcm && b != lcm) continue;
            }
            kept.push_back(p);
        }
        pairs.swap(kept);
        // Product criterion.
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            if (Monomial::coprime(polys[cand[a].i].lm(), lh)) continue;
            pairs.push_back(cand[a]);
        }
        for (int i = 0; i < k; ++i)
            if (active[i] && lh.divides(polys[i].lm())) active[i] = 0;
        polys.push_back(std::move(h));
        active.push_back(1);
    };

    // Sort generators by increasing leading monomial for a gentler start.
    std::vector<GPoly> start;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        GPoly gp;
        gp.t = sorted_terms(g, ord);
        gp.sugar = static_cast<unsigned>(g.total_degree());
        start.push_back(std::move(gp));
    }
    std::sort(start.begin(), start.end(),
              [&](const GPoly& a, const GPoly& b) { return ord.compare(a.lm(), b.lm()) < 0; });
    for (auto& g : start) {
        unsigned sugar = g.sugar;
        auto r = reduce(std::move(g.t), active_ptrs(), ord, &sugar);
        if (r.empty()) continue;
        GPoly h;
        h.t = std::move(r);
        h.sugar = sugar;
        if (h.lm().is_one()) return {Polynomial::constant(ring, 1)};
        insert(std::move(h));
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            return ord.compare(a.lcm, b.lcm) < 0;
        });
        Pair p = *best;
        pairs.erase(best);
        const GPoly& f = polys[p.i];
        const GPoly& g = polys[p.j];
        // S-polynomial of monic elements.
        OrderLess cmp{&ord};
        WorkMap w(cmp);
        Monomial qa = p.lcm / f.lm(), qb = p.lcm / g.lm();
        for (std::size_t i = 1; i < f.t.size(); ++i) w.emplace(f.t[i].m * qa, f.t[i].c);
        add_scaled(w, g.t, qb, mpq_class(1), 1);
        std::vector<Term> s;
        s.reserve(w.size());
        for (auto& kv : w) s.push_back({kv.first, kv.second});
        unsigned sugar = p.sugar;
        auto r = reduce(std::move(s), active_ptrs(), ord, &sugar);
        if (r.empty()) continue;
        GPoly h;
        h.t = std::move(r);
        h.sugar = sugar;
        if (h.lm().is_one()) return {Polynomial::constant(ring, 1)};
        insert(std::move(h));
    }

    // Minimal basis, then interreduce tails.
    std::vector<GPoly> min;
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (active[i]) min.push_back(polys[i]);
    std::sort(min.begin(), min.end(), [&](const GPoly& a, const GPoly& b) { return ord.compare(a.lm(), b.lm()) < 0; });
    std::vector<Polynomial> out;
    out.reserve(min.size());
    for (std::size_t i = 0; i < min.size(); ++i) {
        std::vector<const GPoly*> others;
        for (std::size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(&min[j]);
        std::vector<Term> tail(min[i].t.begin() + 1, min[i].t.end());
        auto r = reduce(std::move(tail), others, ord, nullptr);
        r.insert(r.begin(), min[i].t.front());
        make_monic(r);
        out.push_back(Polynomial::from_terms(ring, std::move(r)));
    }
    return out;
}

int dimension_from_leading(const std::vector<Monomial>& lms, int nvars, std::vector<int>* indep) {
    for (const auto& m : lms)
        if (m.is_one()) return -1;
    std::vector<std::uint32_t> masks;
    for (const auto& m : lms) masks.push_back(m.support_mask());
    int best = -1;
    std::uint32_t best_set = 0;
    // Depth-first search over independent sets, largest first.
    std::function<void(int, std::uint32_t, int)> dfs = [&](int v, std::uint32_t set, int size) {
        if (size + (nvars - v) <= best) return;
        if (v == nvars) {
            best = size;
            best_set = set;
            return;
        }
        std::uint32_t with = set | (1u << v);
        bool ok = true;
        for (auto m : masks)
            if ((m & ~with) == 0) {
                ok = false;
                break;
            }
        if (ok) dfs(v + 1, with, size + 1);
        dfs(v + 1, set, size);
    };
    dfs(0, 0, 0);
    if (indep) {
        indep->clear();
        for (int i = 0; i < nvars; ++i)
            if (best_set >> i & 1u) indep->push_back(i);
    }
    return best;
}

long long count_standard_monomials(const std::vector<Monomial>& lms, std::uint32_t mask, long long cap) {
    for (const auto& m : lms)
        if (m.is_one()) return 0;
    // Finite only if every variable has a pure power among the leading terms.
    for (int v = 0; v < kMaxVars; ++v) {
        if (!(mask >> v & 1u)) continue;
        bool pure = false;
        for (const auto& m : lms)
            if (m.support_mask() == (1u << v)) pure = true;
        if (!pure) return -1;
    }
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> frontier{Monomial{}};
    seen.insert(Monomial{});
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            for (int v = 0; v < kMaxVars; ++v) {
                if (!(mask >> v & 1u)) continue;
                Monomial n = m * Monomial::var(v);
                if (seen.count(n)) continue;
                bool reducible = false;
                for (const auto& l : lms)
                    if (l.divides(n)) {
                        reducible = true;
                        break;
                    }
                if (reducible) continue;
                seen.insert(n);
                next.push_back(n);
                if (static_cast<long long>(seen.size()) > cap) return -1;
            }
        }
        frontier.swap(next);
    }
    return static_cast<long long>(seen.size());
}

}  // namespace levo
