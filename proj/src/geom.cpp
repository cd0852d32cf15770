#include "levo/geom.hpp"

#include <algorithm>
#include <functional>

#include "levo/decompose.hpp"
#include "levo/errors.hpp"
#include "levo/random.hpp"

namespace levo {

namespace {

constexpr int kSliceRounds = 3;
constexpr int kCoeffBound = 50;

std::uint32_t all_vars(const Ring& r) { return r->nvars() >= 32 ? ~0u : (1u << r->nvars()) - 1; }

Polynomial one(const Ring& r) { return Polynomial::constant(r, 1); }

// Basis element of `other` not in W: vanishes on V(other), not on V(W).
Polynomial witness(const Ideal& other, const Ideal& W) {
    for (const auto& g : other.gb())
        if (!W.contains(g)) return g;
    throw InternalError("component " + variety_str(other) + " contains " + variety_str(W));
}

Polynomial random_affine_form(const Ring& r, Rng& rng) {
    Polynomial l = Polynomial::constant(r, rng.uniform(-kCoeffBound, kCoeffBound));
    for (int v = 0; v < r->nvars(); ++v) {
        std::int64_t a = rng.uniform(-kCoeffBound, kCoeffBound);
        if (a != 0) l += Polynomial::variable(r, v) * mpq_class(a);
    }
    return l;
}

// Ratio vdim(Q + L : h^inf) / vdim(W + L : h^inf) for one slice; -1 when the
// slice is visibly non-generic, -2 when the ratio is not an integer.
long long slice_ratio(const Ideal& Q0, const Ideal& W, const Polynomial& h, int nforms, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Polynomial> L;
    for (int i = 0; i < nforms; ++i) L.push_back(random_affine_form(Q0.ring(), rng));
    Ideal num = saturate(Q0.with(L), h);
    Ideal den = saturate(W.with(L), h);
    long long a = num.vdim(), b = den.vdim();
    if (a <= 0 || b <= 0) return -1;
    if (a % b != 0) return -2;
    return a / b;
}

long long multiplicity_with(const Ideal& Q0, const Ideal& W, const std::vector<Ideal>& others, Rng& rng,
                            std::vector<std::uint64_t>* seeds) {
    if (others.empty() && Q0 == W) return 1;
    Polynomial h = one(Q0.ring());
    for (const auto& o : others) h = h * witness(o, W);
    int dw = W.dimension();
    if (dw == 0) {
        long long a = saturate(Q0, h).vdim(), b = W.vdim();
        if (a <= 0 || b <= 0 || a % b != 0) throw InternalError("non-integral multiplicity along " + variety_str(W));
        return a / b;
    }
    bool nonintegral = false;
    for (int round = 0; round < kSliceRounds; ++round) {
        std::uint64_t s1 = rng.fork(), s2 = rng.fork();
        if (seeds) {
            seeds->push_back(s1);
            seeds->push_back(s2);
        }
        long long m1 = slice_ratio(Q0, W, h, dw, s1);
        long long m2 = slice_ratio(Q0, W, h, dw, s2);
        nonintegral = nonintegral || m1 == -2 || m2 == -2;
        if (m1 > 0 && m1 == m2) return m1;
    }
    if (nonintegral) throw InternalError("non-integral multiplicity along " + variety_str(W));
    throw NonGenericSlice();
}

std::vector<Ideal> other_components(const std::vector<PrimeComponent>& comps, const Ideal& W) {
    std::vector<Ideal> o;
    std::string k = W.key();
    for (const auto& c : comps)
        if (c.ideal.key() != k) o.push_back(c.ideal);
    return o;
}

void monomials_of_degree(const Ring& r, std::uint32_t vars, int k, std::vector<Polynomial>& out) {
    std::vector<int> vs;
    for (int v = 0; v < r->nvars(); ++v)
        if (vars >> v & 1u) vs.push_back(v);
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == vs.size()) {
            m.set(vs[i], static_cast<std::uint16_t>(left));
            out.push_back(Polynomial::term(r, m, 1));
            m.set(vs[i], 0);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.set(vs[i], static_cast<std::uint16_t>(e));
            rec(i + 1, left - e);
        }
        m.set(vs[i], 0);
    };
    if (!vs.empty()) rec(0, k);
}

using Matrix = std::vector<std::vector<Polynomial>>;

Polynomial det(const Matrix& a, const Ring& r) {
    std::size_t n = a.size();
    if (n == 0) return one(r);
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Polynomial d(r);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        Matrix sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            sub.push_back(std::move(row));
        }
        Polynomial t = a[0][j] * det(sub, r);
        if (j % 2) d -= t;
        else d += t;
    }
    return d;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Minors of size k of `rows` (all columns 0..ncols-1); when `fixed` >= 0 the
// row with that index is always included.
std::vector<Polynomial> minors(const Matrix& rows, int ncols, int k, int fixed, const Ring& r) {
    std::vector<Polynomial> out;
    int nrows = static_cast<int>(rows.size());
    for_each_subset(nrows, k, [&](const std::vector<int>& rs) {
        if (fixed >= 0 && std::find(rs.begin(), rs.end(), fixed) == rs.end()) return;
        for_each_subset(ncols, k, [&](const std::vector<int>& cs) {
            Matrix m;
            for (int i : rs) {
                std::vector<Polynomial> row;
                for (int c : cs) row.push_back(rows[i][c]);
                m.push_back(std::move(row));
            }
            Polynomial d = det(m, r);
            if (!d.is_zero()) out.push_back(d);
        });
    });
    return out;
}

std::vector<Polynomial> gradient(const Polynomial& g, int nbase) {
    std::vector<Polynomial> row;
    for (int i = 0; i < nbase; ++i) row.push_back(g.derivative(i));
    return row;
}

Polynomial random_combination(const std::vector<Polynomial>& ps, const Ring& r, Rng& rng) {
    Polynomial h(r);
    for (const auto& p : ps) h += p * mpq_class(rng.uniform(1, kCoeffBound));
    return h;
}

std::vector<Polynomial> cotangent_row(const Ring& full) {
    std::vector<Polynomial> row;
    for (int i = 0; i < full->cot_count(); ++i) row.push_back(Polynomial::variable(full, full->cot_var(i)));
    return row;
}

void require_cotangent(const Ring& full) {
    if (!full->has_cotangent()) throw InputError("ring has no cotangent variables");
}

}  // namespace

Ideal point_ideal(const Ring& ring, const Point& p) {
    if (static_cast<int>(p.size()) != ring->nvars()) throw InputError("point dimension does not match ring");
    std::vector<Polynomial> g;
    for (int v = 0; v < ring->nvars(); ++v) g.push_back(Polynomial::variable(ring, v) - Polynomial::constant(ring, p[v]));
    return Ideal(ring, std::move(g));
}

bool passes_through(const Ideal& P, const Point& p) {
    for (const auto& g : P.gb())
        if (g.evaluate(p) != 0) return false;
    return true;
}

int dimension_at(const Ideal& J, const Point& p, std::uint64_t seed) {
    if (J.is_unit() || !passes_through(J, p)) return -1;
    if (J.dimension() == 0) return 0;
    int d = -1;
    for (const auto& c : split_components(J, seed))
        if (passes_through(c.ideal, p)) d = std::max(d, c.ideal.dimension());
    return d;
}

long long multiplicity_along(const Ideal& P, const Polynomial& g, const Ideal& W, std::uint64_t seed,
                             std::vector<std::uint64_t>* seeds) {
    Polynomial gg = g.map_to(P.ring());
    if (P.contains(gg)) throw ImproperIntersection("multiplicity", variety_str(P));
    Ideal Q0 = P + gg;
    Rng rng(seed);
    auto comps = split_components(Q0, rng.fork());
    bool found = false;
    for (const auto& c : comps) found = found || c.ideal == W;
    if (!found) throw InputError(variety_str(W) + " is not a minimal prime of the intersection");
    return multiplicity_with(Q0, W, other_components(comps, W), rng, seeds);
}

IntersectionResult intersect_hypersurface(const EnrichedCycle& E, const Polynomial& g, std::uint64_t seed,
                                          const std::string& stage) {
    IntersectionResult res;
    res.cycle = EnrichedCycle(E.ring());
    res.cycle.merge_warnings(E);
    Rng rng(seed);
    for (const auto& [key, c] : E.components()) {
        const Ideal& P = c.prime;
        Polynomial gg = g.map_to(P.ring());
        if (P.contains(gg)) {
            res.proper = false;
            throw ImproperIntersection(stage, variety_str(P));
        }
        Ideal Q0 = P + gg;
        std::uint64_t split_seed = rng.fork();
        if (Q0.is_unit()) continue;
        auto comps = split_components(Q0, split_seed);
        for (const auto& w : comps) {
            MultiplicityRecord rec;
            rec.source = variety_str(P);
            rec.component = variety_str(w.ideal);
            rec.multiplicity = multiplicity_with(Q0, w.ideal, other_components(comps, w.ideal), rng, &rec.seeds);
            res.cycle.add(w.ideal, ab_tensor(c.coeff, AbGroup::free(rec.multiplicity)), c.certified && w.certified);
            res.records.push_back(std::move(rec));
        }
    }
    return res;
}

long long local_multiplicity_at_point(const Ideal& J, const Point& p) {
    const Ring& R = J.ring();
    if (J.is_unit()) return 0;
    if (J.dimension() > 0) throw InputError("local multiplicity needs a zero-dimensional ideal");
    if (!passes_through(J, p)) return 0;

    std::vector<Polynomial> shift;
    for (int v = 0; v < R->nvars(); ++v) shift.push_back(Polynomial::variable(R, v) + Polynomial::constant(R, p[v]));
    std::vector<Polynomial> gens;
    for (const auto& g : J.gb()) gens.push_back(g.compose(shift));

    // Solve away variables occurring in a generator only as c*v.
    std::uint32_t remaining = all_vars(R);
    std::vector<Polynomial> solved;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
            const Polynomial& g = gens[i];
            for (const auto& t : g.terms()) {
                if (t.m.deg != 1) continue;
                int v = 0;
                while (t.m[v] == 0) ++v;
                if (!(remaining >> v & 1u) || g.degree_in(v) != 1) continue;
                Polynomial rest = g - Polynomial::term(R, t.m, t.c);
                if (rest.uses(v)) continue;
                Polynomial sub = rest * mpq_class(-1 / t.c);
                std::vector<Polynomial> next;
                for (std::size_t j = 0; j < gens.size(); ++j) {
                    if (j == i) continue;
                    Polynomial h = gens[j].substitute(v, sub);
                    if (!h.is_zero()) next.push_back(std::move(h));
                }
                gens = std::move(next);
                remaining &= ~(1u << v);
                solved.push_back(Polynomial::variable(R, v));
                changed = true;
                break;
            }
        }
    }
    gens.insert(gens.end(), solved.begin(), solved.end());
    if ((remaining & all_vars(R)) == 0) return 1;

    long long prev = -1;
    for (int k = 1;; ++k) {
        std::vector<Polynomial> gk = gens;
        monomials_of_degree(R, remaining, k, gk);
        long long d = Ideal(R, std::move(gk)).vdim();
        if (d < 0) throw InternalError("local quotient is not finite");
        if (d == prev) return d;
        prev = d;
    }
}

long long local_length(const Ideal& J, const Point& p, std::uint64_t seed, const std::string& stage) {
    if (J.is_unit() || !passes_through(J, p)) return 0;
    if (J.dimension() <= 0) return local_multiplicity_at_point(J, p);
    Polynomial h = one(J.ring());
    for (const auto& c : split_components(J, seed)) {
        if (passes_through(c.ideal, p)) {
            if (c.ideal.dimension() > 0) throw ImproperIntersection(stage, variety_str(c.ideal));
            continue;
        }
        for (const auto& g : c.ideal.gb())
            if (g.evaluate(p) != 0) {
                h = h * g;
                break;
            }
    }
    return local_multiplicity_at_point(saturate(J, h), p);
}

Ideal im_df(const Polynomial& f, const Ring& full) {
    require_cotangent(full);
    Polynomial ff = f.map_to(full);
    std::vector<Polynomial> g;
    for (int i = 0; i < full->base_count(); ++i)
        g.push_back(Polynomial::variable(full, full->cot_var(i)) - ff.derivative(i));
    return Ideal(full, std::move(g));
}

Ideal conormal_ideal(const Ideal& I, const Ring& full, std::uint64_t seed) {
    require_cotangent(full);
    Ideal J = I.map_to(full);
    if (J.is_unit()) throw InputError("conormal of the empty set");
    int nb = full->base_count();
    std::vector<int> wvars;
    if (J.is_zero()) {
        for (int i = 0; i < nb; ++i) wvars.push_back(full->cot_var(i));
        return Ideal::of_vars(full, wvars);
    }
    const auto& gb = J.gb();
    bool coordinate = true;
    std::vector<bool> used(nb, false);
    for (const auto& g : gb) {
        if (g.size() != 1 || g.leading().m.deg != 1) {
            coordinate = false;
            break;
        }
        int v = 0;
        while (g.leading().m[v] == 0) ++v;
        if (v >= nb) throw InputError("closure ideal must involve base variables only");
        used[v] = true;
    }
    if (coordinate) {
        std::vector<int> vars;
        for (int i = 0; i < nb; ++i)
            vars.push_back(used[i] ? full->base_var(i) : full->cot_var(i));
        return Ideal::of_vars(full, vars);
    }
    for (const auto& g : gb)
        if (g.degree_in_mask(full->cot_mask()) > 0) throw InputError("closure ideal must involve base variables only");

    int c = nb - (J.dimension() - full->cot_count());
    Matrix rows;
    for (const auto& g : gb) rows.push_back(gradient(g, nb));
    auto sing = minors(rows, nb, c, -1, full);
    rows.push_back(cotangent_row(full));
    auto border = minors(rows, nb, c + 1, static_cast<int>(rows.size()) - 1, full);
    Ideal C = J.with(border);
    if (sing.empty()) throw InputError("Jacobian of " + variety_str(I) + " has rank below the codimension");
    Rng rng(seed);
    return saturate(C, random_combination(sing, full, rng));
}

bool constant_on_component(const Ideal& I, const Polynomial& f, std::uint64_t seed) {
    Polynomial ff = f.map_to(I.ring());
    if (I.is_zero()) return ff.is_constant();
    for (const auto& c : split_components(I, seed))
        if (c.ideal.reduce(ff).is_constant()) return true;
    return false;
}

Ideal relative_conormal_ideal(const Ideal& I, const Polynomial& f, const Ring& full, std::uint64_t seed) {
    require_cotangent(full);
    Ideal J = I.map_to(full);
    if (J.is_unit()) throw InputError("relative conormal of the empty set");
    int nb = full->base_count();
    Polynomial ff = f.map_to(full);
    Rng rng(seed);

    int c = J.is_zero() ? 0 : nb - (J.dimension() - full->cot_count());
    Matrix rows;
    if (!J.is_zero())
        for (const auto& g : J.gb()) rows.push_back(gradient(g, nb));
    rows.push_back(gradient(ff, nb));
    auto regular = minors(rows, nb, c + 1, -1, full);
    rows.push_back(cotangent_row(full));
    auto border = minors(rows, nb, c + 2, static_cast<int>(rows.size()) - 1, full);

    if (regular.empty() || constant_on_component(J, ff, rng.fork()))
        throw InputError("f is constant on a component of " + variety_str(I));
    Polynomial h = random_combination(regular, full, rng);
    return saturate(J.with(border), h);
}

EnrichedCycle graph_pushforward(const EnrichedCycle& E, const Polynomial& f) {
    if (!E.ring()) return E;
    const Ring& full = E.ring();
    Ring base = full->base_ring();
    EnrichedCycle out(base);
    out.merge_warnings(E);
    Ideal graph = im_df(f, full);
    for (const auto& [key, c] : E.components()) {
        if (!c.prime.contains(graph))
            throw InputError("component " + variety_str(c.prime) + " does not lie in the graph of df");
        out.add(eliminate_to(c.prime, full->cot_mask(), base), c.coeff, c.certified);
    }
    return out;
}

BlowupResult blowup_exceptional(const Ideal& P, const std::vector<Polynomial>& g, std::uint64_t seed) {
    if (g.empty()) throw InputError("blow-up along an empty tuple");
    const Ring& R = P.ring();
    bool all_in = true;
    for (const auto& gi : g) all_in = all_in && P.contains(gi.map_to(R));
    if (all_in) throw InputError("blow-up undefined on component " + variety_str(P));

    std::vector<std::string> us;
    Ring scratch = R;
    for (std::size_t i = 0; i < g.size(); ++i) {
        us.push_back(scratch->fresh_name("u_" + std::to_string(i)));
        scratch = scratch->extended({us.back()});
    }
    BlowupResult out;
    out.ring = R->extended(us);
    Ring Rt = out.ring->extended({out.ring->fresh_name("t_")});
    int t = Rt->nvars() - 1;
    int u0 = R->nvars();

    std::vector<Polynomial> gens;
    for (const auto& p : P.gens()) gens.push_back(p.map_to(Rt));
    for (std::size_t i = 0; i < g.size(); ++i)
        gens.push_back(Polynomial::variable(Rt, u0 + static_cast<int>(i)) -
                       Polynomial::variable(Rt, t) * g[i].map_to(Rt));
    out.rees = eliminate(Ideal(Rt, std::move(gens)), 1u << t).map_to(out.ring);

    std::vector<Polynomial> gg;
    for (const auto& gi : g) gg.push_back(gi.map_to(out.ring));
    Rng rng(seed);
    Ideal E = out.rees.with(gg);
    if (E.is_unit()) return out;
    for (const auto& w : split_components(E, rng.fork())) {
        int chart = -1;
        for (std::size_t i = 0; i < g.size() && chart < 0; ++i)
            if (!w.ideal.contains(Polynomial::variable(out.ring, u0 + static_cast<int>(i))) && !gg[i].is_zero() &&
                !out.rees.contains(gg[i]))
                chart = static_cast<int>(i);
        if (chart < 0) continue;
        long long m = multiplicity_along(out.rees, gg[chart], w.ideal, rng.fork());
        out.exceptional.emplace_back(w.ideal, m);
    }
    return out;
}

}  // namespace levo
