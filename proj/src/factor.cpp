#include "levo/factor.hpp"

#include <algorithm>
#include <map>

#include "levo/errors.hpp"
#include "levo/random.hpp"
#include "levo/upoly.hpp"

namespace levo {

namespace {

Polynomial normalize(const Polynomial& p) {
    if (p.is_zero()) return p;
    if (p.is_constant()) return Polynomial::constant(p.ring(), 1);
    return p.primitive();
}

int single_var(const Polynomial& p) {
    std::uint32_t m = p.support_mask();
    if (m == 0 || (m & (m - 1))) return -1;
    return __builtin_ctz(m);
}

upoly::QPoly to_upoly(const Polynomial& f, int v) {
    upoly::QPoly r(std::max(0, f.degree_in(v)) + 1);
    for (const auto& t : f.terms()) r[t.m[v]] += t.c;
    upoly::trim(r);
    return r;
}

Polynomial from_upoly(const upoly::QPoly& a, const Ring& ring, int v) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) t.push_back({Monomial::var(v, static_cast<std::uint16_t>(i)), a[i]});
    return Polynomial::from_terms(ring, std::move(t));
}

// Pseudo-remainder of a by b with respect to v.
Polynomial prem(Polynomial a, const Polynomial& b, int v) {
    int db = b.degree_in(v);
    Polynomial lb = b.leading_coeff_in(v);
    Polynomial x = Polynomial::variable(a.ring(), v);
    int da = a.degree_in(v);
    while (!a.is_zero() && da >= db) {
        Polynomial la = a.leading_coeff_in(v);
        a = lb * a - la * x.pow(da - db) * b;
        da = a.degree_in(v);
    }
    return a;
}

Polynomial truncate(const Polynomial& p, std::uint32_t mask, int D) {
    std::vector<Term> keep;
    for (const auto& t : p.terms()) {
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (mask >> i & 1u) d += t.m[i];
        if (d <= D) keep.push_back(t);
    }
    return Polynomial::from_sorted(p.ring(), std::move(keep));
}

std::vector<Polynomial> factor_squarefree(const Polynomial& g);

std::vector<Polynomial> hensel_factor(const Polynomial& g, int x, const std::vector<int>& others,
                                      const std::vector<mpq_class>& point, const std::vector<upoly::QPoly>& us) {
    // Ring with x followed by shifted variables s_i = y_i - c_i.
    std::vector<std::string> names{"x"};
    for (std::size_t i = 0; i < others.size(); ++i) names.push_back("s" + std::to_string(i));
    Ring R = PolyRing::plain(names);
    std::uint32_t ymask = ((1u << R->nvars()) - 1) & ~1u;

    std::vector<Polynomial> images(g.ring()->nvars(), Polynomial(R));
    images[x] = Polynomial::variable(R, 0);
    for (std::size_t i = 0; i < others.size(); ++i)
        images[others[i]] = Polynomial::variable(R, static_cast<int>(i) + 1) + Polynomial::constant(R, point[i]);
    Polynomial gp = g.compose(images);
    Polynomial lcp = gp.leading_coeff_in(0);
    mpq_class lc0 = lcp.constant_coeff();
    int D = lcp.degree_in_mask(ymask) + gp.degree_in_mask(ymask);

    std::size_t r = us.size();
    std::vector<upoly::QPoly> a(r);
    for (std::size_t i = 0; i < r; ++i) {
        upoly::QPoly Ui{1};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) Ui = upoly::mul(Ui, us[j]);
        upoly::QPoly s, t;
        upoly::ext_gcd(Ui, us[i], s, t);
        a[i] = upoly::mod(s, us[i]);
    }
    std::vector<Polynomial> F;
    for (const auto& u : us) F.push_back(from_upoly(u, R, 0));

    for (int k = 1; k <= D; ++k) {
        Polynomial prod = truncate(lcp, ymask, k);
        for (const auto& f : F) prod = truncate(prod * f, ymask, k);
        Polynomial e = truncate(gp, ymask, k) - prod;
        if (e.is_zero()) continue;
        std::map<std::vector<std::uint16_t>, upoly::QPoly> groups;
        for (const auto& t : e.terms()) {
            std::vector<std::uint16_t> key(t.m.e.begin() + 1, t.m.e.begin() + R->nvars());
            auto& q = groups[key];
            if (q.size() <= t.m[0]) q.resize(t.m[0] + 1);
            q[t.m[0]] += t.c;
        }
        for (auto& [key, q] : groups) {
            upoly::trim(q);
            Monomial mu;
            for (std::size_t i = 0; i < key.size(); ++i) mu.set(static_cast<int>(i) + 1, key[i]);
            upoly::QPoly rhs = upoly::scale(q, 1 / lc0);
            for (std::size_t i = 0; i < r; ++i) {
                upoly::QPoly d = upoly::mod(upoly::mul(rhs, a[i]), us[i]);
                F[i] += from_upoly(d, R, 0).mul_term(mu, 1);
            }
        }
    }

    // Recombination by trial division.
    std::vector<Polynomial> found;
    Polynomial rem = gp;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (std::size_t s = 1; 2 * s <= idx.size();) {
        bool hit = false;
        std::vector<std::size_t> sel(s);
        for (std::size_t i = 0; i < s; ++i) sel[i] = i;
        for (;;) {
            Polynomial lr = rem.leading_coeff_in(0);
            int Dr = lr.degree_in_mask(ymask) + rem.degree_in_mask(ymask);
            Polynomial cand = truncate(lr, ymask, Dr);
            for (auto i : sel) cand = truncate(cand * F[idx[i]], ymask, Dr);
            if (cand.degree_in(0) > 0) {
                cand = divide_exact(cand, content_in(cand, 0));
                Polynomial q;
                if (try_divide(rem, cand, q)) {
                    found.push_back(cand);
                    rem = q;
                    std::vector<std::size_t> rest;
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        if (std::find(sel.begin(), sel.end(), i) == sel.end()) rest.push_back(idx[i]);
                    idx = rest;
                    hit = true;
                    break;
                }
            }
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && sel[i] == idx.size() - s + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (std::size_t j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (!rem.is_constant()) found.push_back(rem);

    std::vector<Polynomial> back(R->nvars(), Polynomial(g.ring()));
    back[0] = Polynomial::variable(g.ring(), x);
    for (std::size_t i = 0; i < others.size(); ++i)
        back[i + 1] = Polynomial::variable(g.ring(), others[i]) - Polynomial::constant(g.ring(), point[i]);
    std::vector<Polynomial> out;
    for (const auto& f : found) out.push_back(normalize(f.compose(back)));
    return out;
}

std::vector<Polynomial> factor_squarefree(const Polynomial& g) {
    if (g.is_constant()) return {};
    int sv = single_var(g);
    if (sv >= 0) {
        std::vector<Polynomial> out;
        for (const auto& z : upoly::factor_squarefree(upoly::primitive(to_upoly(g, sv))))
            out.push_back(normalize(from_upoly(upoly::to_q(z), g.ring(), sv)));
        return out;
    }
    std::vector<int> vars;
    for (int i = 0; i < g.ring()->nvars(); ++i)
        if (g.uses(i)) vars.push_back(i);
    int x = vars[0];
    for (int v : vars)
        if (g.degree_in(v) < g.degree_in(x)) x = v;
    Polynomial c = content_in(g, x);
    if (!c.is_constant()) {
        auto a = factor_squarefree(c);
        auto b = factor_squarefree(divide_exact(g, c));
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    if (g.degree_in(x) == 1) return {normalize(g)};

    std::vector<int> others;
    for (int v : vars)
        if (v != x) others.push_back(v);
    Polynomial lc = g.leading_coeff_in(x);
    Rng rng(0xfac7 + g.size());
    for (int attempt = 0; attempt < 200; ++attempt) {
        int range = 2 + attempt / 4;
        std::vector<mpq_class> point;
        Polynomial gu = g, lu = lc;
        for (int v : others) {
            mpq_class c0(static_cast<long>(rng.uniform(-range, range)));
            point.push_back(c0);
            gu = gu.specialize(v, c0);
            lu = lu.specialize(v, c0);
        }
        if (lu.is_zero()) continue;
        upoly::QPoly uu = to_upoly(gu, x);
        if (upoly::gcd(uu, upoly::derivative(uu)).size() > 1) continue;
        auto zf = upoly::factor_squarefree(upoly::primitive(uu));
        if (zf.size() == 1) return {normalize(g)};
        std::vector<upoly::QPoly> us;
        for (const auto& z : zf) us.push_back(upoly::monic(upoly::to_q(z)));
        return hensel_factor(g, x, others, point, us);
    }
    throw InternalError("no good evaluation point for factorization of " + g.str());
}

}  // namespace

Polynomial content_in(const Polynomial& f, int v) {
    if (f.is_zero()) return f;
    if (!f.uses(v)) return normalize(f);
    Polynomial g(f.ring());
    for (int k = f.degree_in(v); k >= 0; --k) {
        Polynomial c = f.coeff_in(v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? normalize(c) : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

namespace {

mpz_class max_coeff(const Polynomial& p) {
    mpz_class m = 0;
    for (const auto& t : p.terms()) m = std::max<mpz_class>(m, abs(t.c.get_num()));
    return m;
}

mpz_class int_content(const Polynomial& p) {
    mpz_class g = 0;
    for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    return g;
}

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b);

// Heuristic gcd over Z: evaluate the top variable at a large integer, recurse,
// and recover the gcd from the xi-adic digits.  Inputs and output have
// integer coefficients; the result includes the integer content.
bool heu_gcd(const Polynomial& a, const Polynomial& b, Polynomial& g, int depth) {
    Ring ring = a.ring();
    if (a.is_constant() || b.is_constant()) {
        mpz_class c = 0;
        mpz_class ca = int_content(a), cb = int_content(b);
        mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        g = Polynomial::constant(ring, mpq_class(c));
        return true;
    }
    if (depth > 12) return false;
    std::uint32_t mask = a.support_mask() | b.support_mask();
    int v = 31 - __builtin_clz(mask);
    mpz_class ca = int_content(a), cb = int_content(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Polynomial pa = a * mpq_class(1, ca), pb = b * mpq_class(1, cb);
    mpz_class xi = 2 * std::min(max_coeff(pa), max_coeff(pb)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Polynomial A = pa.specialize(v, mpq_class(xi)), B = pb.specialize(v, mpq_class(xi));
        Polynomial G;
        if (!A.is_zero() && !B.is_zero() && heu_gcd(A, B, G, depth + 1)) {
            // xi-adic reconstruction.
            std::vector<Term> terms;
            Polynomial rest = G;
            mpz_class half = xi / 2;
            for (int i = 0; !rest.is_zero() && i < 200; ++i) {
                std::vector<Term> digit;
                for (const auto& t : rest.terms()) {
                    mpz_class c = t.c.get_num();
                    mpz_class d;
                    mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
                    if (d > half) d -= xi;
                    if (d != 0) {
                        digit.push_back({t.m, mpq_class(d)});
                        Monomial m = t.m;
                        m.set(v, static_cast<std::uint16_t>(i));
                        terms.push_back({m, mpq_class(d)});
                    }
                }
                Polynomial dp = Polynomial::from_terms(ring, std::move(digit));
                rest = (rest - dp) * mpq_class(1, xi);
            }
            if (rest.is_zero()) {
                Polynomial cand = Polynomial::from_terms(ring, std::move(terms));
                if (!cand.is_zero()) {
                    cand = cand.primitive();
                    Polynomial q;
                    if (try_divide(pa, cand, q) && try_divide(pb, cand, q)) {
                        g = cand * mpq_class(cg);
                        return true;
                    }
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return false;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
    Polynomial pa = a.primitive(), pb = b.primitive();
    std::uint32_t mask = pa.support_mask() | pb.support_mask();
    if ((mask & (mask - 1)) == 0) {
        int v = __builtin_ctz(mask);
        auto g = upoly::gcd(to_upoly(pa, v), to_upoly(pb, v));
        return normalize(from_upoly(g, a.ring(), v));
    }
    Polynomial q;
    if (try_divide(pa, pb, q)) return pb;
    if (try_divide(pb, pa, q)) return pa;
    Polynomial g;
    if (heu_gcd(pa, pb, g, 0)) return normalize(g);
    return prs_gcd(pa, pb);
}

namespace {

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b) {
    std::uint32_t mask = a.support_mask() | b.support_mask();
    int v = 31 - __builtin_clz(mask);
    if (!a.uses(v)) return poly_gcd(a, content_in(b, v));
    if (!b.uses(v)) return poly_gcd(content_in(a, v), b);
    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial c = poly_gcd(ca, cb);
    Polynomial pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    for (;;) {
        Polynomial r = prem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            pb = Polynomial::constant(a.ring(), 1);
            break;
        }
        r = divide_exact(r, content_in(r, v));
        pa = pb;
        pb = r;
    }
    return normalize(c * pb);
}

}  // namespace

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f0) {
    std::vector<std::pair<Polynomial, int>> out;
    if (f0.is_constant()) return out;
    Polynomial f = normalize(f0);
    int v = __builtin_ctz(f.support_mask());
    Polynomial c = content_in(f, v);
    Polynomial pp = divide_exact(f, c);
    if (pp.degree_in(v) > 0) {
        Polynomial d1 = pp.derivative(v);
        Polynomial a0 = poly_gcd(pp, d1);
        Polynomial b = divide_exact(pp, a0);
        Polynomial cc = divide_exact(d1, a0);
        Polynomial d = cc - b.derivative(v);
        for (int i = 1; !b.is_constant(); ++i) {
            Polynomial a = poly_gcd(b, d);
            if (!a.is_constant()) out.emplace_back(a, i);
            b = divide_exact(b, a);
            cc = divide_exact(d, a);
            d = cc - b.derivative(v);
        }
    }
    if (!c.is_constant()) {
        auto rest = squarefree_decomposition(c);
        out.insert(out.end(), rest.begin(), rest.end());
    }
    return out;
}

Factorization factor(const Polynomial& f) {
    Factorization res;
    if (f.is_zero()) throw InternalError("factorization of zero");
    if (f.is_constant()) {
        res.unit = f.constant_coeff();
        return res;
    }
    Ring ring = f.ring();
    // Monomial content.
    Monomial mc = f.terms()[0].m;
    for (const auto& t : f.terms()) mc = Monomial::gcd(mc, t.m);
    Polynomial g = f;
    if (!mc.is_one()) {
        g = divide_exact(f, Polynomial::term(ring, mc, 1));
        for (int i = 0; i < kMaxVars; ++i)
            if (mc[i]) res.factors.emplace_back(Polynomial::variable(ring, i), mc[i]);
    }
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
        for (const auto& h : factor_squarefree(part)) {
            auto it = std::find_if(res.factors.begin(), res.factors.end(),
                                   [&](const auto& e) { return e.first == h; });
            if (it != res.factors.end()) it->second += mult;
            else res.factors.emplace_back(h, mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
        return a.first.str() < b.first.str();
    });
    Polynomial prod = Polynomial::constant(ring, 1);
    for (const auto& [h, m] : res.factors) prod = prod * h.pow(m);
    Polynomial q;
    if (!try_divide(f, prod, q) || !q.is_constant())
        throw InternalError("factorization check failed for " + f.str());
    res.unit = q.constant_coeff();
    return res;
}

std::vector<Polynomial> irreducible_factors(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (const auto& [h, m] : factor(f).factors) out.push_back(h);
    return out;
}

bool is_irreducible(const Polynomial& f) {
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace levo
