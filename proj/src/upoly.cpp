#include "levo/upoly.hpp"

#include <algorithm>

#include "levo/errors.hpp"
#include "levo/random.hpp"

namespace levo::upoly {

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
    QPoly r = a;
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.empty()) throw InternalError("univariate division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
    mpq_class inv = 1 / b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t s = r.size() - b.size();
        mpq_class c = r.back() * inv;
        q[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[s + i] -= c * b[i];
        r.pop_back();
        trim(r);
    }
    trim(q);
}

QPoly mod(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

QPoly derivative(const QPoly& a) {
    QPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

QPoly monic(const QPoly& a) {
    if (a.empty()) return a;
    return scale(a, 1 / a.back());
}

QPoly gcd(const QPoly& a0, const QPoly& b0) {
    QPoly a = a0, b = b0;
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

QPoly ext_gcd(const QPoly& a0, const QPoly& b0, QPoly& s, QPoly& t) {
    QPoly r0 = a0, r1 = b0, s0{1}, s1, t0, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        s.clear();
        t.clear();
        return r0;
    }
    mpq_class inv = 1 / r0.back();
    s = scale(s0, inv);
    t = scale(t0, inv);
    return scale(r0, inv);
}

ZPoly primitive(const QPoly& a0) {
    QPoly a = a0;
    trim(a);
    if (a.empty()) return {};
    mpz_class den = 1, g = 0;
    for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    for (const auto& c : a) z.push_back(c.get_num() * (den / c.get_den()));
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

QPoly to_q(const ZPoly& a) {
    QPoly r;
    for (const auto& c : a) r.emplace_back(c);
    return r;
}

namespace {

// ---- arithmetic in F_p[x] -------------------------------------------------

using u64 = std::uint64_t;
using FPoly = std::vector<u64>;

struct Fp {
    u64 p;

    void trim(FPoly& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    u64 mulm(u64 a, u64 b) const { return a * b % p; }
    u64 powm(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mulm(r, a);
            a = mulm(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return powm(a, p - 2); }

    FPoly from_z(const ZPoly& a) const {
        FPoly r;
        mpz_class pp(static_cast<unsigned long>(p));
        for (const auto& c : a) {
            mpz_class m = c % pp;
            if (m < 0) m += pp;
            r.push_back(m.get_ui());
        }
        trim(r);
        return r;
    }

    FPoly sub(const FPoly& a, const FPoly& b) const {
        FPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
        trim(r);
        return r;
    }
    FPoly add(const FPoly& a, const FPoly& b) const {
        FPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
        trim(r);
        return r;
    }
    FPoly mul(const FPoly& a, const FPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    void divmod(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r) const {
        r = a;
        trim(r);
        q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
        u64 inv_lead = inv(b.back());
        while (!r.empty() && r.size() >= b.size()) {
            std::size_t s = r.size() - b.size();
            u64 c = mulm(r.back(), inv_lead);
            q[s] = c;
            for (std::size_t i = 0; i < b.size(); ++i) r[s + i] = (r[s + i] + p - mulm(c, b[i])) % p;
            r.pop_back();
            trim(r);
        }
        trim(q);
    }
    FPoly mod(const FPoly& a, const FPoly& b) const {
        FPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    FPoly div(const FPoly& a, const FPoly& b) const {
        FPoly q, r;
        divmod(a, b, q, r);
        return q;
    }
    FPoly monic(const FPoly& a) const {
        if (a.empty()) return a;
        u64 c = inv(a.back());
        FPoly r = a;
        for (auto& x : r) x = mulm(x, c);
        return r;
    }
    FPoly gcd(FPoly a, FPoly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            FPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // s*a + t*b = 1 for coprime a, b.
    void bezout(const FPoly& a, const FPoly& b, FPoly& s, FPoly& t) const {
        FPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
        while (!r1.empty()) {
            FPoly q, r;
            divmod(r0, r1, q, r);
            FPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        u64 c = inv(r0.back());
        s = s0;
        t = t0;
        for (auto& x : s) x = mulm(x, c);
        for (auto& x : t) x = mulm(x, c);
    }
    FPoly derivative(const FPoly& a) const {
        FPoly r;
        for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mulm(a[i], i % p));
        trim(r);
        return r;
    }
    FPoly powmod(FPoly base, const mpz_class& e, const FPoly& m) const {
        FPoly r{1};
        base = mod(base, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = mod(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
        }
        return r;
    }

    // Distinct-degree then equal-degree factorization of a monic squarefree g.
    std::vector<FPoly> factor(FPoly g, Rng& rng) const {
        std::vector<FPoly> out;
        FPoly h{0, 1};
        const FPoly x{0, 1};
        mpz_class pz(static_cast<unsigned long>(p));
        for (int d = 1; 2 * d <= static_cast<int>(g.size()) - 1; ++d) {
            h = powmod(h, pz, g);
            FPoly gd = gcd(g, sub(h, x));
            if (gd.size() > 1) {
                edf(gd, d, rng, out);
                g = div(g, gd);
                h = mod(h, g);
            }
        }
        if (g.size() > 1) out.push_back(monic(g));
        return out;
    }

    void edf(const FPoly& g, int d, Rng& rng, std::vector<FPoly>& out) const {
        int n = static_cast<int>(g.size()) - 1;
        if (n == d) {
            out.push_back(monic(g));
            return;
        }
        mpz_class pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
        mpz_class e = (pd - 1) / 2;
        for (;;) {
            FPoly a(n);
            for (auto& c : a) c = rng.next() % p;
            trim(a);
            if (a.size() < 2) continue;
            FPoly b = sub(powmod(a, e, g), FPoly{1});
            FPoly u = gcd(g, b);
            if (u.size() > 1 && u.size() < g.size()) {
                edf(u, d, rng, out);
                edf(div(g, u), d, rng, out);
                return;
            }
        }
    }
};

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- Hensel lifting over Z/p^k ---------------------------------------------

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void zreduce(ZPoly& a, const mpz_class& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(a);
}

ZPoly to_z(const FPoly& a) {
    ZPoly r;
    for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

// Lift f = lc * g * h (mod p), g and h monic, to the same relation modulo
// p^k.  f is taken with integer coefficients.
void hensel_two(const Fp& F, const ZPoly& f, const FPoly& g0, const FPoly& h0, int k, ZPoly& G, ZPoly& H) {
    mpz_class pz(static_cast<unsigned long>(F.p));
    FPoly s, t;
    F.bezout(g0, h0, s, t);
    G = to_z(g0);
    H = to_z(h0);
    mpz_class lc = f.back();
    mpz_class pj = pz;
    u64 lc_inv = F.inv(F.from_z(ZPoly{lc})[0]);
    for (int j = 1; j < k; ++j) {
        ZPoly prod = zmul(G, H);
        ZPoly e(std::max(f.size(), prod.size()), mpz_class(0));
        for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
        for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= lc * prod[i];
        for (auto& c : e) {
            if (c % pj != 0) throw InternalError("Hensel lifting lost congruence");
            c /= pj;
        }
        trim(e);
        FPoly ep = F.from_z(e);
        for (auto& c : ep) c = F.mulm(c, lc_inv);
        // sigma*h + tau*g = ep with deg sigma < deg g.
        FPoly q, sigma;
        F.divmod(F.mul(t, ep), g0, q, sigma);
        FPoly tau = F.add(F.mul(s, ep), F.mul(q, h0));
        mpz_class next = pj * pz;
        ZPoly sg = to_z(sigma), tg = to_z(tau);
        G.resize(std::max(G.size(), sg.size()), mpz_class(0));
        H.resize(std::max(H.size(), tg.size()), mpz_class(0));
        for (std::size_t i = 0; i < sg.size(); ++i) G[i] += pj * sg[i];
        for (std::size_t i = 0; i < tg.size(); ++i) H[i] += pj * tg[i];
        zreduce(G, next);
        zreduce(H, next);
        pj = next;
    }
}

std::vector<ZPoly> hensel_multi(const Fp& F, const ZPoly& f, std::vector<FPoly> us, int k, const mpz_class& m) {
    if (us.size() == 1) {
        // f = lc * u: return the monic associate mod p^k.
        mpz_class inv;
        mpz_class lc = f.back() % m;
        if (lc < 0) lc += m;
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
        ZPoly r = f;
        for (auto& c : r) c *= inv;
        zreduce(r, m);
        return {r};
    }
    FPoly g0 = us[0];
    FPoly h0{1};
    for (std::size_t i = 1; i < us.size(); ++i) h0 = F.mul(h0, us[i]);
    ZPoly G, H;
    hensel_two(F, f, g0, h0, k, G, H);
    std::vector<FPoly> rest(us.begin() + 1, us.end());
    auto tail = hensel_multi(F, H, rest, k, m);
    std::vector<ZPoly> out{G};
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

mpz_class max_abs(const ZPoly& f) {
    mpz_class m = 0;
    for (const auto& c : f) m = std::max<mpz_class>(m, abs(c));
    return m;
}

bool divides_over_q(const ZPoly& f, const ZPoly& g, ZPoly& quot) {
    QPoly q, r;
    divmod(to_q(f), to_q(g), q, r);
    if (!r.empty()) return false;
    quot.clear();
    for (const auto& c : q) {
        if (c.get_den() != 1) return false;
        quot.push_back(c.get_num());
    }
    return true;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f0) {
    ZPoly f = f0;
    trim(f);
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    // Pick the prime giving the fewest modular factors among a few candidates.
    Rng rng(0x5eed);
    Fp best{0};
    std::vector<FPoly> best_factors;
    int found = 0;
    for (u64 p = 11; found < 5 && p < 100000; p += 2) {
        if (!is_prime(p)) continue;
        Fp F{p};
        FPoly fp = F.from_z(f);
        if (static_cast<int>(fp.size()) - 1 != n) continue;
        if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
        auto facs = F.factor(F.monic(fp), rng);
        ++found;
        if (best.p == 0 || facs.size() < best_factors.size()) {
            best = F;
            best_factors = facs;
        }
        if (best_factors.size() == 1) break;
    }
    if (best.p == 0) throw InternalError("no suitable prime for factorization");
    if (best_factors.size() == 1) return {f};

    // Coefficient bound for factors of lc*f.
    mpz_class bound = max_abs(f) * abs(f.back()) * (n + 1);
    bound <<= n + 1;
    mpz_class pz(static_cast<unsigned long>(best.p)), m = pz;
    int k = 1;
    while (m <= bound) {
        m *= pz;
        ++k;
    }
    std::vector<ZPoly> lifted = hensel_multi(best, f, best_factors, k, m);

    std::vector<ZPoly> out;
    mpz_class half = m / 2;
    std::vector<int> idx(lifted.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    for (std::size_t s = 1; 2 * s <= idx.size();) {
        bool hit = false;
        std::vector<int> sel(s);
        for (std::size_t i = 0; i < s; ++i) sel[i] = static_cast<int>(i);
        while (true) {
            ZPoly cand{f.back()};
            for (int i : sel) {
                cand = zmul(cand, lifted[idx[i]]);
                zreduce(cand, m);
            }
            for (auto& c : cand)
                if (c > half) c -= m;
            ZPoly g = primitive(to_q(cand)), q;
            if (g.size() > 1 && divides_over_q(f, g, q)) {
                out.push_back(g);
                f = q;
                std::vector<int> rest;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    if (std::find(sel.begin(), sel.end(), static_cast<int>(i)) == sel.end()) rest.push_back(idx[i]);
                idx = rest;
                hit = true;
                break;
            }
            // Next combination.
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && sel[i] == static_cast<int>(idx.size() - s + i)) --i;
            if (i < 0) break;
            ++sel[i];
            for (std::size_t j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (f.size() > 1) out.push_back(primitive(to_q(f)));
    return out;
}

std::vector<std::pair<ZPoly, int>> factor(const QPoly& f0) {
    QPoly f = f0;
    trim(f);
    std::vector<std::pair<ZPoly, int>> out;
    if (f.size() <= 1) return out;
    // Yun's squarefree decomposition.
    QPoly a = gcd(f, derivative(f));
    QPoly b, c, rem;
    divmod(f, a, b, rem);
    divmod(derivative(f), a, c, rem);
    QPoly d = sub(c, derivative(b));
    for (int i = 1; b.size() > 1; ++i) {
        QPoly g = gcd(b, d);
        if (g.size() > 1)
            for (auto& z : factor_squarefree(primitive(g))) out.emplace_back(z, i);
        QPoly nb, nc;
        divmod(b, g, nb, rem);
        divmod(d, g, nc, rem);
        b = nb;
        d = sub(nc, derivative(b));
    }
    return out;
}

}  // namespace levo::upoly
