#include "levo/ideal.hpp"

#include <algorithm>

#include "levo/errors.hpp"

namespace levo {

namespace {

std::uint32_t full_mask(const Ring& r) {
    return r->nvars() >= 32 ? ~0u : ((1u << r->nvars()) - 1);
}

struct TRing {
    Ring ring;
    int t;
};

TRing with_t(const Ring& r) {
    Ring e = r->extended({r->fresh_name("t_")});
    return {e, e->nvars() - 1};
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_)) throw InputError("ideal generator from a different ring");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::of_vars(const Ring& ring, const std::vector<int>& vars) {
    std::vector<Polynomial> g;
    for (int v : vars) g.push_back(Polynomial::variable(ring, v));
    return Ideal(ring, std::move(g));
}

const Ideal::Cache& Ideal::cache() const {
    if (!cache_) {
        auto c = std::make_shared<Cache>();
        c->gb = groebner_basis(gens_, MonomialOrder::grevlex());
        for (auto& g : c->gb) g = g.map_to(ring_);
        cache_ = c;
    }
    return *cache_;
}

const std::vector<Polynomial>& Ideal::gb() const { return cache().gb; }

std::vector<Monomial> Ideal::leading_monomials() const {
    std::vector<Monomial> lms;
    for (const auto& g : gb()) lms.push_back(g.leading().m);
    return lms;
}

bool Ideal::is_unit() const {
    const auto& g = gb();
    return g.size() == 1 && g[0].is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

Polynomial Ideal::reduce(const Polynomial& p) const { return normal_form(p, gb(), MonomialOrder::grevlex()); }

bool Ideal::contains(const Polynomial& p) const {
    if (p.is_zero()) return true;
    return reduce(p).is_zero();
}

bool Ideal::contains(const Ideal& j) const {
    for (const auto& g : j.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::operator==(const Ideal& o) const {
    const auto& a = gb();
    const auto& b = o.gb();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

int Ideal::dimension() const {
    auto& c = const_cast<Cache&>(cache());
    if (c.dim == -2) c.dim = dimension_from_leading(leading_monomials(), ring_->nvars(), &c.indep);
    return c.dim;
}

std::vector<int> Ideal::independent_set() const {
    dimension();
    return cache().indep;
}

long long Ideal::vdim() const { return count_standard_monomials(leading_monomials(), full_mask(ring_)); }

Ideal Ideal::operator+(const Ideal& o) const {
    std::vector<Polynomial> g = gens_;
    for (const auto& p : o.gens_) g.push_back(p.map_to(ring_));
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator+(const Polynomial& p) const { return with({p}); }

Ideal Ideal::with(const std::vector<Polynomial>& ps) const {
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), ps.begin(), ps.end());
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::map_to(const Ring& target) const {
    std::vector<Polynomial> g;
    for (const auto& p : gens_) g.push_back(p.map_to(target));
    return Ideal(target, std::move(g));
}

Ideal Ideal::canonical() const {
    std::vector<Polynomial> g = gb();
    std::stable_sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return MonomialOrder::grevlex().greater(a.leading().m, b.leading().m);
    });
    Ideal r(ring_, std::move(g));
    r.cache_ = cache_;
    return r;
}

std::string Ideal::key() const {
    std::string k;
    Ideal c = canonical();
    for (const auto& g : c.gens()) {
        if (!k.empty()) k += ", ";
        k += g.str();
    }
    return k;
}

std::vector<std::string> Ideal::gen_strings() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.str());
    return out;
}

std::string Ideal::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].str();
    }
    return s + ")";
}

Ideal eliminate(const Ideal& I, std::uint32_t drop) {
    if (drop == 0) return I;
    auto g = groebner_basis(I.gens(), MonomialOrder::block(drop));
    std::vector<Polynomial> keep;
    for (auto& p : g)
        if ((p.support_mask() & drop) == 0) keep.push_back(p.map_to(I.ring()));
    return Ideal(I.ring(), std::move(keep));
}

Ideal eliminate_to(const Ideal& I, std::uint32_t drop, const Ring& sub) {
    return eliminate(I, drop).map_to(sub);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (I.is_zero() || J.is_zero()) return Ideal(I.ring());
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    auto [R, t] = with_t(I.ring());
    Polynomial T = Polynomial::variable(R, t);
    Polynomial one_minus = Polynomial::constant(R, 1) - T;
    std::vector<Polynomial> g;
    for (const auto& p : I.gens()) g.push_back(T * p.map_to(R));
    for (const auto& p : J.gens()) g.push_back(one_minus * p.map_to(R));
    Ideal E = eliminate(Ideal(R, std::move(g)), 1u << t);
    return E.map_to(I.ring());
}

Ideal intersect(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw InternalError("intersection of no ideals");
    Ideal r = ideals[0];
    for (std::size_t i = 1; i < ideals.size(); ++i) r = intersect(r, ideals[i]);
    return r;
}

Ideal colon(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) throw InputError("colon by the zero polynomial");
    if (g.is_constant()) return I;
    Ideal K = intersect(I, Ideal(I.ring(), {g.map_to(I.ring())}));
    std::vector<Polynomial> q;
    for (const auto& p : K.gens()) q.push_back(divide_exact(p, g.map_to(I.ring())));
    return Ideal(I.ring(), std::move(q));
}

Ideal saturate(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) throw InputError("saturation by the zero polynomial");
    if (g.is_constant() || I.is_zero()) return I;
    if (I.is_unit()) return I;
    auto [R, t] = with_t(I.ring());
    std::vector<Polynomial> gens;
    for (const auto& p : I.gens()) gens.push_back(p.map_to(R));
    gens.push_back(Polynomial::constant(R, 1) - Polynomial::variable(R, t) * g.map_to(R));
    return eliminate(Ideal(R, std::move(gens)), 1u << t).map_to(I.ring());
}

Ideal saturate_by_colon(const Ideal& I, const Polynomial& g) {
    Ideal cur = I;
    for (;;) {
        Ideal next = colon(cur, g);
        if (next == cur) return cur;
        cur = next;
    }
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    std::vector<Ideal> parts;
    for (const auto& g : J.gens()) {
        if (g.is_constant()) return I;
        parts.push_back(saturate(I, g));
    }
    if (parts.empty()) return Ideal::unit(I.ring());
    return intersect(parts);
}

bool radical_member(const Polynomial& g, const Ideal& I) {
    if (I.contains(g)) return true;
    auto [R, t] = with_t(I.ring());
    std::vector<Polynomial> gens;
    for (const auto& p : I.gens()) gens.push_back(p.map_to(R));
    gens.push_back(Polynomial::constant(R, 1) - Polynomial::variable(R, t) * g.map_to(R));
    return Ideal(R, std::move(gens)).is_unit();
}

bool radical_contains(const Ideal& I, const Ideal& J) {
    for (const auto& g : J.gens())
        if (!radical_member(g, I)) return false;
    return true;
}

bool same_radical(const Ideal& I, const Ideal& J) { return radical_contains(I, J) && radical_contains(J, I); }

Ideal product(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> g;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) g.push_back(a * b.map_to(I.ring()));
    return Ideal(I.ring(), std::move(g));
}

Ideal power(const Ideal& I, int k) {
    Ideal r = Ideal::unit(I.ring());
    for (int i = 0; i < k; ++i) r = Ideal(I.ring(), product(r, I).gb());
    return r;
}

}  // namespace levo
