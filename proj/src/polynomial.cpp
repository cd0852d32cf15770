#include "levo/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "levo/errors.hpp"

namespace levo {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

bool term_greater(const Term& a, const Term& b) { return kGrevlex.greater(a.m, b.m); }

// a + s*b for sorted term lists.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = kGrevlex.compare(a[i].m, b[j].m);
        if (c > 0) {
            r.push_back(a[i++]);
        } else if (c < 0) {
            r.push_back(b[j++]);
            if (sign < 0) r.back().c = -r.back().c;
        } else {
            mpq_class s = sign > 0 ? mpq_class(a[i].c + b[j].c) : mpq_class(a[i].c - b[j].c);
            if (s != 0) r.push_back({a[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring())) throw InputError("polynomial ring mismatch");
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, const mpq_class& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

Polynomial Polynomial::variable(Ring ring, int i) {
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::var(i), mpq_class(1)});
    return p;
}

Polynomial Polynomial::variable(Ring ring, const std::string& name) {
    int i = ring->index(name);
    if (i < 0) throw InputError("unknown variable '" + name + "'");
    return variable(std::move(ring), i);
}

Polynomial Polynomial::term(Ring ring, const Monomial& m, const mpq_class& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    Polynomial p(std::move(ring));
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) p.terms_.back().c += t.c;
        else p.terms_.push_back(std::move(t));
    }
    p.terms_.erase(std::remove_if(p.terms_.begin(), p.terms_.end(), [](const Term& t) { return t.c == 0; }),
                   p.terms_.end());
    return p;
}

Polynomial Polynomial::from_sorted(Ring ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

mpq_class Polynomial::constant_coeff() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return 0;
}

int Polynomial::total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().m.deg);
}

int Polynomial::degree_in(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.m[v]);
    return d;
}

int Polynomial::degree_in_mask(std::uint32_t mask) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) {
        int s = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (mask >> i & 1u) s += t.m[i];
        d = std::max(d, s);
    }
    return d;
}

std::uint32_t Polynomial::support_mask() const {
    std::uint32_t m = 0;
    for (const auto& t : terms_) m |= t.m.support_mask();
    return m;
}

bool Polynomial::is_linear() const { return total_degree() <= 1; }

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (!ring_) ring_ = o.ring_;
    check_same(*this, o);
    terms_ = merge(terms_, o.terms_, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (!ring_) ring_ = o.ring_;
    check_same(*this, o);
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_ ? a.ring_ : b.ring_);
    check_same(a, b);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].m, b.terms_[0].c);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].m, a.terms_[0].c);
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) acc.push_back({s.m * t.m, s.c * t.c});
    return Polynomial::from_terms(a.ring_, std::move(acc));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const mpq_class& c) {
    if (c == 0) terms_.clear();
    else
        for (auto& t : terms_) t.c *= c;
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    if (!terms_.empty() && !same_ring(ring_, o.ring_)) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(ring_, 1);
    Polynomial b = *this;
    while (k) {
        if (k & 1u) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const mpq_class& c) const {
    Polynomial p(ring_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.m * m, t.c * c});
    return p;
}

Polynomial Polynomial::derivative(int v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (!t.m[v]) continue;
        Monomial m = t.m;
        m.set(v, t.m[v] - 1);
        out.push_back({m, t.c * t.m[v]});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(int v, const Polynomial& g) const {
    int d = degree_in(v);
    if (d <= 0) return *this;
    std::vector<Polynomial> powers{constant(ring_, 1)};
    for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * g);
    std::vector<Polynomial> parts(d + 1, Polynomial(ring_));
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& t : terms_) {
        Monomial m = t.m;
        int k = m[v];
        m.set(v, 0);
        buckets[k].push_back({m, t.c});
    }
    Polynomial r(ring_);
    for (int k = 0; k <= d; ++k) {
        if (buckets[k].empty()) continue;
        r += from_terms(ring_, std::move(buckets[k])) * powers[k];
    }
    return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (images.size() < static_cast<std::size_t>(ring_ ? ring_->nvars() : 0))
        throw InternalError("compose: missing images");
    Ring target = images.empty() ? ring_ : images[0].ring();
    Polynomial r(target);
    // Cache powers per variable.
    std::vector<std::vector<Polynomial>> pw(images.size());
    for (const auto& t : terms_) {
        Polynomial acc = constant(target, t.c);
        for (int i = 0; i < ring_->nvars(); ++i) {
            int k = t.m[i];
            if (!k) continue;
            auto& cache = pw[i];
            if (cache.empty()) cache.push_back(constant(target, 1));
            while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
            acc = acc * cache[k];
        }
        r += acc;
    }
    return r;
}

Polynomial Polynomial::specialize(int v, const mpq_class& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = t.m;
        int k = m[v];
        m.set(v, 0);
        mpq_class c = t.c;
        for (int i = 0; i < k; ++i) c *= value;
        out.push_back({m, c});
    }
    return from_terms(ring_, std::move(out));
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
    mpq_class s = 0;
    for (const auto& t : terms_) {
        mpq_class c = t.c;
        for (int i = 0; i < kMaxVars; ++i)
            for (int k = 0; k < t.m[i]; ++k) c *= point.at(i);
        s += c;
    }
    return s;
}

Polynomial Polynomial::map_to(const Ring& target) const {
    if (same_ring(ring_, target)) {
        Polynomial p = *this;
        p.ring_ = target;
        return p;
    }
    std::vector<int> where(ring_ ? ring_->nvars() : 0, -1);
    for (int i = 0; i < static_cast<int>(where.size()); ++i) where[i] = target->index(ring_->name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (int i = 0; i < static_cast<int>(where.size()); ++i) {
            if (!t.m[i]) continue;
            if (where[i] < 0) throw InternalError("map_to: variable '" + ring_->name(i) + "' missing in target");
            m.set(where[i], t.m[i]);
        }
        out.push_back({m, t.c});
    }
    return from_terms(target, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    mpq_class inv = 1 / leading_coeff();
    Polynomial p = *this;
    p *= inv;
    return p;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    mpz_class den = 1, num = 0;
    for (const auto& t : terms_) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
    }
    for (const auto& t : terms_) {
        mpz_class v = t.c.get_num() * (den / t.c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    if (leading_coeff() < 0) scale = -scale;
    Polynomial p = *this;
    p *= scale;
    return p;
}

Polynomial Polynomial::coeff_in(int v, int k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.m[v] != k) continue;
        Monomial m = t.m;
        m.set(v, 0);
        out.push_back({m, t.c});
    }
    return from_terms(ring_, std::move(out));
}

std::string monomial_str(const Ring& ring, const Monomial& m) {
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += ring ? ring->name(i) : "x" + std::to_string(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class c = t.c;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (t.m.is_one()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << '*';
            os << monomial_str(ring_, t.m);
        }
    }
    return os.str();
}

std::size_t Polynomial::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h = h * 31 + t.m.hash();
        h = h * 31 + std::hash<std::string>{}(t.c.get_str());
    }
    return h;
}

bool try_divide(const Polynomial& f, const Polynomial& g, Polynomial& q) {
    if (g.is_zero()) throw InternalError("division by zero polynomial");
    q = Polynomial(f.ring());
    Polynomial r = f;
    const Term& lg = g.leading();
    std::vector<Term> qt;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!lg.m.divides(lr.m)) return false;
        Monomial m = lr.m / lg.m;
        mpq_class c = lr.c / lg.c;
        qt.push_back({m, c});
        r -= g.mul_term(m, c);
    }
    q = Polynomial::from_sorted(f.ring(), std::move(qt));
    return true;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    Polynomial q;
    if (!try_divide(f, g, q)) throw InternalError("inexact polynomial division");
    return q;
}

}  // namespace levo
