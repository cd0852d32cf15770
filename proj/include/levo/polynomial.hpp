#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "levo/monomial.hpp"
#include "levo/ring.hpp"

namespace levo {

struct Term {
    Monomial m;
    mpq_class c;
};

// Sparse polynomial over Q.  Terms are kept sorted by decreasing grevlex
// order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(Ring ring, const mpq_class& c);
    static Polynomial variable(Ring ring, int i);
    static Polynomial variable(Ring ring, const std::string& name);
    static Polynomial term(Ring ring, const Monomial& m, const mpq_class& c);
    // Sorts and merges arbitrary terms.
    static Polynomial from_terms(Ring ring, std::vector<Term> terms);
    // Trusts the caller: terms already sorted, distinct, nonzero.
    static Polynomial from_sorted(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    mpq_class constant_coeff() const;
    const Term& leading() const { return terms_.front(); }
    const mpq_class& leading_coeff() const { return terms_.front().c; }

    int total_degree() const;
    int degree_in(int v) const;
    // Degree in the variables of `mask`.
    int degree_in_mask(std::uint32_t mask) const;
    bool uses(int v) const { return degree_in(v) > 0; }
    std::uint32_t support_mask() const;
    // Every term of degree at most 1.
    bool is_linear() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const mpq_class& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
    friend Polynomial operator*(const mpq_class& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned k) const;
    Polynomial mul_term(const Monomial& m, const mpq_class& c) const;
    Polynomial derivative(int v) const;

    // Replace variable v by g (same ring).
    Polynomial substitute(int v, const Polynomial& g) const;
    // Ring homomorphism: variable i of this ring maps to images[i] (all in a
    // common target ring).
    Polynomial compose(const std::vector<Polynomial>& images) const;
    // Set variable v to a rational value.
    Polynomial specialize(int v, const mpq_class& value) const;
    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    // Same polynomial in another ring, matching variables by name.
    Polynomial map_to(const Ring& target) const;

    // Leading coefficient 1.
    Polynomial monic() const;
    // Integer coefficients with unit content and positive leading coefficient.
    Polynomial primitive() const;

    // Coefficient of v^k, as a polynomial free of v.
    Polynomial coeff_in(int v, int k) const;
    // Coefficient of the top power of v.
    Polynomial leading_coeff_in(int v) const { return coeff_in(v, degree_in(v)); }

    std::string str() const;
    std::size_t hash() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
};

std::string monomial_str(const Ring& ring, const Monomial& m);

// Exact division; throws InternalError when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);
// Divides when possible; returns false otherwise.
bool try_divide(const Polynomial& f, const Polynomial& g, Polynomial& q);

}  // namespace levo
