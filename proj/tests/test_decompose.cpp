#include <gtest/gtest.h>

#include <set>

#include "levo/decompose.hpp"
#include "levo/errors.hpp"
#include "levo/parse.hpp"
#include "levo/random.hpp"

using namespace levo;

namespace {

Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

Ideal I(const Ring& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> g;
    for (auto s : gens) g.push_back(P(r, s));
    return Ideal(r, g);
}

std::set<std::string> keys(const std::vector<PrimeComponent>& cs) {
    std::set<std::string> k;
    for (const auto& c : cs) k.insert(c.ideal.key());
    return k;
}

}  // namespace

TEST(Split, ProductOfVariables) {
    Ring r = PolyRing::make({"x", "y"});
    auto cs = split_components(I(r, {"x*y"}));
    EXPECT_EQ(keys(cs), (std::set<std::string>{"x", "y"}));
    for (auto& c : cs) EXPECT_TRUE(c.certified);
}

TEST(Split, RepeatedFactor) {
    Ring r = PolyRing::make({"x", "y"}, {"w0", "w1"});
    auto cs = split_components(I(r, {"w0", "w1", "y^2"}));
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].ideal, I(r, {"w0", "w1", "y"}));
    EXPECT_TRUE(cs[0].certified);
}

TEST(Split, CrossedPlanesSplit) {
    Ring r = PolyRing::make({"u", "x", "y", "z"}, {"w0", "w1", "w2", "w3"});
    // (a,b,t) = (2,3,3): (u^2+x^3)^2 x^2.
    auto cs = split_components(I(r, {"y", "z", "w0", "w1", "w2", "w3", "(u^2+x^3)^2*x^2"}));
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(keys(cs), keys({{I(r, {"y", "z", "w0", "w1", "w2", "w3", "x"}).canonical(), true},
                              {I(r, {"y", "z", "w0", "w1", "w2", "w3", "u^2+x^3"}).canonical(), true}}));
    for (auto& c : cs) EXPECT_TRUE(c.certified);
}

TEST(Split, UnitRejected) {
    Ring r = PolyRing::make({"x"});
    EXPECT_THROW(split_components(I(r, {"1"})), InputError);
}

TEST(Split, TwistedCubicAndLine) {
    Ring r = PolyRing::make({"x", "y", "z"});
    // Twisted cubic union the line x = y = 0.
    Ideal cubic = I(r, {"y - x^2", "z - x^3"}), line = I(r, {"x", "y"});
    Ideal J = intersect(cubic, line);
    auto cs = split_components(J);
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(keys(cs), keys({{cubic.canonical(), true}, {line.canonical(), true}}));
    EXPECT_TRUE(verify_decomposition(J, cs));
}

TEST(Split, ZeroDimensional) {
    Ring r = PolyRing::make({"x", "y"});
    // x^2 - 2 irreducible, y^2 - 3 splits over Q(sqrt 2)?  No: Q(sqrt2, sqrt3) has
    // degree 4 and the ideal is prime.
    auto cs = split_components(I(r, {"x^2 - 2", "y^2 - 3"}));
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_TRUE(cs[0].certified);
    // x^2 - 2, y^2 - 8: y = +-2x gives two components.
    auto cs2 = split_components(I(r, {"x^2 - 2", "y^2 - 8"}));
    EXPECT_EQ(cs2.size(), 2u);
    for (auto& c : cs2) EXPECT_TRUE(c.certified);
}

TEST(Split, CuspConormal) {
    Ring r = PolyRing::make({"x", "y"}, {"w0", "w1"});
    // Relative conormal of x^2+y^3 on the plane cut by V(f).
    auto cs = split_components(I(r, {"3*y^2*w0 - 2*x*w1", "x^2 + y^3"}));
    EXPECT_GE(cs.size(), 2u);
    bool origin = false;
    for (auto& c : cs) {
        EXPECT_TRUE(c.certified) << c.ideal.key();
        if (c.ideal == I(r, {"x", "y"})) origin = true;
    }
    EXPECT_TRUE(origin);
    EXPECT_TRUE(verify_decomposition(I(r, {"3*y^2*w0 - 2*x*w1", "x^2 + y^3"}), cs));
}

// Unions of random linear subspaces are recovered exactly.
TEST(Split, RandomLinearUnions) {
    Ring r = PolyRing::make({"a", "b", "c", "d"});
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        int k = 1 + trial % 3;
        std::vector<Ideal> parts;
        for (int i = 0; i < k; ++i) {
            int codim = 1 + static_cast<int>(rng.uniform(0, 2));
            std::vector<Polynomial> g;
            for (int j = 0; j < codim; ++j) {
                Polynomial l(r);
                for (int v = 0; v < 4; ++v)
                    l += Polynomial::variable(r, v) * mpq_class(static_cast<long>(rng.uniform(-3, 3)));
                g.push_back(l);
            }
            Ideal p(r, g);
            if (p.is_zero() || p.is_unit()) continue;
            parts.push_back(p);
        }
        if (parts.empty()) continue;
        Ideal J = intersect(parts);
        auto cs = split_components(J);
        std::vector<PrimeComponent> want;
        for (auto& p : parts) want.push_back({p.canonical(), true});
        EXPECT_EQ(keys(cs), keys(minimalize(want))) << J.str();
        EXPECT_TRUE(verify_decomposition(J, cs));
    }
}
