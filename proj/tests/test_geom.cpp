#include <gtest/gtest.h>

#include "levo/decompose.hpp"
#include "levo/errors.hpp"
#include "levo/factor.hpp"
#include "levo/geom.hpp"
#include "levo/parse.hpp"
#include "levo/random.hpp"
#include "test_util.hpp"

using namespace levo;

namespace {

Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

Ideal I(const Ring& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(P(r, s));
    return Ideal(r, g);
}

EnrichedCycle single(const Ideal& p, std::int64_t rank = 1) {
    EnrichedCycle e(p.ring());
    e.add(p, AbGroup::free(rank));
    return e;
}

Ring cusp_ring() { return PolyRing::make({"x", "y"}, {"w0", "w1"}); }
Ring planes_ring() { return PolyRing::make({"u", "x", "y", "z"}, {"w0", "w1", "w2", "w3"}); }

Point origin(const Ring& r) { return Point(r->nvars(), 0); }

}  // namespace

TEST(Intersect, CuspZeroSection) {
    Ring r = cusp_ring();
    auto res = intersect_hypersurface(single(I(r, {"w0", "w1"})), P(r, "w1 - 3*y^2"));
    EXPECT_EQ(res.cycle, single(I(r, {"w0", "w1", "y"}), 2));
    ASSERT_EQ(res.records.size(), 1u);
    EXPECT_EQ(res.records[0].multiplicity, 2);
    EXPECT_TRUE(res.proper);
}

TEST(Intersect, CrossedPlanesFirstStep) {
    Ring r = planes_ring();
    for (int delta : {2, 3, 5}) {
        std::string g = "w3 - " + std::to_string(delta) + "*z^" + std::to_string(delta - 1);
        auto a = intersect_hypersurface(single(I(r, {"u", "x", "w2", "w3"})), P(r, g));
        EXPECT_EQ(a.cycle, single(I(r, {"u", "x", "w2", "w3", "z"}), delta - 1));
        auto b = intersect_hypersurface(single(I(r, {"y", "z", "w0", "w1"})), P(r, g));
        EXPECT_EQ(b.cycle, single(I(r, {"y", "z", "w0", "w1", "w3"})));
    }
}

TEST(Intersect, ImproperNamesComponent) {
    Ring r = cusp_ring();
    try {
        intersect_hypersurface(single(I(r, {"w0", "w1"})), P(r, "w1"), 1, "j=1");
        FAIL();
    } catch (const ImproperIntersection& e) {
        EXPECT_EQ(e.stage(), "j=1");
        EXPECT_EQ(e.component(), "V(w0, w1)");
    }
}

TEST(Multiplicity, Examples) {
    Ring r = cusp_ring();
    EXPECT_EQ(multiplicity_along(I(r, {"w0", "w1"}), P(r, "w1 - 3*y^2"), I(r, {"w0", "w1", "y"})), 2);
    Ring s = planes_ring();
    Ideal p = I(s, {"u", "x", "y", "z"});
    EXPECT_EQ(multiplicity_along(p, P(s, "w3 - 4*z^3"), p + P(s, "w3")), 1);
    // Two components of different multiplicity on one plane.
    Ring t = PolyRing::make({"x", "y", "z"});
    Ideal q = I(t, {"z - x^2"});
    Polynomial g = P(t, "x^3*(y - 1)^2");
    EXPECT_EQ(multiplicity_along(q, g, I(t, {"z", "x"})), 3);
    EXPECT_EQ(multiplicity_along(q, g, I(t, {"z - x^2", "y - 1"})), 2);
    EXPECT_THROW(multiplicity_along(q, g, I(t, {"x", "y"})), InputError);
}

TEST(LocalMultiplicity, Examples) {
    Ring r = PolyRing::make({"u", "x", "y", "z"});
    for (int beta : {2, 3, 5})
        EXPECT_EQ(local_multiplicity_at_point(
                      I(r, {"u", "u^2 + x^" + std::to_string(beta), "y", "z"}), origin(r)),
                  beta);
    Ring q = PolyRing::make({"x", "y"});
    EXPECT_EQ(local_multiplicity_at_point(I(q, {"x - 1", "y"}), origin(q)), 0);
    EXPECT_EQ(local_multiplicity_at_point(I(q, {"x", "y"}), origin(q)), 1);
    EXPECT_EQ(local_multiplicity_at_point(I(q, {"2*x", "3*y^2"}), origin(q)), 2);
    // Only the part at the origin counts.
    EXPECT_EQ(local_multiplicity_at_point(I(q, {"x^2*(x - 1)", "y"}), origin(q)), 2);
    EXPECT_EQ(local_multiplicity_at_point(I(q, {"x^2*(x - 1)", "y"}), Point{1, 0}), 1);
    EXPECT_THROW(local_multiplicity_at_point(I(q, {"x"}), origin(q)), InputError);
    // Milnor algebra of x^3 + y^3 and of x^2*y + y^4 (D5).
    EXPECT_EQ(local_multiplicity_at_point(I(q, {"x^2", "y^2"}), origin(q)), 4);
    EXPECT_EQ(local_multiplicity_at_point(I(q, {"2*x*y", "x^2 + 4*y^3"}), origin(q)), 5);
    EXPECT_EQ(local_length(I(q, {"x*y^2"}) + P(q, "x*(y - 1)"), Point{1, 1}), 0);
    EXPECT_THROW(local_length(I(q, {"x*y"}), origin(q)), ImproperIntersection);
    EXPECT_EQ(local_length(I(q, {"x*(x - 1)", "y*(x - 1)"}), origin(q)), 1);
}

TEST(Conormal, Examples) {
    Ring r = planes_ring();
    EXPECT_EQ(conormal_ideal(I(r, {"u", "x"}), r), I(r, {"u", "x", "w2", "w3"}));
    EXPECT_EQ(conormal_ideal(Ideal(r), r), I(r, {"w0", "w1", "w2", "w3"}));
    Ring one = PolyRing::make({"z0"}, {"w0"});
    EXPECT_EQ(conormal_ideal(I(one, {"z0"}), one), I(one, {"z0"}));
    Ring q = cusp_ring();
    EXPECT_EQ(conormal_ideal(I(q, {"x - y"}), q), I(q, {"x - y", "w0 + w1"}));
    EXPECT_EQ(conormal_ideal(I(q, {"x^2 + y^2 - 1"}), q), I(q, {"x^2 + y^2 - 1", "x*w1 - y*w0"}));
    Ideal cusp = conormal_ideal(I(q, {"y^2 - x^3"}), q);
    EXPECT_TRUE(cusp.contains(P(q, "y^2 - x^3")));
    EXPECT_EQ(cusp.dimension(), 2);
    EXPECT_TRUE(cusp.contains(P(q, "2*y*w0 + 3*x^2*w1")));
    EXPECT_FALSE(cusp.contains(P(q, "w0")));
    Ring c3 = PolyRing::make({"x", "y", "z"}, {"w0", "w1", "w2"});
    Ideal cone = conormal_ideal(I(c3, {"x^2 + y^2 - z^2"}), c3);
    EXPECT_EQ(cone.dimension(), 3);
    auto comps = split_components(cone);
    EXPECT_EQ(comps.size(), 1u);
}

TEST(RelativeConormal, Examples) {
    Ring q = cusp_ring();
    EXPECT_EQ(relative_conormal_ideal(I(q, {"x"}), P(q, "y"), q), I(q, {"x"}));
    EXPECT_EQ(relative_conormal_ideal(Ideal(q), P(q, "x^2 + y^3"), q), I(q, {"3*y^2*w0 - 2*x*w1"}));
    Ring c3 = PolyRing::make({"z0", "z1", "z2"}, {"w0", "w1", "w2"});
    EXPECT_EQ(relative_conormal_ideal(Ideal(c3), P(c3, "z0"), c3), I(c3, {"w1", "w2"}));
    EXPECT_THROW(relative_conormal_ideal(I(q, {"x"}), P(q, "x + 1"), q), InputError);
    EXPECT_TRUE(constant_on_component(I(q, {"x*y"}), P(q, "x")));
    EXPECT_FALSE(constant_on_component(I(q, {"x*y"}), P(q, "x + y")));
    // A line through the plane: ker df on the line is 0, every covector allowed.
    EXPECT_EQ(relative_conormal_ideal(I(c3, {"z0", "z1"}), P(c3, "z2"), c3), I(c3, {"z0", "z1"}));
}

TEST(Pushforward, Examples) {
    Ring r = planes_ring();
    for (auto [a, b, t] : {std::tuple{2, 2, 2}, std::tuple{2, 3, 3}}) {
        std::string h = "u^" + std::to_string(a) + " + x^" + std::to_string(b);
        Polynomial f = P(r, "(" + h + ")^" + std::to_string(t) + " + y^2 + z^2");
        EnrichedCycle d = single(I(r, {"y", "z", "w0", "w1", "w2", "w3", h}), t - 1);
        EnrichedCycle lam = graph_pushforward(d, f);
        Ring base = r->base_ring();
        EXPECT_EQ(lam, single(I(base, {h, "y", "z"}), t - 1));
    }
    Ring q = cusp_ring();
    EXPECT_EQ(graph_pushforward(single(I(q, {"x", "y", "w0", "w1"}), 2), P(q, "x^2 + y^3")),
              single(I(q->base_ring(), {"x", "y"}), 2));
    EXPECT_TRUE(graph_pushforward(EnrichedCycle(q), P(q, "x")).empty());
    EXPECT_THROW(graph_pushforward(single(I(q, {"x", "w0", "w1"})), P(q, "x^2 + y^3")), InputError);
}

TEST(Blowup, PointInPlane) {
    Ring r = PolyRing::make({"x", "y"});
    auto b = blowup_exceptional(Ideal(r), {P(r, "x"), P(r, "y")});
    ASSERT_EQ(b.exceptional.size(), 1u);
    EXPECT_EQ(b.exceptional[0].second, 1);
    EXPECT_TRUE(b.exceptional[0].first.contains(Ideal(r, {P(r, "x"), P(r, "y")}).map_to(b.ring)));
    EXPECT_EQ(b.rees.dimension(), 3);
    EXPECT_THROW(blowup_exceptional(I(r, {"x", "y"}), {P(r, "x"), P(r, "y")}), InputError);
}

TEST(Blowup, CuspGraphMatchesMilnorNumber) {
    Ring q = cusp_ring();
    auto b = blowup_exceptional(I(q, {"w0", "w1"}), {P(q, "w0 - 2*x"), P(q, "w1 - 3*y^2")});
    ASSERT_EQ(b.exceptional.size(), 1u);
    EXPECT_EQ(b.exceptional[0].second, 2);
    EXPECT_TRUE(b.exceptional[0].first.contains(I(q, {"x", "y", "w0", "w1"}).map_to(b.ring)));
}

TEST(Blowup, PrincipalNonzerodivisor) {
    Ring r = PolyRing::make({"x", "y"});
    auto b = blowup_exceptional(Ideal(r), {P(r, "1 + x")});
    // (1 + x) is a unit near the blown-up locus only away from x = -1.
    for (const auto& [w, m] : b.exceptional) EXPECT_TRUE(w.contains(P(b.ring, "1 + x")));
    auto c = blowup_exceptional(Ideal(r), {P(r, "3")});
    EXPECT_TRUE(c.exceptional.empty());
}

// Multiplicities from two independent slices agree, match the factorization
// exponent on planes and graphs, and the result drops dimension by one.
TEST(Property, SliceIndependence) {
    Ring r = PolyRing::make({"x", "y", "z"});
    const char* primes[] = {"0", "z - x - 2*y", "z - x^2", "x^2 + y^2 - z^2", "z - y^3 + x"};
    const char* factors[] = {"x", "y - 1", "x + y", "x^2 - y", "y^2 - x^3", "z - 2", "x - z"};
    Rng rng(2024);
    int cases = 0, oracle = 0;
    while (cases < 200) {
        std::string ps = primes[rng.uniform(0, 4)];
        Ideal p = ps == std::string("0") ? Ideal(r) : I(r, {ps});
        Polynomial g = Polynomial::constant(r, 1);
        int nf = static_cast<int>(rng.uniform(1, 2));
        for (int i = 0; i < nf; ++i) g = g * P(r, factors[rng.uniform(0, 6)]).pow(static_cast<unsigned>(rng.uniform(1, 2)));
        if (p.contains(g)) continue;
        auto comps = split_components(p + g);
        for (const auto& w : comps) {
            long long a = multiplicity_along(p, g, w.ideal, rng.next());
            long long b = multiplicity_along(p, g, w.ideal, rng.next());
            EXPECT_EQ(a, b) << p.str() << " " << g.str() << " " << w.ideal.str();
            EXPECT_EQ(w.ideal.dimension(), p.dimension() - 1);
            // Graph or plane: R/P is a polynomial ring, so the multiplicity is
            // the exponent of the matching prime factor.
            if (p.is_zero() || p.gens()[0].degree_in(2) == 1) {
                Polynomial gbar = g;
                if (!p.is_zero()) {
                    const Polynomial& q0 = p.gens()[0];
                    mpq_class lc = q0.coeff_in(2, 1).constant_coeff();
                    gbar = g.substitute(2, (P(r, "z") * lc - q0) * mpq_class(1 / lc));
                }
                long long expected = 0;
                for (const auto& [h, e] : factor(gbar).factors)
                    if (w.ideal == p + h) expected = e;
                EXPECT_EQ(a, expected) << p.str() << " " << g.str() << " " << w.ideal.str();
                ++oracle;
            }
        }
        ++cases;
    }
    EXPECT_GT(oracle, 50);
}

// Total coefficient at p of E . V(l_1..l_k) is recovered by summing over the
// points near p after perturbing the l_i.
TEST(Property, ConservationOfModule) {
    Ring r = PolyRing::make({"a", "b", "c", "d"});
    Rng rng(77);
    auto rand_linear = [&](bool through_origin) {
        Polynomial l = Polynomial::constant(r, through_origin ? 0 : rng.uniform(-3, 3));
        for (int v = 0; v < 4; ++v) l += Polynomial::variable(r, v) * mpq_class(rng.uniform(-4, 4));
        return l;
    };
    const mpq_class t(1, 1000000);
    int nontrivial = 0;
    for (int cs = 0; cs < 200; ++cs) {
        int k = static_cast<int>(rng.uniform(1, 2));
        EnrichedCycle e(r);
        int ncomp = static_cast<int>(rng.uniform(1, 3));
        for (int i = 0; i < ncomp; ++i) {
            std::vector<Polynomial> g;
            bool through = rng.uniform(0, 3) != 0;
            for (int j = 0; j < 4 - k; ++j) g.push_back(rand_linear(through));
            Ideal comp(r, g);
            if (comp.dimension() != k) continue;
            e.add(comp, AbGroup::free(rng.uniform(1, 3)));
        }
        std::vector<Polynomial> ls, pert;
        for (int i = 0; i < k; ++i) {
            ls.push_back(rand_linear(true));
            pert.push_back(ls.back() + t * rand_linear(false));
        }
        auto total_near = [&](const std::vector<Polynomial>& hs, bool at_origin) -> std::int64_t {
            EnrichedCycle cur = e;
            for (const auto& h : hs) {
                EnrichedCycle next(r);
                for (const auto& [key, c] : cur.components()) {
                    if (c.prime.contains(h)) return -1;
                    EnrichedCycle one(r);
                    one.add(c.prime, c.coeff);
                    next = cycle_add(next, intersect_hypersurface(one, h).cycle);
                }
                cur = next;
            }
            std::int64_t sum = 0;
            for (const auto& [key, c] : cur.components()) {
                Point q;
                for (int v = 0; v < 4; ++v) q.push_back(c.prime.reduce(Polynomial::variable(r, v)).constant_coeff());
                bool near = true;
                for (const auto& x : q) near = near && abs(x) < mpq_class(1, 100);
                if (at_origin ? passes_through(c.prime, origin(r)) : near)
                    sum += c.coeff.rank * local_multiplicity_at_point(c.prime, q);
            }
            return sum;
        };
        std::int64_t a = total_near(ls, true);
        if (a < 0) continue;
        std::int64_t b = total_near(pert, false);
        EXPECT_EQ(a, b) << e.str();
        if (a > 0) ++nontrivial;
    }
    EXPECT_GT(nontrivial, 50);
}

// pushforward(E . V(g)) = pushforward(E) . V(g) for E inside the graph.
TEST(Property, ProjectionFormula) {
    Ring r = cusp_ring();
    Ring base = r->base_ring();
    const char* curves[] = {"x - y^2", "x^2 + y^2 - 1", "y - 2*x + 1", "x*y - 1"};
    const char* fs[] = {"x^2 + y^3", "x*y", "x^3 - y"};
    const char* gs[] = {"x", "y - 1", "x + y", "x^2 - y"};
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        Polynomial f = P(r, fs[rng.uniform(0, 2)]);
        Ideal q = I(r, {curves[rng.uniform(0, 3)]});
        Polynomial g = P(r, gs[rng.uniform(0, 3)]);
        if (q.contains(g)) continue;
        EnrichedCycle e = single(im_df(f, r) + q, rng.uniform(1, 3));
        EnrichedCycle lhs = graph_pushforward(intersect_hypersurface(e, g, rng.next()).cycle, f);
        EnrichedCycle rhs = intersect_hypersurface(graph_pushforward(e, f), g.map_to(base), rng.next()).cycle;
        EXPECT_EQ(lhs, rhs) << q.str() << " / " << g.str();
    }
}
