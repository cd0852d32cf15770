#include <gtest/gtest.h>

#include "levo/diagnostics.hpp"
#include "levo/errors.hpp"
#include "levo/random.hpp"
#include "test_util.hpp"

using namespace levo;
using namespace levo::testing_util;

namespace {

Ring plane() { return PolyRing::make({"x", "y"}, {"w0", "w1"}); }
Ring planes() { return PolyRing::make({"u", "x", "y", "z"}, {"w0", "w1", "w2", "w3"}); }

LevoCycles run_levo(const GradedEnrichedCycle& G, const Polynomial& f) {
    LevoCycles out;
    for (const auto& [k, E] : G.degrees()) out[k] = levo_cycles(vogel_decompose(E, f, 1, k), f);
    return out;
}

GradedEnrichedCycle planes_gecc() {
    Ring r = planes();
    GradedEnrichedCycle G(r);
    G.add(1, ideal(r, {"u", "x", "y", "z"}), AbGroup::free(1));
    G.add(2, ideal(r, {"u", "x", "w2", "w3"}), AbGroup::free(1));
    G.add(2, ideal(r, {"y", "z", "w0", "w1"}), AbGroup::free(1));
    return G;
}

}  // namespace

TEST(Certificate, CrossedPlanesCertified) {
    auto G = planes_gecc();
    Polynomial f = poly(planes()->base_ring(), "(u^2 + x^3)^2 + y^2 + z^2");
    auto cert = isolating_certificate(run_levo(G, f), zero_point(4), std::nullopt);
    EXPECT_EQ(cert.status, CertStatus::Certified);
    EXPECT_EQ(cert.d, 1);
}

TEST(Certificate, CuspVacuous) {
    Ring r = plane();
    GradedEnrichedCycle G(r);
    G.add(2, ideal(r, {"w0", "w1"}), AbGroup::free(1));
    for (const char* f : {"x^2 + y^3", "y^2 + x^3"}) {
        auto cert = isolating_certificate(run_levo(G, poly(r->base_ring(), f)), zero_point(2), std::nullopt);
        EXPECT_EQ(cert.status, CertStatus::Certified);
        EXPECT_EQ(cert.d, 0);
    }
}

TEST(Certificate, FailureAndSlices) {
    auto cert = isolating_certificate({}, zero_point(3), StageFailure{"j=2", "V(w0, w1, w2)"});
    EXPECT_EQ(cert.status, CertStatus::Failed);
    EXPECT_EQ(cert.failing_stage, "j=2");

    // Lambda^1 = V(x) sliced by V(x) stays a line: not isolating.
    Ring b = plane()->base_ring();
    LevoCycles bad;
    bad[2][1] = single(ideal(b, {"x"}));
    auto c2 = isolating_certificate(bad, zero_point(2), std::nullopt);
    EXPECT_EQ(c2.status, CertStatus::Failed);
    EXPECT_EQ(c2.failing_stage, "j=1");
}

TEST(Certificate, HighDimensionUncertified) {
    Ring b = PolyRing::make({"a", "b", "c", "d", "e"})->base_ring();
    LevoCycles lam;
    lam[5][3] = single(ideal(b, {"d", "e"}));
    auto cert = isolating_certificate(lam, zero_point(5), std::nullopt);
    EXPECT_EQ(cert.d, 3);
    EXPECT_EQ(cert.status, CertStatus::ProperUncertified);
}

TEST(Transversality, CrossedPlanesStrata) {
    Ring r = planes();
    auto ux = essential_transversality(ideal(r, {"u", "x", "w2", "w3"}), zero_point(4));
    EXPECT_FALSE(ux.passes[0]);
    EXPECT_FALSE(ux.verdict);
    auto yz = essential_transversality(ideal(r, {"y", "z", "w0", "w1"}), zero_point(4));
    EXPECT_EQ(yz.passes, std::vector<bool>(4, true));
    EXPECT_TRUE(yz.verdict);
    auto pt = essential_transversality(ideal(r, {"u", "x", "y", "z"}), zero_point(4));
    EXPECT_TRUE(pt.verdict);
}

TEST(AfCondition, Examples) {
    Ring r = plane();
    Ring b = r->base_ring();
    auto sq = af_exceptional_containment(Ideal(b), ideal(b, {"y"}), poly(b, "y^2"), zero_point(2), r);
    EXPECT_TRUE(sq.holds) << sq.witness;
    auto cusp = af_exceptional_containment(Ideal(b), ideal(b, {"x", "y"}), poly(b, "x^2 + y^3"), zero_point(2), r);
    EXPECT_TRUE(cusp.holds) << cusp.witness;
    auto lin = af_exceptional_containment(Ideal(b), ideal(b, {"y"}), poly(b, "x"), zero_point(2), r);
    EXPECT_TRUE(lin.whitney_a);
    EXPECT_FALSE(lin.covector);
    EXPECT_FALSE(lin.holds);
}

TEST(Zawatsky, CrossedPlanes) {
    int a = 2, b = 3, g = 2, d = 2, t = 3;
    long long top = b * (t - 1), bottom = (d - 1) * (g - 1) + (b - 1) * (a * t - 1);
    auto z2 = zawatsky_complex(2, {{1, AbGroup::free(top)}, {0, AbGroup::free(bottom)}}, 1);
    ASSERT_EQ(z2.terms.size(), 2u);
    EXPECT_EQ(z2.terms[0].first, 1);
    EXPECT_EQ(z2.terms[0].second, AbGroup::free(top));
    EXPECT_NE(std::find(z2.constraints.begin(), z2.constraints.end(),
                        "H^-1 is free of rank at most " + std::to_string(top)),
              z2.constraints.end());
    EXPECT_NE(std::find(z2.constraints.begin(), z2.constraints.end(),
                        "H^0 has rank at most " + std::to_string(bottom)),
              z2.constraints.end());
    EXPECT_EQ(z2.euler, bottom - top);

    auto z1 = zawatsky_complex(1, {{0, AbGroup::free(1)}}, 1);
    EXPECT_NE(std::find(z1.constraints.begin(), z1.constraints.end(), "H^0 is isomorphic to Z"), z1.constraints.end());
    EXPECT_EQ(z1.euler, -1);

    auto empty = zawatsky_complex(0, {}, -1);
    EXPECT_TRUE(empty.terms.empty());
    EXPECT_EQ(empty.euler, 0);
}

TEST(Euler, SignedSums) {
    for (auto [a, b, g, d, t] : {std::array{2, 2, 2, 2, 2}, std::array{2, 3, 2, 2, 3}, std::array{3, 2, 4, 5, 2}}) {
        LevoModules m;
        m[1][0] = AbGroup::free(1);
        m[2][1] = AbGroup::free(b * (t - 1));
        m[2][0] = AbGroup::free((d - 1) * (g - 1) + (b - 1) * (a * t - 1));
        auto e = euler_check(m);
        long long closed = -a * b * t + b * t + a * t - g * d + g + d - 1;
        EXPECT_EQ(e.milnor_fiber_reduced_euler, closed);
        EXPECT_EQ(e.signed_sum, -closed);
        long long z = 0;
        for (const auto& [k, mods] : m) z += zawatsky_complex(k, mods, 1).euler;
        EXPECT_EQ(z, e.signed_sum);
    }
    LevoModules cusp;
    cusp[2][0] = AbGroup::free(2);
    EXPECT_EQ(euler_check(cusp, 2).signed_sum, 2);
    EXPECT_TRUE(euler_check(cusp, 2).matches);
    EXPECT_FALSE(euler_check(cusp, -2).matches);
    EXPECT_EQ(euler_check({}).signed_sum, 0);
}

// Perverse input: a cycle concentrated in degree 0 gives modules only in
// degree 0.
TEST(Perverse, DegreeZeroOnly) {
    Ring r = plane();
    Ring b = r->base_ring();
    for (const char* f : {"x^2 + y^3", "x*y", "x^3 + y^3", "y^2"}) {
        GradedEnrichedCycle G(r);
        G.add(0, ideal(r, {"w0", "w1"}), AbGroup::free(1));
        auto lam = run_levo(G, poly(b, f));
        for (const auto& [k, byj] : lam) {
            auto m = levo_modules(byj, zero_point(2));
            if (k != 0) EXPECT_TRUE(m.empty());
        }
    }
}
