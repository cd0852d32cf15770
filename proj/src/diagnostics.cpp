#include "levo/diagnostics.hpp"

#include <algorithm>

#include "levo/decompose.hpp"
#include "levo/errors.hpp"

namespace levo {

namespace {

std::vector<Polynomial> coordinate_slices(const Ring& R, const Point& p, int count) {
    std::vector<Polynomial> out;
    for (int i = 0; i < count; ++i) out.push_back(Polynomial::variable(R, i) - Polynomial::constant(R, p[i]));
    return out;
}

long long sign(int e) { return e % 2 == 0 ? 1 : -1; }

bool in_zero_section(const Ideal& P) {
    const Ring& R = P.ring();
    for (int i = 0; i < R->cot_count(); ++i)
        if (!P.contains(Polynomial::variable(R, R->cot_var(i)))) return false;
    return true;
}

}  // namespace

std::string status_name(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "certified";
        case CertStatus::ProperUncertified: return "proper-uncertified";
        case CertStatus::Failed: return "failed";
    }
    return "failed";
}

GenericityCertificate isolating_certificate(const LevoCycles& lambda, const Point& p,
                                            const std::optional<StageFailure>& failure, std::uint64_t seed) {
    GenericityCertificate cert;
    for (const auto& [k, byj] : lambda)
        for (const auto& [j, L] : byj)
            for (const auto& [key, c] : L.components())
                cert.d = std::max(cert.d, dimension_at(c.prime, p, seed));
    cert.checks.push_back("d = " + std::to_string(cert.d));
    if (failure) {
        cert.status = CertStatus::Failed;
        cert.failing_stage = failure->stage;
        cert.failing_component = failure->component;
        cert.checks.push_back("improper intersection at " + failure->stage + " on " + failure->component);
        return cert;
    }
    for (const auto& [k, byj] : lambda) {
        for (const auto& [j, L] : byj) {
            for (const auto& [key, c] : L.components()) {
                if (!passes_through(c.prime, p)) continue;
                int dim = dimension_at(c.prime.with(coordinate_slices(c.prime.ring(), p, j)), p, seed);
                std::string label = "degree " + std::to_string(k) + ", j=" + std::to_string(j) + ", " +
                                    variety_str(c.prime);
                cert.checks.push_back(label + ": sliced dimension at p = " + std::to_string(dim));
                if (dim > 0) {
                    cert.status = CertStatus::Failed;
                    cert.failing_stage = "j=" + std::to_string(j);
                    cert.failing_component = variety_str(c.prime);
                    return cert;
                }
            }
        }
    }
    cert.status = cert.d <= 2 ? CertStatus::Certified : CertStatus::ProperUncertified;
    return cert;
}

TransversalityResult essential_transversality(const Ideal& conormal, const Point& p, std::uint64_t seed) {
    const Ring& full = conormal.ring();
    if (!full->has_cotangent()) throw InputError("transversality needs a conormal in the (z, w) ring");
    const int n1 = full->base_count();
    Ring base = full->base_ring();
    TransversalityResult out;
    for (int i = 0; i < n1; ++i) {
        std::vector<Polynomial> extra = coordinate_slices(full, p, i);
        for (int m = i + 1; m < n1; ++m) extra.push_back(Polynomial::variable(full, full->cot_var(m)));
        Ideal J = conormal.with(extra);
        int dim = -1;
        if (!J.is_unit()) {
            for (const auto& comp : split_components(J, seed)) {
                if (in_zero_section(comp.ideal)) continue;
                Ideal eta = eliminate_to(comp.ideal, full->cot_mask(), base);
                dim = std::max(dim, dimension_at(eta, p, seed));
            }
        }
        out.passes.push_back(dim <= 0);
        out.verdict = out.verdict && dim <= 0;
    }
    return out;
}

AfResult af_exceptional_containment(const Ideal& Y, const Ideal& N, const Polynomial& f, const Point& x,
                                    const Ring& full, std::uint64_t seed) {
    AfResult out;
    Ring base = full->base_ring();
    Ideal conY = conormal_ideal(Y.map_to(base), full, seed);
    Ideal conN = conormal_ideal(N.map_to(base), full, seed);
    Ideal mx = point_ideal(base, x).map_to(full);

    out.whitney_a = radical_contains(conY + mx, conN + mx);
    Point q = lift_point(f, x, full);
    out.covector = true;
    for (const auto& g : conN.gb()) out.covector = out.covector && g.evaluate(q) == 0;

    Polynomial ff = f.map_to(full);
    std::vector<Polynomial> graph;
    for (int i = 0; i < full->base_count(); ++i)
        graph.push_back(Polynomial::variable(full, full->cot_var(i)) - ff.derivative(i));
    auto b = blowup_exceptional(conY, graph, seed);
    const Ring& B = b.ring;
    // conN with w_i renamed to the blow-up coordinate u_i.
    std::vector<Polynomial> images;
    for (int v = 0; v < full->nvars(); ++v) {
        if (v < full->base_count())
            images.push_back(Polynomial::variable(B, full->name(v)));
        else
            images.push_back(Polynomial::variable(B, full->nvars() + (v - full->base_count())));
    }
    std::vector<Polynomial> conN_u;
    for (const auto& g : conN.gens()) conN_u.push_back(g.compose(images));
    Ideal target = Ideal(B, conN_u) + mx.map_to(B);
    out.exceptional = true;
    for (const auto& [E, mult] : b.exceptional) {
        Ideal fibre = eliminate(E + mx.map_to(B), full->cot_mask());
        if (fibre.is_unit()) continue;
        if (!radical_contains(fibre, target)) {
            out.exceptional = false;
            if (out.witness.empty()) out.witness = "exceptional component " + variety_str(E) + " leaves the conormal";
        }
    }
    if (!out.whitney_a) out.witness = "Whitney a) fails at the point";
    else if (!out.covector) out.witness = "d_x f is not conormal to N";
    out.holds = out.whitney_a && out.covector && out.exceptional;
    return out;
}

ZawatskyComplex zawatsky_complex(int degree, const std::map<int, AbGroup>& lams, int d) {
    ZawatskyComplex z;
    z.degree = degree;
    z.d = d;
    auto at = [&](int j) {
        auto it = lams.find(j);
        return it == lams.end() ? AbGroup{} : it->second;
    };
    for (const auto& [j, A] : lams)
        if (j > d && !A.is_zero())
            z.constraints.push_back("lambda^" + std::to_string(j) + " is nonzero above d");
    for (int j = d; j >= 0; --j) z.terms.emplace_back(j, at(j));
    long long alt = 0;
    for (const auto& [j, A] : z.terms) {
        alt += sign(j) * A.rank;
        z.euler += sign(j + degree) * A.rank;
    }
    for (const auto& [j, A] : z.terms) {
        std::string h = "H^" + std::to_string(-j);
        if (A.is_zero()) {
            z.constraints.push_back(h + " = 0");
            continue;
        }
        if (at(j + 1).is_zero() && (j == 0 || at(j - 1).is_zero())) {
            z.constraints.push_back(h + " is isomorphic to " + A.str());
            continue;
        }
        if (j == d && A.is_free())
            z.constraints.push_back(h + " is free of rank at most " + std::to_string(A.rank));
        else
            z.constraints.push_back(h + " has rank at most " + std::to_string(A.rank));
    }
    if (!z.terms.empty())
        z.constraints.push_back("sum of (-1)^j rank H^-j = " + std::to_string(alt));
    return z;
}

EulerCheck euler_check(const LevoModules& lams, std::optional<long long> expected) {
    EulerCheck e;
    for (const auto& [k, byj] : lams)
        for (const auto& [j, A] : byj) e.signed_sum += sign(j + k) * A.rank;
    e.milnor_fiber_reduced_euler = -e.signed_sum;
    e.expected = expected;
    e.matches = !expected || *expected == e.signed_sum;
    return e;
}

}  // namespace levo
