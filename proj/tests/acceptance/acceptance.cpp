#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "levo/errors.hpp"
#include "levo/parse.hpp"
#include "levo/pipeline.hpp"
#include "levo/random.hpp"

using namespace levo;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [" << what << "]";
        }
    }
};

Ideal ideal_of(const Ring& r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(parse_polynomial(s, r));
    return Ideal(r, g);
}

EnrichedCycle single(const Ideal& p, long long rank) {
    EnrichedCycle e(p.ring());
    e.add(p, AbGroup::free(rank));
    return e;
}

AbGroup get(const std::map<int, AbGroup>& m, int j) { return m.count(j) ? m.at(j) : AbGroup{}; }

JobConfig plane_job(const std::string& f) {
    json j = {{"variables", {"x", "y"}},
              {"strata", {{{"name", "plane"}, {"closure", json::array()}, {"morse", {{"2", "Z"}}}}}},
              {"f", f}};
    return config_from_json(j);
}

JobConfig planes_job(int a, int b, int g, int d, int t) {
    auto s = [](int v) { return std::to_string(v); };
    json j = {{"variables", {"u", "x", "y", "z"}},
              {"strata",
               {{{"name", "S0"}, {"closure", {"u", "x", "y", "z"}}, {"morse", {{"1", "Z"}}}},
                {{"name", "S1"}, {"closure", {"u", "x"}}, {"morse", {{"2", "Z"}}}},
                {{"name", "S2"}, {"closure", {"y", "z"}}, {"morse", {{"2", "Z"}}}}}},
              {"f", "(u^" + s(a) + " + x^" + s(b) + ")^" + s(t) + " + y^" + s(g) + " + z^" + s(d)}};
    return config_from_json(j);
}

std::string module_at(const json& rep, int k, int j) {
    const json& d = rep["degrees"][std::to_string(k)];
    if (!d.contains("lambda_modules")) return "missing";
    const json& m = d["lambda_modules"];
    return m.contains(std::to_string(j)) ? m[std::to_string(j)].get<std::string>() : "0";
}

// Milnor number as the number of standard monomials of the Jacobian ideal.
long long jacobian_vdim(const Polynomial& f) {
    std::vector<Polynomial> j;
    for (int i = 0; i < f.ring()->nvars(); ++i) j.push_back(f.derivative(i));
    return Ideal(f.ring(), j).vdim();
}

Outcome criterion1() {
    Outcome o;
    for (auto [a, b, g, d, t] : {std::array{2, 2, 2, 2, 2}, std::array{2, 3, 2, 2, 3}, std::array{3, 2, 4, 5, 2}}) {
        auto t0 = Clock::now();
        JobConfig cfg = planes_job(a, b, g, d, t);
        PreparedJob job = prepare_job(cfg);
        GradedEnrichedCycle G = build_gecc(job.spec);
        const Ring& r = job.full;
        std::string tag = std::to_string(a) + std::to_string(b) + std::to_string(g) + std::to_string(d) +
                          std::to_string(t) + " ";
        EnrichedCycle g2(r);
        g2.add(ideal_of(r, {"u", "x", "w2", "w3"}), AbGroup::free(1));
        g2.add(ideal_of(r, {"y", "z", "w0", "w1"}), AbGroup::free(1));
        o.require(G.at(1) == single(ideal_of(r, {"u", "x", "y", "z"}), 1), tag + "gecc^1");
        o.require(G.at(2) == g2, tag + "gecc^2");

        std::string curve = "u^" + std::to_string(a) + " + x^" + std::to_string(b);
        long long bottom = (d - 1) * (g - 1) + (b - 1) * (a * t - 1);
        auto D = vogel_decompose(G.at(2), job.f, cfg.seed, 2);
        o.require(D.delta[1] == single(ideal_of(r, {"y", "z", "w0", "w1", "w2", "w3", curve}), t - 1),
                  tag + "Delta^1");
        long long rank0 = 0;
        for (const auto& [key, c] : D.delta[0].components()) rank0 += c.coeff.rank;
        o.require(rank0 == bottom, tag + "Delta^0 rank");

        Report rep = run_pipeline(cfg);
        o.require(rep.exit_code == 0, tag + "exit code");
        o.require(module_at(rep.json, 1, 0) == "Z", tag + "1lambda0");
        o.require(module_at(rep.json, 2, 1) == AbGroup::free(b * (t - 1)).str(), tag + "2lambda1");
        o.require(module_at(rep.json, 2, 0) == AbGroup::free(bottom).str(), tag + "2lambda0");
        long long closed = -a * b * t + b * t + a * t - g * d + g + d - 1;
        o.require(rep.json["euler"]["milnor_fiber_reduced_euler"] == closed, tag + "Euler");
        double secs = seconds_since(t0);
        o.require(secs <= 60.0, tag + "runtime");
        o.detail << " " << tag << secs << "s";
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    Ring base = PolyRing::make({"x", "y"});
    for (const char* f : {"x^2 + y^2", "x^2 + y^3", "x^3 + y^3", "x*y"}) {
        auto t0 = Clock::now();
        Report rep = run_pipeline(plane_job(f));
        long long mu = jacobian_vdim(parse_polynomial(f, base));
        std::string got = module_at(rep.json, 2, 0);
        double secs = seconds_since(t0);
        o.require(got == AbGroup::free(mu).str(), std::string(f) + ": " + got + " vs mu " + std::to_string(mu));
        o.require(secs <= 5.0, std::string(f) + " runtime");
        o.detail << " " << f << "=" << got;
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto t0 = Clock::now();
    Report sq = run_pipeline(plane_job("y^2"));
    o.require(module_at(sq.json, 2, 1) == "Z", "y^2 lambda^1");
    o.require(module_at(sq.json, 2, 0) == "0", "y^2 lambda^0");
    Report lin = run_pipeline(plane_job("x"));
    o.require(lin.json["critical_locus"].empty(), "x critical locus");
    o.require(lin.json["degrees"]["2"]["lambda_modules"].empty(), "x lambda");
    o.require(seconds_since(t0) <= 5.0, "runtime");
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::vector<JobConfig> corpus;
    for (const char* f : {"x^2 + y^2", "x^2 + y^3", "x^3 + y^3", "x*y", "x^2 + y^5", "x^3 + x*y^3", "x^2*y + y^4"})
        corpus.push_back(plane_job(f));
    for (const char* f : {"x^2 + y^2 + t^2", "x*y + t^3", "x^2 + y^3 + t^4"}) {
        json j = {{"variables", {"x", "y", "t"}},
                  {"strata", {{{"name", "space"}, {"closure", json::array()}, {"morse", {{"3", "Z"}}}}}},
                  {"f", f}};
        corpus.push_back(config_from_json(j));
    }
    {
        json j = {{"variables", {"x", "y"}},
                  {"strata",
                   {{{"name", "line"}, {"closure", {"y"}}, {"morse", {{"1", "Z"}}}},
                    {{"name", "origin"}, {"closure", {"x", "y"}}, {"morse", {{"0", "Z^2"}}}}}},
                  {"f", "x^2 + y"}};
        corpus.push_back(config_from_json(j));
    }
    int checked = 0;
    for (const auto& cfg : corpus) {
        Report rep = run_pipeline(cfg);
        if (rep.json["certificate"]["d"] != 0) continue;
        PreparedJob job = prepare_job(cfg);
        GradedEnrichedCycle G = build_gecc(job.spec);
        auto stalk = isolated_vanishing_stalk(G, job.f, job.p, cfg.seed);
        for (const auto& [k, E] : G.degrees())
            o.require(module_at(rep.json, k, 0) == get(stalk, k).str(), *cfg.f + " degree " + std::to_string(k));
        ++checked;
    }
    o.require(checked >= 10, "fewer than 10 d = 0 instances");
    o.detail << " " << checked << " instances";
    return o;
}

Outcome criterion5() {
    Outcome o;
    Rng rng(99);
    const char* names[] = {"a", "b", "c", "d"};
    int accepted = 0, comparisons = 0, attempts = 0;
    while (accepted < 12 && attempts < 80) {
        ++attempts;
        int n1 = static_cast<int>(rng.uniform(2, 4));
        JobConfig cfg;
        for (int i = 0; i < n1; ++i) {
            cfg.variables.push_back(names[i]);
            cfg.cotangent.push_back("w" + std::to_string(i));
        }
        int ns = static_cast<int>(rng.uniform(1, 3));
        for (int s = 0; s < ns; ++s) {
            StratumConfig st;
            st.name = "S" + std::to_string(s);
            int dim = static_cast<int>(rng.uniform(0, n1));
            for (int r = 0; r < n1 - dim; ++r) {
                std::string g;
                for (int v = 0; v < n1; ++v) {
                    long long c = rng.uniform(-2, 2);
                    if (c) g += (g.empty() ? "" : " + ") + std::to_string(c) + "*" + names[v];
                }
                st.closure.push_back(g.empty() ? names[r] : g);
            }
            st.morse[static_cast<int>(rng.uniform(-1, 2))] = AbGroup::free(rng.uniform(1, 2));
            cfg.strata.push_back(st);
        }
        cfg.point.assign(n1, 0);
        cfg.coordinates.assign(n1, std::vector<long long>(n1, 0));
        for (int i = 0; i < n1; ++i) cfg.coordinates[i][i] = 1;
        cfg = randomize_coordinates(cfg, rng.next() % 1000 + 1);
        try {
            if (run_pipeline(cfg).exit_code != 0) continue;
            PreparedJob job = prepare_job(cfg);
            GradedEnrichedCycle G = build_gecc(job.spec);
            auto pp = polar_package(G, job.p, cfg.seed);
            for (int j = 0; j < n1; ++j) {
                auto it = polar_modules_iterative(job.spec, job.p, j, cfg.seed);
                for (const auto& [k, E] : G.degrees()) {
                    ++comparisons;
                    o.require(get(pp.modules[k], j) == get(it, k),
                              "case " + std::to_string(attempts) + " j=" + std::to_string(j) + " k=" +
                                  std::to_string(k));
                }
            }
            ++accepted;
        } catch (const InputError&) {
            continue;
        }
    }
    o.require(accepted >= 10, "fewer than 10 certified cases");
    o.detail << " " << accepted << " cases, " << comparisons << " comparisons";
    return o;
}

Outcome criterion6() {
    Outcome o;
    const std::vector<std::pair<std::string, std::string>> suites = {
        {LEVO_TEST_CYCLES, "AbGroup.RingAxioms:Cycle.PartialOrder:Cycle.OrdinaryRankIdentity"},
        {LEVO_TEST_GEOM, "Property.*"},
        {LEVO_TEST_VOGEL, "Property.SetIdentity"},
    };
    for (const auto& [bin, filter] : suites) {
        std::string cmd = "\"" + bin + "\" --gtest_filter=" + filter + " > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        o.require(rc == 0, filter);
    }
    o.detail << " " << suites.size() << " suites";
    return o;
}

Outcome criterion7() {
    Outcome o;
    PreparedJob job = prepare_job(planes_job(2, 2, 2, 2, 2));
    const Ring& r = job.full;
    auto ux = essential_transversality(ideal_of(r, {"u", "x", "w2", "w3"}), job.p);
    o.require(!ux.passes.empty() && !ux.passes[0] && !ux.verdict, "V(u,x) verdict");
    auto yz = essential_transversality(ideal_of(r, {"y", "z", "w0", "w1"}), job.p);
    o.require(yz.passes == std::vector<bool>(4, true) && yz.verdict, "V(y,z) verdict");
    auto pt = essential_transversality(ideal_of(r, {"u", "x", "y", "z"}), job.p);
    o.require(pt.verdict, "point verdict");

    Report s7 = run_pipeline(planes_job(2, 2, 2, 2, 2));
    o.require(s7.json["certificate"]["status"] == "certified" && s7.json["certificate"]["d"] == 1, "crossed planes certified");

    json bad = {{"variables", {"x", "y", "t"}},
                {"strata", {{{"name", "space"}, {"closure", json::array()}, {"morse", {{"3", "Z"}}}}}},
                {"f", "x^2*y^2"}};
    JobConfig cfg = config_from_json(bad);
    Report failed = run_pipeline(cfg);
    o.require(failed.json["certificate"]["status"] == "failed" && failed.exit_code == 3, "bad coordinates fail");
    RunOptions retry;
    retry.retries = 3;
    Report flipped = run_pipeline(cfg, retry);
    o.require(flipped.json["certificate"]["status"] == "certified" && flipped.exit_code == 0, "retry certifies");
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::vector<std::pair<std::string, JobConfig>> jobs = {{"planes", planes_job(2, 3, 2, 2, 3)},
                                                           {"cusp", plane_job("x^2 + y^3")},
                                                           {"square", plane_job("y^2")}};
    for (const auto& [name, cfg] : jobs) o.require(run_pipeline(cfg).json.dump(2) == run_pipeline(cfg).json.dump(2), name);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 golden reproduction of the three parameter sets", criterion1},
        {"2 Milnor numbers against the Jacobian algebra", criterion2},
        {"3 non-isolated and regular examples", criterion3},
        {"4 isolated stalk against lambda^0", criterion4},
        {"5 polar modules by two routes", criterion5},
        {"6 property suites", criterion6},
        {"7 genericity verdicts and retry", criterion7},
        {"8 byte-identical reports", criterion8},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << ":" << o.detail.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
