#include "levo/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <regex>
#include <set>
#include <sstream>

#include "levo/decompose.hpp"
#include "levo/errors.hpp"
#include "levo/parse.hpp"
#include "levo/random.hpp"

namespace levo {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const std::string& key, const std::string& path) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(path + "." + key + ": " + e.what());
    }
}

mpq_class parse_rational(const json& v, const std::string& path) {
    std::string s;
    if (v.is_number_integer())
        s = std::to_string(v.get<long long>());
    else if (v.is_string())
        s = v.get<std::string>();
    else
        throw InputError(path + ": expected an integer or a rational string");
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError(path + ": not a rational number: " + s);
    }
}

std::map<int, AbGroup> parse_morse(const json& j, const std::string& path) {
    if (!j.is_object()) throw InputError(path + ": expected an object of degree -> group");
    std::map<int, AbGroup> out;
    for (const auto& [k, v] : j.items()) {
        int deg = 0;
        try {
            std::size_t used = 0;
            deg = std::stoi(k, &used);
            if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            throw InputError(path + ": degree '" + k + "' is not an integer");
        }
        if (!v.is_string()) throw InputError(path + "." + k + ": expected a group string");
        out[deg] = parse_abgroup(v.get<std::string>());
    }
    return out;
}

std::vector<std::string> strings(const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path + ": expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw InputError(path + "[" + std::to_string(i) + "]: expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

Matrix identity(int n) {
    Matrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    int n = static_cast<int>(a.size());
    Matrix c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Inverse over Q; empty when singular.
std::vector<std::vector<mpq_class>> inverse(const Matrix& m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n && piv < 0; ++r)
            if (a[r][c] != 0) piv = r;
        if (piv < 0) return {};
        std::swap(a[piv], a[c]);
        mpq_class inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class t = a[r][c];
            for (int k = 0; k < 2 * n; ++k) a[r][k] -= t * a[c][k];
        }
    }
    std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

bool is_permutation(const Matrix& m) {
    for (const auto& row : m) {
        int ones = 0;
        for (long long x : row) {
            if (x == 1) ++ones;
            else if (x != 0) return false;
        }
        if (ones != 1) return false;
    }
    return true;
}

}  // namespace

PreparedJob prepare_job(const JobConfig& cfg) {
    const int n1 = static_cast<int>(cfg.variables.size());
    Ring old_full = PolyRing::make(cfg.variables, cfg.cotangent);
    Ring old_base = old_full->base_ring();
    auto minv = inverse(cfg.coordinates);
    if (minv.empty()) throw InputError("coordinates: matrix is not invertible");

    std::vector<std::string> names;
    if (is_permutation(cfg.coordinates)) {
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j)
                if (cfg.coordinates[i][j] == 1) names.push_back(cfg.variables[j]);
    } else {
        std::set<std::string> taken(cfg.variables.begin(), cfg.variables.end());
        taken.insert(cfg.cotangent.begin(), cfg.cotangent.end());
        std::string stem = "c";
        auto clash = [&](const std::string& s) {
            for (int i = 0; i < n1; ++i)
                if (taken.count(s + std::to_string(i))) return true;
            return false;
        };
        while (clash(stem)) stem += "c";
        for (int i = 0; i < n1; ++i) names.push_back(stem + std::to_string(i));
    }
    PreparedJob s;
    s.full = PolyRing::make(names, cfg.cotangent);
    s.base = s.full->base_ring();

    std::vector<Polynomial> images;
    for (int i = 0; i < n1; ++i) {
        Polynomial z(s.full);
        for (int k = 0; k < n1; ++k)
            if (minv[i][k] != 0) z += Polynomial::variable(s.full, k) * minv[i][k];
        images.push_back(z);
    }
    for (int i = 0; i < n1; ++i) {
        Polynomial w(s.full);
        for (int k = 0; k < n1; ++k)
            if (cfg.coordinates[k][i] != 0)
                w += Polynomial::variable(s.full, s.full->cot_var(k)) * mpq_class(static_cast<long>(cfg.coordinates[k][i]));
        images.push_back(w);
    }
    auto convert = [&](const std::string& text, const Ring& ring, const std::string& path) {
        Polynomial g;
        try {
            g = parse_polynomial(text, ring);
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        }
        Polynomial h = g.map_to(old_full).compose(images);
        return ring->has_cotangent() ? h : h.map_to(s.base);
    };
    auto convert_all = [&](const std::vector<std::string>& gens, const Ring& ring, const std::string& path) {
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < gens.size(); ++i)
            out.push_back(convert(gens[i], ring, path + "[" + std::to_string(i) + "]"));
        return out;
    };

    s.spec.ring = s.full;
    if (cfg.gecc) {
        GradedEnrichedCycle G(s.full);
        for (const auto& [k, comps] : *cfg.gecc) {
            for (std::size_t i = 0; i < comps.size(); ++i) {
                std::string path = "gecc." + std::to_string(k) + "[" + std::to_string(i) + "]";
                Ideal P(s.full, convert_all(comps[i].ideal, old_full, path + ".ideal"));
                auto split = split_components(P);
                if (split.size() != 1 || split[0].ideal != P.canonical())
                    throw InputError(path + ": component ideal is not prime");
                G.add(k, P, comps[i].coeff, split[0].certified);
            }
        }
        s.spec.direct = G;
    } else {
        for (std::size_t i = 0; i < cfg.strata.size(); ++i) {
            const auto& sc = cfg.strata[i];
            std::string path = "strata[" + std::to_string(i) + "]";
            StratumSpec st;
            st.name = sc.name.empty() ? path : sc.name;
            st.closure = Ideal(s.base, convert_all(sc.closure, old_base, path + ".closure"));
            if (sc.conormal) st.conormal = Ideal(s.full, convert_all(*sc.conormal, old_full, path + ".conormal"));
            st.dimension = sc.dimension;
            st.morse = sc.morse;
            s.spec.strata.push_back(std::move(st));
        }
    }
    s.f = cfg.f ? convert(*cfg.f, old_base, "f") : Polynomial(s.base);
    for (int i = 0; i < n1; ++i) {
        mpq_class v = 0;
        for (int k = 0; k < n1; ++k) v += mpq_class(static_cast<long>(cfg.coordinates[i][k])) * cfg.point[k];
        s.p.push_back(v);
    }
    for (std::size_t i = 0; i < cfg.af_partition.size(); ++i)
        s.af_partition.emplace_back(
            s.base, convert_all(cfg.af_partition[i], old_base, "af_partition[" + std::to_string(i) + "]"));
    return s;
}

namespace {

json ideal_json(const Ideal& I) { return I.canonical().gen_strings(); }

json cycle_json(const EnrichedCycle& E) {
    json arr = json::array();
    for (const auto& [key, c] : E.components())
        arr.push_back({{"ideal", ideal_json(c.prime)},
                       {"variety", variety_str(c.prime)},
                       {"coefficient", c.coeff.str()},
                       {"certified", c.certified}});
    return arr;
}

json ideals_json(const std::vector<Ideal>& v) {
    json arr = json::array();
    for (const auto& I : v) arr.push_back(variety_str(I));
    return arr;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

json matrix_json(const Matrix& m) { return m; }

int exit_for(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return 0;
        case CertStatus::ProperUncertified: return 2;
        case CertStatus::Failed: return 3;
    }
    return 5;
}

struct Attempt {
    json body;
    std::vector<std::string> text;
    CertStatus status = CertStatus::Failed;
};

std::string deg_label(int k, const std::string& sym, int j) {
    return "^" + std::to_string(k) + sym + "^" + std::to_string(j);
}

Attempt attempt(const JobConfig& cfg, const RunOptions& opts) {
    Attempt a;
    auto& out = a.body;
    auto& txt = a.text;
    PreparedJob s = prepare_job(cfg);
    validate_spec(s.spec, cfg.seed);
    Rng rng(cfg.seed);

    std::vector<std::string> names = s.base->names();
    out["coordinates"] = {{"names", names}, {"matrix", matrix_json(cfg.coordinates)}};
    json point = json::array();
    for (const auto& x : s.p) point.push_back(rational_str(x));
    out["point"] = point;
    out["f"] = s.f.str();
    txt.push_back("coordinates: (" + [&] {
        std::string r;
        for (std::size_t i = 0; i < names.size(); ++i) r += (i ? ", " : "") + names[i];
        return r;
    }() + ")");
    txt.push_back("f = " + (s.f.is_zero() ? std::string("0") : s.f.str()));

    GradedEnrichedCycle G = build_gecc(s.spec, rng.fork());
    json gj = json::object();
    for (const auto& [k, E] : G.degrees()) {
        gj[std::to_string(k)] = cycle_json(E);
        txt.push_back("gecc^" + std::to_string(k) + " = " + E.str());
    }
    out["gecc"] = gj;
    Support sup = support_of_gecc(G);
    json sj = {{"total", ideals_json(sup.total)}, {"essential", ideals_json(sup.essential)}};
    for (const auto& [k, v] : sup.per_degree) sj["per_degree"][std::to_string(k)] = ideals_json(v);
    out["support"] = sj;
    {
        std::string line = "support:";
        for (const auto& I : sup.total) line += " " + variety_str(I);
        txt.push_back(line);
    }
    if (opts.command == Command::Gecc) {
        a.status = CertStatus::Certified;
        return a;
    }

    std::set<std::string> warnings;
    for (const auto& [k, E] : G.degrees()) warnings.insert(E.warnings().begin(), E.warnings().end());

    // Transversality of every visible conormal.
    json tj = json::array();
    {
        std::vector<std::pair<std::string, Ideal>> cons;
        if (s.spec.strata_mode()) {
            for (const auto& st : s.spec.strata)
                if (st.visible()) cons.emplace_back(st.name, *st.conormal);
        } else {
            std::set<std::string> seen;
            for (const auto& [k, E] : G.degrees())
                for (const auto& [key, c] : E.components())
                    if (seen.insert(key).second) cons.emplace_back(variety_str(c.prime), c.prime);
        }
        for (const auto& [name, con] : cons) {
            auto t = essential_transversality(con, s.p, rng.fork());
            tj.push_back({{"stratum", name}, {"passes", t.passes}, {"verdict", t.verdict}});
            std::string flags;
            for (bool b : t.passes) flags += b ? "+" : "-";
            txt.push_back("transversality " + name + ": " + flags + (t.verdict ? " (transverse)" : " (not transverse)"));
        }
    }
    out["transversality"] = tj;

    std::vector<Ideal> critical;
    if (!s.f.is_zero()) {
        json cj = json::array();
        for (const auto& c : critical_locus(G, s.f, rng.fork())) {
            critical.push_back(c.component);
            json e = {{"variety", variety_str(c.component)}, {"ideal", ideal_json(c.component)}};
            e["value"] = c.value ? json(rational_str(*c.value)) : json(nullptr);
            cj.push_back(e);
            txt.push_back("critical: " + variety_str(c.component) +
                          (c.value ? " at value " + rational_str(*c.value) : std::string(" (value varies)")));
        }
        out["critical_locus"] = cj;
    }

    LevoCycles cycles;
    LevoModules modules;
    std::optional<StageFailure> failure;
    json dj = json::object();
    for (const auto& [k, E] : G.degrees()) {
        json dk;
        std::string ks = std::to_string(k);
        try {
            auto D = vogel_decompose(E, s.f, rng.fork(), k);
            json pj = json::object(), delj = json::object();
            for (std::size_t j = 0; j < D.pi.size(); ++j) pj[std::to_string(j)] = cycle_json(D.pi[j]);
            for (std::size_t j = 0; j < D.delta.size(); ++j) {
                delj[std::to_string(j)] = cycle_json(D.delta[j]);
                if (!D.delta[j].empty())
                    txt.push_back(deg_label(k, "Delta", static_cast<int>(j)) + " = " + D.delta[j].str());
            }
            dk["pi"] = pj;
            dk["delta"] = delj;
            dk["dropped"] = D.dropped;
            dk["set_identity"] = D.set_identity;
            json logj = json::array();
            for (const auto& r : D.log)
                logj.push_back({{"source", r.source},
                                {"component", r.component},
                                {"multiplicity", r.multiplicity},
                                {"seeds", r.seeds}});
            dk["intersections"] = logj;
            warnings.insert(D.warnings.begin(), D.warnings.end());
            if (!D.set_identity) throw InternalError("degree " + ks + ": Vogel set identity violated");
            cycles[k] = levo_cycles(D, s.f);
            json lj = json::object();
            for (const auto& [j, L] : cycles[k]) {
                lj[std::to_string(j)] = cycle_json(L);
                if (!L.empty()) txt.push_back(deg_label(k, "Lambda", j) + " = " + L.str());
            }
            dk["lambda_cycles"] = lj;
            modules[k] = levo_modules(cycles[k], s.p, rng.fork());
            json mj = json::object();
            for (const auto& [j, m] : modules[k]) {
                mj[std::to_string(j)] = m.str();
                txt.push_back(deg_label(k, "lambda", j) + "(p) = " + m.str());
            }
            dk["lambda_modules"] = mj;
        } catch (const ImproperIntersection& e) {
            if (!failure) failure = StageFailure{"degree " + ks + ", " + e.stage(), e.component()};
            dk["failure"] = {{"stage", e.stage()}, {"component", e.component()}};
            txt.push_back("degree " + ks + ": improper intersection at " + e.stage() + " on " + e.component());
        } catch (const NonGenericSlice& e) {
            if (!failure) failure = StageFailure{"degree " + ks + ", slice", "multiplicity"};
            dk["failure"] = {{"stage", "slice"}, {"component", e.what()}};
            txt.push_back("degree " + ks + ": " + e.what());
        }
        dj[ks] = dk;
    }

    GenericityCertificate cert = isolating_certificate(cycles, s.p, failure, rng.fork());
    if (failure) {
        if (s.f.is_zero()) critical = sup.total;
        for (const auto& C : critical) cert.d = std::max(cert.d, dimension_at(C, s.p, cfg.seed));
        cert.checks[0] = "d = " + std::to_string(cert.d);
    }
    if (cert.status == CertStatus::ProperUncertified && !s.af_partition.empty() && !s.f.is_zero()) {
        bool all = true;
        for (const auto& S : s.af_partition)
            all = all && essential_transversality(conormal_ideal(S, s.full, cfg.seed), s.p, cfg.seed).verdict;
        if (all) {
            cert.status = CertStatus::Certified;
            cert.checks.push_back("coordinates essentially transverse to every V(f) stratum");
        }
    }
    a.status = cert.status;
    out["certificate"] = {{"status", status_name(cert.status)},
                          {"d", cert.d},
                          {"failing_stage", cert.failing_stage},
                          {"failing_component", cert.failing_component},
                          {"checks", cert.checks}};
    txt.push_back("certificate: " + status_name(cert.status) + ", d = " + std::to_string(cert.d) +
                  (cert.failing_stage.empty() ? "" : ", failed at " + cert.failing_stage + " on " +
                                                         cert.failing_component));

    if (!failure) {
        for (const auto& [k, mods] : modules) {
            auto z = zawatsky_complex(k, mods, cert.d);
            json terms = json::array();
            std::string line = "Z-complex degree " + std::to_string(k) + ": 0";
            for (const auto& [j, A] : z.terms) {
                terms.push_back({{"j", j}, {"module", A.str()}});
                line += " -> " + A.str();
            }
            txt.push_back(line + " -> 0");
            dj[std::to_string(k)]["zawatsky"] = {{"terms", terms}, {"constraints", z.constraints}, {"euler", z.euler}};
        }
        auto e = euler_check(modules, cfg.expected_euler);
        out["euler"] = {{"signed_sum", e.signed_sum},
                        {"milnor_fiber_reduced_euler", e.milnor_fiber_reduced_euler},
                        {"expected", e.expected ? json(*e.expected) : json(nullptr)},
                        {"matches", e.matches}};
        txt.push_back("euler: signed sum " + std::to_string(e.signed_sum) + ", reduced Milnor fibre " +
                      std::to_string(e.milnor_fiber_reduced_euler));
        if (!e.matches) warnings.insert("Euler value differs from the expected value");

        if (cert.d <= 0 && !s.f.is_zero()) {
            try {
                auto stalk = isolated_vanishing_stalk(G, s.f, s.p, rng.fork());
                bool agree = true;
                json st = json::object();
                for (const auto& [k, E] : G.degrees()) {
                    AbGroup lam0 = modules[k].count(0) ? modules[k].at(0) : AbGroup{};
                    AbGroup direct = stalk.count(k) ? stalk.at(k) : AbGroup{};
                    st[std::to_string(k)] = direct.str();
                    agree = agree && lam0 == direct;
                }
                out["isolated_stalk"] = {{"modules", st}, {"agrees_with_lambda0", agree}};
                if (!agree) warnings.insert("isolated stalk formula disagrees with lambda^0");
            } catch (const ImproperIntersection& e) {
                warnings.insert(std::string("isolated stalk unavailable: ") + e.what());
            }
        }
    }
    out["degrees"] = dj;

    json th = json::object();
    for (int m = 0; m < s.base->nvars(); ++m) {
        auto t = theta_sets(G, m, rng.fork());
        th[std::to_string(m)] = {{"theta", ideals_json(t.theta)}, {"gamma", ideals_json(t.gamma)}};
    }
    out["theta"] = th;
    for (const auto& [k, E] : G.degrees())
        for (const auto& [key, c] : E.components())
            if (!c.certified) warnings.insert("component " + variety_str(c.prime) + " is not certified prime");
    if (opts.command == Command::Check) {
        json keep;
        for (const char* key : {"coordinates", "point", "f", "gecc", "support", "transversality", "certificate"})
            if (out.contains(key)) keep[key] = out[key];
        out = keep;
        std::vector<std::string> t2;
        for (const auto& line : txt)
            if (line.rfind("gecc", 0) == 0 || line.rfind("support", 0) == 0 || line.rfind("transversality", 0) == 0 ||
                line.rfind("certificate", 0) == 0 || line.rfind("coordinates", 0) == 0)
                t2.push_back(line);
        txt = t2;
    }
    out["warnings"] = std::vector<std::string>(warnings.begin(), warnings.end());
    for (const auto& w : warnings) txt.push_back("warning: " + w);
    return a;
}

}  // namespace

AbGroup parse_abgroup(const std::string& text) {
    static const std::regex term(R"(\s*(?:Z(?:\^(\d+))?|Z/(\d+))\s*)");
    std::string t = text;
    if (std::regex_match(t, std::regex(R"(\s*0\s*)"))) return {};
    AbGroup g;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, '+')) {
        std::smatch m;
        if (!std::regex_match(part, m, term)) throw InputError("not an abelian group: " + text);
        if (m[2].matched)
            g = ab_dsum(g, AbGroup::from_orders(0, {std::stoll(m[2].str())}));
        else
            g = ab_dsum(g, AbGroup::free(m[1].matched ? std::stoll(m[1].str()) : 1));
    }
    return g;
}

JobConfig config_from_json(const json& j) {
    if (!j.is_object()) throw InputError("config: expected a JSON object");
    JobConfig cfg;
    cfg.variables = strings(j.contains("variables") ? j["variables"] : json(), "variables");
    const int n1 = static_cast<int>(cfg.variables.size());
    if (n1 == 0) throw InputError("variables: at least one variable is required");
    if (j.contains("cotangent")) {
        cfg.cotangent = strings(j["cotangent"], "cotangent");
        if (static_cast<int>(cfg.cotangent.size()) != n1)
            throw InputError("cotangent: needs one name per variable");
    } else {
        for (int i = 0; i < n1; ++i) cfg.cotangent.push_back("w" + std::to_string(i));
    }
    try {
        PolyRing::make(cfg.variables, cfg.cotangent);
    } catch (const InputError& e) {
        throw InputError(std::string("variables: ") + e.what());
    }
    bool has_strata = j.contains("strata"), has_gecc = j.contains("gecc");
    if (has_strata == has_gecc) throw InputError("config: give exactly one of 'strata' or 'gecc'");
    if (has_strata) {
        if (!j["strata"].is_array()) throw InputError("strata: expected an array");
        for (std::size_t i = 0; i < j["strata"].size(); ++i) {
            const json& s = j["strata"][i];
            std::string path = "strata[" + std::to_string(i) + "]";
            if (!s.is_object()) throw InputError(path + ": expected an object");
            StratumConfig sc;
            if (s.contains("name")) sc.name = field<std::string>(s, "name", path);
            if (!s.contains("closure")) throw InputError(path + ".closure: missing");
            sc.closure = strings(s["closure"], path + ".closure");
            if (s.contains("conormal")) sc.conormal = strings(s["conormal"], path + ".conormal");
            if (s.contains("dimension")) sc.dimension = field<int>(s, "dimension", path);
            if (!s.contains("morse")) throw InputError(path + ".morse: missing");
            sc.morse = parse_morse(s["morse"], path + ".morse");
            cfg.strata.push_back(std::move(sc));
        }
    } else {
        const json& g = j["gecc"];
        if (!g.is_object()) throw InputError("gecc: expected an object of degree -> components");
        std::map<int, std::vector<ComponentConfig>> m;
        for (const auto& [k, comps] : g.items()) {
            std::string path = "gecc." + k;
            int deg = 0;
            try {
                deg = std::stoi(k);
            } catch (const std::exception&) {
                throw InputError(path + ": degree is not an integer");
            }
            if (!comps.is_array()) throw InputError(path + ": expected an array");
            for (std::size_t i = 0; i < comps.size(); ++i) {
                std::string cp = path + "[" + std::to_string(i) + "]";
                if (!comps[i].is_object() || !comps[i].contains("ideal"))
                    throw InputError(cp + ": expected an object with 'ideal'");
                ComponentConfig cc;
                cc.ideal = strings(comps[i]["ideal"], cp + ".ideal");
                cc.coeff = parse_abgroup(comps[i].contains("coefficient")
                                             ? field<std::string>(comps[i], "coefficient", cp)
                                             : std::string("Z"));
                m[deg].push_back(std::move(cc));
            }
        }
        cfg.gecc = std::move(m);
    }
    if (j.contains("f") && !j["f"].is_null()) cfg.f = field<std::string>(j, "f", "config");
    if (j.contains("point")) {
        if (!j["point"].is_array() || static_cast<int>(j["point"].size()) != n1)
            throw InputError("point: needs one coordinate per variable");
        for (std::size_t i = 0; i < j["point"].size(); ++i)
            cfg.point.push_back(parse_rational(j["point"][i], "point[" + std::to_string(i) + "]"));
    } else {
        cfg.point.assign(n1, 0);
    }
    cfg.coordinates = identity(n1);
    if (j.contains("coordinates")) {
        const json& c = j["coordinates"];
        if (!c.is_array() || static_cast<int>(c.size()) != n1)
            throw InputError("coordinates: needs " + std::to_string(n1) + " entries");
        if (c[0].is_string()) {
            auto order = strings(c, "coordinates");
            Matrix m(n1, std::vector<long long>(n1, 0));
            for (int i = 0; i < n1; ++i) {
                auto it = std::find(cfg.variables.begin(), cfg.variables.end(), order[i]);
                if (it == cfg.variables.end()) throw InputError("coordinates[" + std::to_string(i) + "]: unknown variable");
                m[i][it - cfg.variables.begin()] = 1;
            }
            cfg.coordinates = m;
        } else {
            for (int i = 0; i < n1; ++i) {
                std::string path = "coordinates[" + std::to_string(i) + "]";
                if (!c[i].is_array() || static_cast<int>(c[i].size()) != n1)
                    throw InputError(path + ": expected a row of " + std::to_string(n1) + " integers");
                for (int k = 0; k < n1; ++k) {
                    if (!c[i][k].is_number_integer()) throw InputError(path + ": entries must be integers");
                    cfg.coordinates[i][k] = c[i][k].get<long long>();
                }
            }
        }
        if (inverse(cfg.coordinates).empty()) throw InputError("coordinates: matrix is not invertible");
    }
    if (j.contains("seed")) cfg.seed = field<std::uint64_t>(j, "seed", "config");
    if (j.contains("format")) {
        cfg.format = field<std::string>(j, "format", "config");
        if (cfg.format != "json" && cfg.format != "text") throw InputError("format: expected 'json' or 'text'");
    }
    if (j.contains("expected_euler")) cfg.expected_euler = field<long long>(j, "expected_euler", "config");
    if (j.contains("af_partition")) {
        if (!j["af_partition"].is_array()) throw InputError("af_partition: expected an array");
        for (std::size_t i = 0; i < j["af_partition"].size(); ++i)
            cfg.af_partition.push_back(strings(j["af_partition"][i], "af_partition[" + std::to_string(i) + "]"));
    }
    return cfg;
}

JobConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

json config_to_json(const JobConfig& cfg) {
    json j;
    j["variables"] = cfg.variables;
    j["cotangent"] = cfg.cotangent;
    if (cfg.gecc) {
        json g = json::object();
        for (const auto& [k, comps] : *cfg.gecc)
            for (const auto& c : comps) g[std::to_string(k)].push_back({{"ideal", c.ideal}, {"coefficient", c.coeff.str()}});
        j["gecc"] = g;
    } else {
        json arr = json::array();
        for (const auto& s : cfg.strata) {
            json e = {{"name", s.name}, {"closure", s.closure}};
            if (s.conormal) e["conormal"] = *s.conormal;
            if (s.dimension >= 0) e["dimension"] = s.dimension;
            json m = json::object();
            for (const auto& [k, A] : s.morse) m[std::to_string(k)] = A.str();
            e["morse"] = m;
            arr.push_back(e);
        }
        j["strata"] = arr;
    }
    if (cfg.f) j["f"] = *cfg.f;
    json pt = json::array();
    for (const auto& x : cfg.point) pt.push_back(rational_str(x));
    j["point"] = pt;
    j["coordinates"] = cfg.coordinates;
    j["seed"] = cfg.seed;
    j["format"] = cfg.format;
    if (cfg.expected_euler) j["expected_euler"] = *cfg.expected_euler;
    if (!cfg.af_partition.empty()) j["af_partition"] = cfg.af_partition;
    return j;
}

Matrix random_invertible_matrix(int n, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        Matrix m(n, std::vector<long long>(n));
        for (auto& row : m)
            for (auto& x : row) x = rng.uniform(-5, 5);
        if (!inverse(m).empty()) return m;
    }
}

JobConfig randomize_coordinates(const JobConfig& cfg, std::uint64_t seed) {
    if (seed == 0) return cfg;
    JobConfig out = cfg;
    out.coordinates = multiply(random_invertible_matrix(static_cast<int>(cfg.variables.size()), seed), cfg.coordinates);
    return out;
}

Report run_pipeline(const JobConfig& cfg, const RunOptions& opts) {
    Report rep;
    json& out = rep.json;
    out["config"] = config_to_json(cfg);
    out["seed"] = cfg.seed;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> text;
    try {
        JobConfig cur = cfg;
        Attempt a = attempt(cur, opts);
        json attempts = json::array();
        attempts.push_back({{"coordinate_seed", 0}, {"status", status_name(a.status)}});
        Rng retry_rng(cfg.seed ^ 0x5eedULL);
        for (int r = 0; r < opts.retries && a.status == CertStatus::Failed && opts.command != Command::Gecc; ++r) {
            std::uint64_t s = (retry_rng.next() % 1000000) + 1;
            cur = randomize_coordinates(cfg, s);
            a = attempt(cur, opts);
            attempts.push_back({{"coordinate_seed", s}, {"status", status_name(a.status)}});
            text.push_back("retry with coordinate seed " + std::to_string(s) + ": " + status_name(a.status));
        }
        for (auto& [key, value] : a.body.items()) out[key] = value;
        if (opts.command != Command::Gecc) out["attempts"] = attempts;
        text.insert(text.begin(), a.text.begin(), a.text.end());
        rep.exit_code = opts.command == Command::Gecc ? 0 : exit_for(a.status);
    } catch (const InputError& e) {
        out["error"] = {{"kind", "input"}, {"message", e.what()}};
        text.push_back(std::string("input error: ") + e.what());
        rep.exit_code = 4;
    } catch (const ImproperIntersection& e) {
        out["error"] = {{"kind", "genericity"}, {"message", e.what()}};
        text.push_back(std::string("genericity failure: ") + e.what());
        rep.exit_code = 3;
    } catch (const NonGenericSlice& e) {
        out["error"] = {{"kind", "genericity"}, {"message", e.what()}};
        text.push_back(std::string("genericity failure: ") + e.what());
        rep.exit_code = 3;
    } catch (const std::exception& e) {
        out["error"] = {{"kind", "internal"}, {"message", e.what()}};
        text.push_back(std::string("internal error: ") + e.what());
        rep.exit_code = 5;
    }
    out["exit_code"] = rep.exit_code;
    if (opts.timing)
        out["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& line : text) rep.text += line + "\n";
    return rep;
}

}  // namespace levo
