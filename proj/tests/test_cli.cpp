#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "levo/errors.hpp"
#include "levo/pipeline.hpp"

using namespace levo;
using nlohmann::json;

namespace {

std::string read_job(const std::string& name) {
    std::ifstream in(std::string(LEVO_JOBS_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

JobConfig plane_job(const std::string& f) {
    json j = {{"variables", {"x", "y"}},
              {"strata", {{{"name", "plane"}, {"closure", json::array()}, {"morse", {{"2", "Z"}}}}}},
              {"f", f}};
    return config_from_json(j);
}

long long det(Matrix m) {
    const std::size_t n = m.size();
    mpq_class d = 1;
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) a[i][k] = static_cast<long>(m[i][k]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            mpq_class q = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= q * a[c][k];
        }
    }
    return d.get_num().get_si();
}

std::map<std::string, long long> ranks(const json& report) {
    std::map<std::string, long long> out;
    for (const auto& [k, dk] : report["degrees"].items()) {
        if (!dk.contains("lambda_modules")) continue;
        for (const auto& [j, m] : dk["lambda_modules"].items()) out[k + "/" + j] = parse_abgroup(m).rank;
    }
    return out;
}

}  // namespace

TEST(Config, ParsesJobs) {
    auto c = parse_config(read_job("planes_22222.json"));
    EXPECT_EQ(c.variables.size(), 4u);
    EXPECT_EQ(c.strata.size(), 3u);
    EXPECT_EQ(c.cotangent, (std::vector<std::string>{"w0", "w1", "w2", "w3"}));
    EXPECT_FALSE(c.polar_mode());
    auto round = config_from_json(config_to_json(c));
    EXPECT_EQ(config_to_json(round), config_to_json(c));
}

TEST(Config, PolarModeWithoutF) {
    json j = {{"variables", {"x", "y"}},
              {"strata", {{{"name", "line"}, {"closure", {"y"}}, {"morse", {{"1", "Z"}}}}}}};
    EXPECT_TRUE(config_from_json(j).polar_mode());
}

TEST(Config, Errors) {
    EXPECT_THROW(parse_config("{"), InputError);
    EXPECT_THROW(parse_config(R"({"strata": []})"), InputError);
    EXPECT_THROW(parse_config(R"({"variables": ["x"], "f": "x"})"), InputError);
    json j = {{"variables", {"x", "y"}},
              {"strata", {{{"name", "plane"}, {"closure", json::array()}, {"morse", {{"2", "Z"}}}}}},
              {"coordinates", {{1, 2}, {2, 4}}}};
    try {
        config_from_json(j);
        FAIL() << "singular matrix accepted";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("coordinates"), std::string::npos);
    }
    j["coordinates"] = {"x", "q"};
    EXPECT_THROW(config_from_json(j), InputError);
    j.erase("coordinates");
    j["point"] = {0};
    EXPECT_THROW(config_from_json(j), InputError);
    EXPECT_THROW(parse_abgroup("Q^2"), InputError);
}

TEST(Config, AbGroupStrings) {
    EXPECT_TRUE(parse_abgroup("0").is_zero());
    EXPECT_EQ(parse_abgroup("Z^3").rank, 3);
    EXPECT_EQ(parse_abgroup("Z^2 + Z/2").str(), "Z^2 + Z/2");
    EXPECT_EQ(parse_abgroup("Z/2 + Z/3").str(), parse_abgroup("Z/6").str());
}

TEST(Property, RandomMatricesInvertible) {
    for (std::uint64_t s = 1; s <= 300; ++s) {
        int n = 2 + static_cast<int>(s % 3);
        Matrix m = random_invertible_matrix(n, s);
        long long d = det(m);
        EXPECT_NE(d, 0) << "seed " << s;
        EXPECT_EQ(m, random_invertible_matrix(n, s));
    }
}

TEST(Randomize, SeedZeroIsIdentity) {
    auto c = plane_job("x^2 + y^3");
    EXPECT_EQ(config_to_json(randomize_coordinates(c, 0)), config_to_json(c));
    EXPECT_EQ(config_to_json(randomize_coordinates(c, 9)), config_to_json(randomize_coordinates(c, 9)));
    EXPECT_NE(randomize_coordinates(c, 9).coordinates, c.coordinates);
}

TEST(Pipeline, ExitCodes) {
    EXPECT_EQ(run_pipeline(parse_config(read_job("cusp.json"))).exit_code, 0);
    EXPECT_EQ(run_pipeline(parse_config(read_job("planes_22222.json"))).exit_code, 0);
    auto bad = run_pipeline(parse_config(read_job("bad_coordinates.json")));
    EXPECT_EQ(bad.exit_code, 3);
    EXPECT_EQ(bad.json["certificate"]["status"], "failed");
    RunOptions retry;
    retry.retries = 3;
    auto fixed = run_pipeline(parse_config(read_job("bad_coordinates.json")), retry);
    EXPECT_EQ(fixed.exit_code, 0);
    EXPECT_GE(fixed.json["attempts"].size(), 2u);

    json j = {{"variables", {"x", "y"}},
              {"strata", {{{"name", "line"}, {"closure", {"x", "y"}}, {"dimension", 1}, {"morse", {{"1", "Z"}}}}}}};
    EXPECT_EQ(run_pipeline(config_from_json(j)).exit_code, 4);
}

TEST(Pipeline, CrossedPlanesReport) {
    auto rep = run_pipeline(parse_config(read_job("planes_22222.json")));
    EXPECT_EQ(rep.json["degrees"]["2"]["lambda_modules"]["1"], "Z^2");
    EXPECT_EQ(rep.json["degrees"]["2"]["lambda_modules"]["0"], "Z^4");
    EXPECT_EQ(rep.json["degrees"]["1"]["lambda_modules"]["0"], "Z");
    EXPECT_EQ(rep.json["certificate"]["d"], 1);
    EXPECT_EQ(rep.json["euler"]["milnor_fiber_reduced_euler"], -1);
    EXPECT_NE(rep.text.find("^2lambda^1(p) = Z^2"), std::string::npos);
}

TEST(Pipeline, GeccCommandSkipsVogel) {
    RunOptions o;
    o.command = Command::Gecc;
    auto rep = run_pipeline(parse_config(read_job("cusp.json")), o);
    EXPECT_EQ(rep.exit_code, 0);
    EXPECT_TRUE(rep.json.contains("gecc"));
}

TEST(Pipeline, ByteIdenticalJson) {
    for (const char* job : {"cusp.json", "planes_22222.json", "bad_coordinates.json"}) {
        auto c = parse_config(read_job(job));
        EXPECT_EQ(run_pipeline(c).json.dump(2), run_pipeline(c).json.dump(2)) << job;
    }
}

TEST(Property, CoordinateInvariance) {
    const std::vector<std::string> fs = {"x^2 + y^3", "x^2 + y^2", "x*y", "x^3 + y^3", "x^2*y + y^4"};
    int compared = 0;
    for (const auto& f : fs) {
        auto base = run_pipeline(plane_job(f));
        ASSERT_EQ(base.exit_code, 0) << f;
        for (std::uint64_t s = 1; s <= 8; ++s) {
            auto moved = run_pipeline(randomize_coordinates(plane_job(f), s));
            if (moved.exit_code != 0) continue;
            ++compared;
            EXPECT_EQ(moved.json["certificate"]["d"], base.json["certificate"]["d"]) << f << " seed " << s;
            EXPECT_EQ(moved.json["euler"]["signed_sum"], base.json["euler"]["signed_sum"]) << f << " seed " << s;
            EXPECT_EQ(moved.json["critical_locus"].size(), base.json["critical_locus"].size()) << f;
            EXPECT_EQ(ranks(moved.json), ranks(base.json)) << f << " seed " << s;
        }
    }
    EXPECT_GE(compared, 30);
}
