#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "levo/diagnostics.hpp"

namespace levo {

using Matrix = std::vector<std::vector<long long>>;

struct StratumConfig {
    std::string name;
    std::vector<std::string> closure;
    std::optional<std::vector<std::string>> conormal;
    int dimension = -1;
    std::map<int, AbGroup> morse;
};

struct ComponentConfig {
    std::vector<std::string> ideal;
    AbGroup coeff;
};

struct JobConfig {
    std::vector<std::string> variables;
    std::vector<std::string> cotangent;  // defaults to w0..wn
    std::vector<StratumConfig> strata;
    std::optional<std::map<int, std::vector<ComponentConfig>>> gecc;  // direct mode
    std::optional<std::string> f;                                    // absent: polar mode
    std::vector<mpq_class> point;
    Matrix coordinates;  // new z = M z; identity by default
    std::uint64_t seed = 1;
    std::string format = "json";
    std::optional<long long> expected_euler;
    std::vector<std::vector<std::string>> af_partition;  // closures of the V(f) strata

    bool polar_mode() const { return !f.has_value(); }
};

// The job transported into its coordinates.  Coordinate changes keep the
// variable names for permutations and use fresh names otherwise.
struct PreparedJob {
    Ring full;
    Ring base;
    SheafSpec spec;
    Polynomial f;
    Point p;
    std::vector<Ideal> af_partition;
};

PreparedJob prepare_job(const JobConfig& cfg);

// "0", "Z", "Z^2", "Z/3", "Z^2 + Z/2".
AbGroup parse_abgroup(const std::string& text);

// Throws InputError naming the offending field.
JobConfig parse_config(const std::string& text);
JobConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const JobConfig& cfg);

// Composes the coordinate change with a random invertible integer matrix
// (entries in [-5, 5]).  Seed 0 leaves the config unchanged.
JobConfig randomize_coordinates(const JobConfig& cfg, std::uint64_t seed);
Matrix random_invertible_matrix(int n, std::uint64_t seed);

enum class Command { Compute, Check, Gecc };

struct RunOptions {
    Command command = Command::Compute;
    int retries = 0;
    bool timing = false;
};

struct Report {
    nlohmann::json json;
    std::string text;
    int exit_code = 0;
};

// Exit codes: 0 certified, 2 uncertified, 3 genericity failure, 4 input
// error, 5 internal error.
Report run_pipeline(const JobConfig& cfg, const RunOptions& opts = {});

}  // namespace levo
