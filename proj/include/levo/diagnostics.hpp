#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levo/vogel.hpp"

namespace levo {

enum class CertStatus { Certified, ProperUncertified, Failed };

std::string status_name(CertStatus s);

struct GenericityCertificate {
    CertStatus status = CertStatus::Failed;
    int d = -1;  // dimension at p of the critical support, -1 when p is off it
    std::string failing_stage;
    std::string failing_component;
    std::vector<std::string> checks;
};

struct StageFailure {
    std::string stage;
    std::string component;
};

// degree -> j -> Lambda^j.
using LevoCycles = std::map<int, std::map<int, EnrichedCycle>>;
// degree -> j -> lambda^j.
using LevoModules = std::map<int, std::map<int, AbGroup>>;

GenericityCertificate isolating_certificate(const LevoCycles& lambda, const Point& p,
                                            const std::optional<StageFailure>& failure, std::uint64_t seed = 1);

struct TransversalityResult {
    std::vector<bool> passes;  // index i = number of coordinates fixed
    bool verdict = true;
};

TransversalityResult essential_transversality(const Ideal& conormal, const Point& p, std::uint64_t seed = 1);

struct AfResult {
    bool whitney_a = false;
    bool covector = false;
    bool exceptional = false;
    bool holds = false;
    std::string witness;  // first failing condition
};

// Experimental.  Y and N are closures in the base ring; N smooth at x.
AfResult af_exceptional_containment(const Ideal& Y, const Ideal& N, const Polynomial& f, const Point& x,
                                    const Ring& full, std::uint64_t seed = 1);

struct ZawatskyComplex {
    int degree = 0;
    int d = -1;
    std::vector<std::pair<int, AbGroup>> terms;  // (j, lambda^j) for j = d..0, in cohomological degree -j
    std::vector<std::string> constraints;
    long long euler = 0;  // sum over j of (-1)^(j+k) rank
};

ZawatskyComplex zawatsky_complex(int degree, const std::map<int, AbGroup>& lams, int d);

struct EulerCheck {
    long long signed_sum = 0;
    long long milnor_fiber_reduced_euler = 0;  // -signed_sum
    std::optional<long long> expected;
    bool matches = true;
};

EulerCheck euler_check(const LevoModules& lams, std::optional<long long> expected = std::nullopt);

}  // namespace levo
