#pragma once

#include <cstdint>
#include <random>

namespace levo {

// Seeded generator with a portable integer mapping, so a seed reproduces the
// same draws with any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng_() % span);
    }

    // Fresh seed for a sub-computation; recorded in results.
    std::uint64_t fork() { return eng_() >> 1; }

private:
    std::mt19937_64 eng_;
};

}  // namespace levo
