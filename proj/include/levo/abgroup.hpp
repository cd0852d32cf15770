#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace levo {

// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k in invariant
// factor form: d_1 | d_2 | ... | d_k, each d_i >= 2.  The canonical form
// makes isomorphism structural equality.
struct AbGroup {
    std::int64_t rank = 0;
    std::vector<std::int64_t> torsion;

    static AbGroup free(std::int64_t r) { return {r, {}}; }
    // Z^rank plus cyclic groups of the given orders (any order, 1s ignored).
    static AbGroup from_orders(std::int64_t rank, std::vector<std::int64_t> orders);

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }
    bool operator==(const AbGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const AbGroup& o) const { return !(*this == o); }

    // Prime-power orders of the cyclic summands, sorted.
    std::vector<std::int64_t> elementary_divisors() const;

    // "0", "Z", "Z^3", "Z^2 + Z/2 + Z/4".
    std::string str() const;
};

AbGroup ab_dsum(const AbGroup& a, const AbGroup& b);
AbGroup ab_tensor(const AbGroup& a, const AbGroup& b);
// a is isomorphic to a direct summand of b.
bool ab_le(const AbGroup& a, const AbGroup& b);

}  // namespace levo
