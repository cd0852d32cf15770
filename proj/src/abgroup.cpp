#include "levo/abgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "levo/errors.hpp"

namespace levo {

namespace {

std::map<std::int64_t, std::vector<int>> prime_exponents(const std::vector<std::int64_t>& orders) {
    std::map<std::int64_t, std::vector<int>> out;
    for (std::int64_t n : orders) {
        if (n <= 0) throw InputError("cyclic group order must be positive");
        for (std::int64_t p = 2; p * p <= n; ++p) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e) out[p].push_back(e);
        }
        if (n > 1) out[n].push_back(1);
    }
    return out;
}

}  // namespace

AbGroup AbGroup::from_orders(std::int64_t rank, std::vector<std::int64_t> orders) {
    if (rank < 0) throw InputError("negative rank");
    auto pe = prime_exponents(orders);
    std::size_t len = 0;
    for (auto& [p, es] : pe) {
        std::sort(es.rbegin(), es.rend());
        len = std::max(len, es.size());
    }
    // Largest invariant factor collects the largest power of each prime.
    std::vector<std::int64_t> inv(len, 1);
    for (auto& [p, es] : pe)
        for (std::size_t i = 0; i < es.size(); ++i)
            for (int k = 0; k < es[i]; ++k) inv[i] *= p;
    std::reverse(inv.begin(), inv.end());
    return {rank, inv};
}

std::vector<std::int64_t> AbGroup::elementary_divisors() const {
    std::vector<std::int64_t> out;
    for (auto& [p, es] : prime_exponents(torsion))
        for (int e : es) {
            std::int64_t q = 1;
            for (int k = 0; k < e; ++k) q *= p;
            out.push_back(q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string AbGroup::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (rank == 1) s = "Z";
    else if (rank > 1) s = "Z^" + std::to_string(rank);
    for (auto d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

AbGroup ab_dsum(const AbGroup& a, const AbGroup& b) {
    std::vector<std::int64_t> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return AbGroup::from_orders(a.rank + b.rank, orders);
}

AbGroup ab_tensor(const AbGroup& a, const AbGroup& b) {
    std::vector<std::int64_t> orders;
    for (std::int64_t i = 0; i < b.rank; ++i) orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
    for (std::int64_t i = 0; i < a.rank; ++i) orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    for (auto x : a.torsion)
        for (auto y : b.torsion) orders.push_back(std::gcd(x, y));
    return AbGroup::from_orders(a.rank * b.rank, orders);
}

bool ab_le(const AbGroup& a, const AbGroup& b) {
    if (a.rank > b.rank) return false;
    auto ea = a.elementary_divisors(), eb = b.elementary_divisors();
    return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
}

}  // namespace levo
