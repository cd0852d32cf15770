#pragma once

#include <initializer_list>
#include <ostream>
#include <string>

#include "levo/cycle.hpp"
#include "levo/parse.hpp"

namespace levo {

inline void PrintTo(const Ideal& i, std::ostream* os) { *os << i.str(); }
inline void PrintTo(const EnrichedCycle& e, std::ostream* os) { *os << e.str(); }
inline void PrintTo(const AbGroup& a, std::ostream* os) { *os << a.str(); }
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.str(); }

namespace testing_util {

inline Polynomial poly(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

inline Ideal ideal(const Ring& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(poly(r, s));
    return Ideal(r, g);
}

inline EnrichedCycle single(const Ideal& p, std::int64_t rank = 1) {
    EnrichedCycle e(p.ring());
    e.add(p, AbGroup::free(rank));
    return e;
}

inline std::vector<mpq_class> zero_point(int n) { return std::vector<mpq_class>(n, 0); }

}  // namespace testing_util

}  // namespace levo
