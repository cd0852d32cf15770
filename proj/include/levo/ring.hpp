#pragma once

#include <memory>
#include <string>
#include <vector>

namespace levo {

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

// Variables are laid out as base z_0..z_n, then cotangent w_0..w_n, then any
// auxiliary variables.  Variable 0 is the largest in every monomial order.
class PolyRing {
public:
    static Ring make(std::vector<std::string> base, std::vector<std::string> cotangent = {});

    // Ring with the given names and no base/cotangent structure.
    static Ring plain(std::vector<std::string> names);

    int nvars() const { return static_cast<int>(names_.size()); }
    int base_count() const { return nbase_; }
    int cot_count() const { return ncot_; }
    int base_var(int i) const { return i; }
    int cot_var(int i) const { return nbase_ + i; }
    bool has_cotangent() const { return ncot_ > 0; }

    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    // -1 when absent.
    int index(const std::string& name) const;

    // Same variables followed by `extra` auxiliary ones.
    Ring extended(const std::vector<std::string>& extra) const;
    // Ring of the base variables only.
    Ring base_ring() const;

    // Bit mask of the cotangent variables.
    std::uint32_t cot_mask() const;

    bool same_as(const PolyRing& o) const {
        return names_ == o.names_ && nbase_ == o.nbase_ && ncot_ == o.ncot_;
    }

    // Name not clashing with any existing variable.
    std::string fresh_name(const std::string& stem) const;

private:
    PolyRing() = default;
    std::vector<std::string> names_;
    int nbase_ = 0;
    int ncot_ = 0;
};

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && a->same_as(*b));
}

}  // namespace levo
