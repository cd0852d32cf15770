#include "levo/ring.hpp"

#include <set>

#include "levo/errors.hpp"
#include "levo/monomial.hpp"

namespace levo {

namespace {

void check_names(const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) > kMaxVars)
        throw InputError("too many variables (limit " + std::to_string(kMaxVars) + ")");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw InputError("empty variable name");
        if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
    }
}

}  // namespace

Ring PolyRing::make(std::vector<std::string> base, std::vector<std::string> cotangent) {
    if (!cotangent.empty() && cotangent.size() != base.size())
        throw InputError("cotangent variable list must match the base list");
    auto r = std::shared_ptr<PolyRing>(new PolyRing());
    r->nbase_ = static_cast<int>(base.size());
    r->ncot_ = static_cast<int>(cotangent.size());
    r->names_ = std::move(base);
    r->names_.insert(r->names_.end(), cotangent.begin(), cotangent.end());
    check_names(r->names_);
    return r;
}

Ring PolyRing::plain(std::vector<std::string> names) {
    auto r = std::shared_ptr<PolyRing>(new PolyRing());
    r->names_ = std::move(names);
    check_names(r->names_);
    return r;
}

int PolyRing::index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

Ring PolyRing::extended(const std::vector<std::string>& extra) const {
    auto r = std::shared_ptr<PolyRing>(new PolyRing(*this));
    r->names_.insert(r->names_.end(), extra.begin(), extra.end());
    check_names(r->names_);
    return r;
}

Ring PolyRing::base_ring() const {
    return make(std::vector<std::string>(names_.begin(), names_.begin() + nbase_));
}

std::uint32_t PolyRing::cot_mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < ncot_; ++i) m |= 1u << cot_var(i);
    return m;
}

std::string PolyRing::fresh_name(const std::string& stem) const {
    std::string s = stem;
    for (int k = 0; index(s) >= 0; ++k) s = stem + std::to_string(k);
    return s;
}

}  // namespace levo
