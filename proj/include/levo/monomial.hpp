#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace levo {

inline constexpr int kMaxVars = 24;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    std::uint16_t operator[](int i) const { return e[i]; }

    void set(int i, std::uint16_t v) {
        deg = deg - e[i] + v;
        e[i] = v;
    }

    bool is_one() const { return deg == 0; }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
        r.deg = a.deg + b.deg;
        return r;
    }

    // Requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
        r.deg = a.deg - b.deg;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
            r.deg += r.e[i];
        }
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
            r.deg += r.e[i];
        }
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }

    static Monomial var(int i, std::uint16_t power = 1) {
        Monomial r;
        r.e[i] = power;
        r.deg = power;
        return r;
    }

    std::uint32_t support_mask() const {
        std::uint32_t m = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i]) m |= 1u << i;
        return m;
    }

    std::size_t hash() const {
        std::size_t h = deg;
        for (int i = 0; i < kMaxVars; ++i) h = h * 1000003u ^ e[i];
        return h;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Variable 0 is the largest variable in every order.
enum class OrderKind { grevlex, lex, block };

struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    // For block orders: variables in the mask form the first (greater) block.
    std::uint32_t mask = 0;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder block(std::uint32_t first_block) { return {OrderKind::block, first_block}; }

    // Negative if a < b, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case OrderKind::grevlex:
            return grevlex_cmp(a, b, ~0u);
        case OrderKind::lex:
            for (int i = 0; i < kMaxVars; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        case OrderKind::block: {
            int c = grevlex_cmp(a, b, mask);
            return c ? c : grevlex_cmp(a, b, ~mask);
        }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && mask == o.mask; }

private:
    static int grevlex_cmp(const Monomial& a, const Monomial& b, std::uint32_t m) {
        std::uint32_t da = 0, db = 0;
        if (m == ~0u) {
            da = a.deg;
            db = b.deg;
        } else {
            for (int i = 0; i < kMaxVars; ++i)
                if (m >> i & 1u) {
                    da += a.e[i];
                    db += b.e[i];
                }
        }
        if (da != db) return da > db ? 1 : -1;
        for (int i = kMaxVars - 1; i >= 0; --i)
            if ((m >> i & 1u) && a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
};

}  // namespace levo
