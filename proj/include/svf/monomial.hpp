#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace svf {

inline constexpr int kNumVars = 4;

// Power product x1^e1 * x2^e2 * x3^e3 * x4^e4.
struct Monomial {
    std::array<std::uint32_t, kNumVars> e{0, 0, 0, 0};

    unsigned total_degree() const { return e[0] + e[1] + e[2] + e[3]; }

    bool divides(const Monomial& other) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + other.e[i];
        return r;
    }

    // Pre: divides(other) was checked by the caller on `*this | other`.
    Monomial divided_by(const Monomial& other) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - other.e[i];
        return r;
    }

    bool operator==(const Monomial&) const = default;

    std::string to_string() const;
};

inline Monomial unit_monomial(int var) {  // var in 1..4
    Monomial m;
    m.e[var - 1] = 1;
    return m;
}

// Graded lexicographic order with x1 > x2 > x3 > x4: total degree first,
// then the exponent of x1, x2, ...
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

}  // namespace svf
