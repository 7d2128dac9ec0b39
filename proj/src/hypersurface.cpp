#include "svf/hypersurface.hpp"

#include <algorithm>

namespace svf {

std::string to_string(SurfaceKind kind) { return kind == SurfaceKind::S1xS2 ? "s1xs2" : "s2xs1"; }

std::optional<SurfaceKind> surface_kind_from_string(const std::string& s) {
    if (s == "s1xs2") return SurfaceKind::S1xS2;
    if (s == "s2xs1") return SurfaceKind::S2xS1;
    return std::nullopt;
}

Hypersurface make_hypersurface(SurfaceKind kind, const Rational& param) {
    if (param <= 1) throw std::invalid_argument("surface parameter must be > 1");
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    Poly radius2 = x1 * x1 + x2 * x2;
    if (kind == SurfaceKind::S2xS1) radius2 += x3 * x3;
    Poly core = radius2 - Poly(param * param);
    Poly g = core * core - Poly(1);
    if (kind == SurfaceKind::S1xS2) g += x3 * x3;
    g += x4 * x4;
    return Hypersurface{kind, param, g};
}

CofactorResult invariance_cofactor(const VectorField& chi, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("invariance test needs a nonzero polynomial");
    auto [q, r] = divide(lie_derivative(chi, f), f);
    if (!r.is_zero()) return {};
    return {true, q};
}

bool degree_profile_admissible(int m1, int m2, int m3, int m4) {
    if (m1 < 0 || m2 < 0 || m3 < 0 || m4 < 0) throw std::invalid_argument("degrees must be non-negative");
    int lo = std::min(m1, m2), hi = std::max(m1, m2);
    int p = std::min(m3, m4), q = std::max(m3, m4);
    if (m1 != m2) return hi == lo + 2 && p == lo && q == hi + 2;
    return m3 == m4 || (p == m1 && q == m1 + 2);
}

}  // namespace svf
