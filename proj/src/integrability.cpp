#include "svf/integrability.hpp"

#include <set>

#include "svf/linalg.hpp"
#include "svf/rng.hpp"

namespace svf {

HamiltonianResult hamiltonian_solve(const VectorField& chi) {
    // omega = P2 dx1 - P1 dx2 + P4 dx3 - P3 dx4; chi is Hamiltonian iff
    // omega = dH.
    const std::array<Poly, kNumVars> w = {chi.p[1], -chi.p[0], chi.p[3], -chi.p[2]};
    for (int i = 0; i < kNumVars; ++i)
        for (int j = i + 1; j < kNumVars; ++j)
            if (w[i].derivative(j + 1) != w[j].derivative(i + 1)) return {};

    Poly h;
    for (int i = 0; i < kNumVars; ++i) h += (w[i] - h.derivative(i + 1)).antiderivative(i + 1);

    if (hamiltonian_field_of(h) != chi) return {};
    auto d = h.degree();
    if (!d || *d == 0) return {};  // only a constant, not a Hamiltonian
    return {true, h};
}

std::optional<std::vector<Rational>> darboux_exponents(
    const std::vector<std::pair<Poly, Poly>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("darboux_exponents needs at least one pair");
    std::set<Monomial, GrlexDescending> monos;
    for (const auto& [f, k] : pairs)
        for (const auto& [m, c] : k.terms()) monos.insert(m);

    linalg::Matrix m;
    for (const auto& mono : monos) {
        std::vector<Rational> row;
        row.reserve(pairs.size());
        for (const auto& [f, k] : pairs) row.push_back(k.coefficient(mono));
        m.push_back(std::move(row));
    }
    auto basis = linalg::kernel_basis(std::move(m), pairs.size());
    if (basis.empty()) return std::nullopt;
    return linalg::canonicalize_vector(basis.front());
}

bool verify_first_integral(const VectorField& chi, const DarbouxProduct& product) {
    Poly sum;
    for (const auto& [f, lambda] : product.factors) {
        auto cof = invariance_cofactor(chi, f);
        if (!cof.invariant)
            throw std::domain_error("factor is not invariant under the field: " + f.to_string());
        sum += *cof.cofactor * lambda;
    }
    return sum.is_zero();
}

std::vector<Poly> known_first_integrals(const VectorField& chi, const FamilyRecord& record) {
    const Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3),
               x4 = Poly::variable(4);
    std::vector<Poly> integrals;
    switch (record.family) {
        case Family::TypeN_S12:
            integrals = {x1 * x1 + x2 * x2, x3 * x3 + x4 * x4};
            break;
        case Family::PseudoTypeN_S21:
            integrals = {x1 * x1 + x2 * x2 + x3 * x3, x4};
            break;
        default:
            throw std::invalid_argument("known first integrals only cover TypeN_S12 and PseudoTypeN_S21");
    }
    for (const auto& f : integrals)
        if (!lie_derivative(chi, f).is_zero())
            throw std::logic_error("expected first integral is not conserved");
    return integrals;
}

namespace {

// Rational circle point (c, s) with c^2 + s^2 = 1, from the slope
// parametrization c = (1-t^2)/(1+t^2), s = 2t/(1+t^2).
std::pair<Rational, Rational> circle_point(Rng& rng) {
    Rational t(rng.int_in(-9, 9), rng.int_in(1, 9));
    t.canonicalize();
    Rational t2 = t * t;
    Rational den = Rational(1) + t2;
    Rational c = (Rational(1) - t2) / den;
    Rational s = (2 * t) / den;
    if (rng.below(2)) s = -s;
    return {c, s};
}

}  // namespace

std::array<Rational, kNumVars> rational_surface_point(const Hypersurface& surface, std::uint64_t seed,
                                                      std::uint64_t trial) {
    Rng rng(seed, trial);
    // Slice with the defining square equal to zero: radius exactly a (or b),
    // so every coordinate stays rational for any rational parameter.
    auto [c1, s1] = circle_point(rng);
    auto [c2, s2] = circle_point(rng);
    if (surface.kind == SurfaceKind::S1xS2)
        return {surface.param * c1, surface.param * s1, c2, s2};
    Rational x4 = rng.below(2) ? Rational(1) : Rational(-1);
    return {surface.param * c1 * c2, surface.param * s1 * c2, surface.param * s2, x4};
}

int independence_rank(const std::vector<Poly>& integrals, const Hypersurface& surface, int trials,
                      std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        auto point = rational_surface_point(surface, seed, static_cast<std::uint64_t>(t));
        linalg::Matrix grads;
        for (const auto& f : integrals) {
            std::vector<Rational> row;
            row.reserve(kNumVars);
            for (int i = 1; i <= kNumVars; ++i) row.push_back(f.derivative(i).eval(point));
            grads.push_back(std::move(row));
        }
        best = std::max(best, linalg::rank(std::move(grads)));
        if (best == std::min<int>(static_cast<int>(integrals.size()), kNumVars)) break;
    }
    return best;
}

}  // namespace svf
