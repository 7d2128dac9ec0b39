#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "svf/families.hpp"
#include "svf/hypersurface.hpp"
#include "svf/vector_field.hpp"

namespace svf {

// Formal power product prod f_i^{lambda_i} with rational exponents.
struct DarbouxProduct {
    std::vector<std::pair<Poly, Rational>> factors;
};

struct HamiltonianResult {
    bool exists = false;
    std::optional<Poly> hamiltonian;  // non-constant, zero constant term
};

// A Hamiltonian exists iff the 1-form P2 dx1 - P1 dx2 + P4 dx3 - P3 dx4 is
// closed (R^4 is simply connected); H is then recovered by polynomial path
// integration and normalized to zero constant term. The zero field yields
// exists = false since only constant H would work.
HamiltonianResult hamiltonian_solve(const VectorField& chi);

// Given invariant factors with cofactors K_i, returns a rational lambda != 0
// with sum lambda_i K_i = 0, canonicalized (first nonzero entry positive,
// primitive integer entries), or nothing when the kernel is trivial. With
// several kernel dimensions the reduced-echelon basis vector of the first
// free column is returned.
std::optional<std::vector<Rational>> darboux_exponents(
    const std::vector<std::pair<Poly, Poly>>& pairs);

// True iff sum lambda_i K_i = 0 where K_i is the cofactor of factor f_i
// (the logarithmic-derivative identity, no rational-function arithmetic).
// A factor that is not invariant under chi is an error, not "false".
bool verify_first_integral(const VectorField& chi, const DarbouxProduct& product);

// The two polynomial first integrals carried by the homogeneous families:
// {x1^2+x2^2, x3^2+x4^2} for TypeN_S12, {x1^2+x2^2+x3^2, x4} for
// PseudoTypeN_S21. Other families are rejected.
std::vector<Poly> known_first_integrals(const VectorField& chi, const FamilyRecord& record);

// Maximum gradient rank over `trials` exact rational points on the surface,
// deterministic per seed (trial t uses the stream (seed, t)).
int independence_rank(const std::vector<Poly>& integrals, const Hypersurface& surface, int trials,
                      std::uint64_t seed);

// One exact rational point on the surface; used by independence_rank and
// handy for tests.
std::array<Rational, kNumVars> rational_surface_point(const Hypersurface& surface, std::uint64_t seed,
                                                      std::uint64_t trial);

}  // namespace svf
