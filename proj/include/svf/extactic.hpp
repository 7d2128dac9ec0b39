#pragma once

#include <vector>

#include "svf/hypersurface.hpp"
#include "svf/poly.hpp"
#include "svf/vector_field.hpp"

namespace svf {

// Ordered basis of a polynomial subspace W. Requires at least two elements,
// all nonzero and linearly independent over Q.
struct SubspaceBasis {
    explicit SubspaceBasis(std::vector<Poly> polys);
    const std::vector<Poly>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }

private:
    std::vector<Poly> basis_;
};

// Determinant of the matrix whose rows are (chi^0 v_j, chi^1 v_j, ...,
// chi^{l-1} v_j). Invariant hypersurfaces {f=0} with f in W divide it.
// Cofactor expansion for l <= 3, fraction-free Bareiss elimination above.
Poly extactic(const VectorField& chi, const SubspaceBasis& w);

struct Multiplicity {
    bool infinite = false;  // extactic polynomial vanished identically
    int value = 0;          // largest k with f^k dividing it otherwise
};

// Pre: f nonzero and f in span(W); anything else is rejected.
Multiplicity multiplicity(const VectorField& chi, const SubspaceBasis& w, const Poly& f);

// invariance_cofactor restricted to hyperplanes; L must have degree exactly 1.
CofactorResult check_hyperplane(const VectorField& chi, const Poly& l);

// Invariant planes x4 = k with rational k. Candidates come from the rational
// roots of P4 specialized at a probe point (x1,x2,x3) = (1,1/2,1/3), with
// fallbacks (2,1/3,1/5) and (3,1/5,1/7); every candidate is then verified by
// exact substitution and the report re-checked plane by plane. When P4
// vanishes at all probes without being zero, candidates cannot be generated
// and the report says so.
struct ParallelReport {
    bool all_invariant = false;  // P4 = 0: every parallel plane is invariant
    bool candidates_indeterminate = false;
    std::vector<std::pair<Rational, int>> planes;  // (k, multiplicity), ascending k
};

ParallelReport enumerate_parallel(const VectorField& chi);

enum class Pencil { X1X2, X3X4 };

// Projective ratio (a : b) of an invariant plane a*xi + b*xj = 0, in lowest
// terms with a >= 0 and (0:1) when a = 0.
struct PencilRatio {
    Rational a, b;
    int multiplicity = 0;
    bool operator==(const PencilRatio&) const = default;
};

struct PencilReport {
    bool all_invariant = false;
    std::vector<PencilRatio> ratios;
};

// Enumerates invariant planes through the origin in the span of a coordinate
// pair. The two-element extactic polynomial E = xi*Pj - xj*Pi is decomposed
// into components homogeneous in (xi,xj) with a fixed outside monomial; a
// linear form divides E iff it divides every component, so candidates are the
// rational projective roots of the first nonzero component, each verified by
// exact division of the full E.
PencilReport enumerate_pencil(const VectorField& chi, Pencil pencil);

}  // namespace svf
