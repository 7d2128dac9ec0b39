#pragma once

#include <optional>
#include <string>

#include "svf/poly.hpp"
#include "svf/vector_field.hpp"

namespace svf {

// The two product-of-spheres hypersurfaces in R^4:
//   S1xS2: (x1^2+x2^2-a^2)^2 + x3^2 + x4^2 - 1 = 0,  a > 1
//   S2xS1: (x1^2+x2^2+x3^2-b^2)^2 + x4^2 - 1 = 0,    b > 1
enum class SurfaceKind { S1xS2, S2xS1 };

std::string to_string(SurfaceKind kind);
std::optional<SurfaceKind> surface_kind_from_string(const std::string& s);

struct Hypersurface {
    SurfaceKind kind;
    Rational param;  // a or b
    Poly poly;       // expanded defining polynomial
};

Hypersurface make_hypersurface(SurfaceKind kind, const Rational& param);

struct CofactorResult {
    bool invariant = false;
    std::optional<Poly> cofactor;  // present iff invariant; chi f = cofactor * f
};

// Exact divisibility test: computes chi f and divides by f. A single divisor
// is a Groebner basis of its principal ideal, so remainder zero is sound and
// complete. Pre: f != 0.
CofactorResult invariance_cofactor(const VectorField& chi, const Poly& f);

// Degree pattern a nonzero homogeneous field must satisfy when the S1xS2
// polynomial is one of its first integrals: either m1 != m2 with
// max = min + 2 and {m3,m4} = {max+2, min}, or m1 = m2 with m3 = m4 or
// {m3,m4} = {m1, m1+2}.
bool degree_profile_admissible(int m1, int m2, int m3, int m4);

}  // namespace svf
