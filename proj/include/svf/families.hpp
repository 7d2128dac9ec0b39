#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "svf/hypersurface.hpp"
#include "svf/vector_field.hpp"

namespace svf {

enum class Family {
    LinearS12,
    QuadS12,
    CubicKolmS12,
    TypeN_S12,
    LinearS21,
    QuadS21,
    CubicKolmS21,
    PseudoTypeN_S21,
};

std::string to_string(Family family);

// Parameter bundle for one family instance; only the fields of the tagged
// family are meaningful, the rest stay at their defaults so records compare
// with ==. For QuadS21 the (f,g,h) triple and for PseudoTypeN_S21 the (A,B,C)
// triple are stored in canonical position: the shift
// (f,g,h) -> (f+t*x3, g-t*x2, h+t*x1) leaves the field unchanged, and the
// representative with no x3 term in f (resp. in A) is the one recorded.
struct FamilyRecord {
    Family family;
    Rational surface_param;                     // a or b
    Rational alpha, beta, gamma;                // scalar parameters
    Rational k3, k4, k33, k44, c;               // cofactor parameters
    Poly f, g, h;                               // linear parameters (degree <= 1)
    Poly A, B, C;                               // homogeneous parameters (degree n-1)
    int n = 0;                                  // homogeneous family degree

    bool operator==(const FamilyRecord&) const = default;
};

// Rebuilds the vector field a record describes, exactly.
VectorField rebuild(const FamilyRecord& record);

// Quadratic family leaving S1xS2 invariant with cofactor k3*x3 + k4*x4:
//   P1 = K/4 x1 + f x2, P2 = K/4 x2 - f x1,
//   P3 = k3/2 Q + g x4,  P4 = k4/2 Q - g x3,
// where Q = -a^2(x1^2+x2^2) + x3^2 + x4^2 + a^4 - 1 and f, g are linear.
VectorField build_quadratic_s1s2(const Rational& a, const Rational& k3, const Rational& k4,
                                 const Poly& f, const Poly& g);

// Cubic Kolmogorov family on S1xS2 with cofactor k33*x3^2 + k44*x4^2:
//   P1 = x1(K/4 + alpha x2^2), P2 = x2(K/4 - alpha x1^2),
//   P3 = x3(k33/2 Q + beta x4^2), P4 = x4(k44/2 Q - beta x3^2).
VectorField build_cubic_kolmogorov_s1s2(const Rational& a, const Rational& k33, const Rational& k44,
                                        const Rational& alpha, const Rational& beta);

// Homogeneous family on S1xS2 (first integral; cofactor 0):
//   (A x2, -A x1, B x4, -B x3) with A, B homogeneous of degree n-1.
// Either of A, B may be zero; the field is then not Type-n but still leaves
// every S1xS2 invariant.
VectorField build_type_n_s1s2(const Poly& A, const Poly& B, int n);

// The same pencil form without the equal-degree requirement; invariant with
// zero cofactor on every S1xS2 for arbitrary A and B.
VectorField build_pencil_form_s1s2(const Poly& A, const Poly& B);

// Quadratic family on S2xS1 with cofactor c*x4:
//   P1 = c/4 x1 x4 + f x2 + g x3, P2 = c/4 x2 x4 - f x1 + h x3,
//   P3 = c/4 x3 x4 - g x1 - h x2, P4 = c/2 Q',
// where Q' = -b^2(x1^2+x2^2+x3^2) + x4^2 + b^4 - 1 and f, g, h are linear.
VectorField build_quadratic_s2s1(const Rational& b, const Rational& c, const Poly& f, const Poly& g,
                                 const Poly& h);

// Cubic Kolmogorov family on S2xS1 with cofactor c*x4^2:
//   P1 = x1(c/4 x4^2 + alpha x2^2 + beta x3^2),
//   P2 = x2(c/4 x4^2 - alpha x1^2 + gamma x3^2),
//   P3 = x3(c/4 x4^2 - beta x1^2 - gamma x2^2), P4 = c/2 x4 Q'.
VectorField build_cubic_kolmogorov_s2s1(const Rational& b, const Rational& c, const Rational& alpha,
                                        const Rational& beta, const Rational& gamma);

// Homogeneous family on S2xS1 (first integral; cofactor 0):
//   (A x2 + B x3, -A x1 + C x3, -B x1 - C x2, 0), A, B, C homogeneous of
// degree n-1, any of them possibly zero.
VectorField build_pseudo_type_n_s2s1(const Poly& A, const Poly& B, const Poly& C, int n);

struct NotMember {
    enum class Reason { NotInvariant, WrongDegreeShape, ResidualMismatch };
    Reason reason;
    std::string detail;
};

std::string to_string(NotMember::Reason reason);

using ClassifyOutcome = std::variant<FamilyRecord, NotMember>;

// Recovers the unique family parameters of an invariant field by exact
// division against the family templates, then re-verifies by rebuilding.
// Preference order when a field fits several shapes: the homogeneous families
// (TypeN / PseudoTypeN) win, then the linear tags, then quadratic, then cubic
// Kolmogorov.
ClassifyOutcome classify(const VectorField& chi, const Hypersurface& surface);

// Named example fields with their documented invariant-hyperplane facts.
// Accepted names (rational arguments):
//   meridian-sharp(n,c)            n >= 2, c not in {1,-1}; on S1xS2 (a=2)
//   parallel-sharp-s12(n,k1..k_{n-1})  distinct k_i; on S1xS2 (a=2)
//   parallel-sharp-s21(n,k1..k_{n-3})  n >= 3, distinct k_i not in {1,-1}; on S2xS1 (b=2)
//   pseudo-type1-meridian(A,B,C)   constants, A != 0; on S2xS1 (b=2)
struct Fixture {
    VectorField field;
    Hypersurface surface;
    // meridian-sharp: closed form of the extactic polynomial for <x1,x2,x3>
    std::optional<Poly> expected_extactic;
    // meridian-sharp: plane polynomial -> multiplicity
    std::vector<std::pair<Poly, int>> expected_multiplicities;
    // parallel fixtures: the invariant planes x4 = k with multiplicities
    std::vector<std::pair<Rational, int>> expected_parallel;
    // pseudo-type1-meridian: the unique invariant meridian hyperplane
    std::optional<Poly> expected_meridian;
};

Fixture fixture(const std::string& name);

}  // namespace svf
