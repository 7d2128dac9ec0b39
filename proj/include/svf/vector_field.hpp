#pragma once

#include <array>
#include <optional>
#include <string>

#include "svf/poly.hpp"

namespace svf {

// Polynomial vector field (P1, P2, P3, P4) on R^4, acting on functions as the
// derivation f -> sum_i P_i df/dx_i.
struct VectorField {
    std::array<Poly, kNumVars> p;

    bool is_zero() const {
        for (const auto& c : p)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const VectorField&) const = default;
};

Poly lie_derivative(const VectorField& chi, const Poly& f);
Poly iterated_lie(const VectorField& chi, const Poly& f, unsigned k);

struct DegreeProfile {
    std::array<std::optional<int>, kNumVars> component;  // empty = zero component
    std::optional<int> degree;                           // max over nonzero components
};

DegreeProfile degree_profile(const VectorField& chi);

struct FieldPredicates {
    bool is_kolmogorov = false;
    std::array<Poly, kNumVars> kolmogorov_factors;  // psi_i with P_i = x_i * psi_i
    bool is_lotka_volterra = false;                 // Kolmogorov with all psi_i of degree <= 1
    std::optional<int> type_n;                      // all four components nonzero homogeneous of this degree
    std::optional<int> pseudo_type_n;               // P1..P3 nonzero homogeneous of this degree, P4 = 0
};

FieldPredicates predicates(const VectorField& chi);

// (-dH/dx2, dH/dx1, -dH/dx4, dH/dx3)
VectorField hamiltonian_field_of(const Poly& hamiltonian);

// Text form "P1; P2; P3; P4"; lines starting with '#' are comments when the
// text spans multiple lines.
VectorField parse_vector_field(const std::string& text);
std::string to_string(const VectorField& chi);

}  // namespace svf
