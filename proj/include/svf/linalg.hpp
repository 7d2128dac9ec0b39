#pragma once

#include <vector>

#include "svf/rational.hpp"

namespace svf::linalg {

using Matrix = std::vector<std::vector<Rational>>;  // row-major, rectangular

int rank(Matrix m);

// Kernel basis from the reduced row echelon form, one vector per free column
// in ascending column order. Empty when the kernel is trivial.
std::vector<std::vector<Rational>> kernel_basis(Matrix m, std::size_t cols);

// Scales to a primitive integer vector (unit content) with the first nonzero
// entry positive. Pre: v is nonzero.
std::vector<Rational> canonicalize_vector(std::vector<Rational> v);

}  // namespace svf::linalg
