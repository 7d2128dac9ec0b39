#pragma once

#include "svf/families.hpp"
#include "svf/rng.hpp"
#include "svf/vector_field.hpp"

// Seeded random instances for the property suites. Rationals are drawn with
// numerators uniform in [-9,9] and denominators uniform in [1,9]; draws that
// violate a precondition are repeated.
namespace svf::gen {

Rational rational9(Rng& rng);
Rational nonzero_rational9(Rng& rng);
// 1 + positive rational, for surface parameters.
Rational surface_param(Rng& rng);
// Small magnitudes for trajectory instances, so fixed-step integration stays
// in its accuracy regime: numerators in [-2,2], denominators in [1,4].
Rational small_rational(Rng& rng);

Poly linear_poly(Rng& rng);                        // degree <= 1
Poly homogeneous_poly(Rng& rng, int degree);       // possibly zero
Poly nonzero_homogeneous_poly(Rng& rng, int degree);
Poly random_poly(Rng& rng, int max_degree);

// Family records with random parameters. With `classifiable` set, parameters
// are redrawn while they sit in a stratum where the field coincides with a
// family of different tag (or collapses in degree), so that classification
// recovers exactly this record.
FamilyRecord quad_s12_record(Rng& rng, bool classifiable);
FamilyRecord kolm_s12_record(Rng& rng, bool classifiable);
FamilyRecord type_n_s12_record(Rng& rng, int max_n = 4);
FamilyRecord quad_s21_record(Rng& rng, bool classifiable);
FamilyRecord kolm_s21_record(Rng& rng, bool classifiable);
FamilyRecord pseudo_type_n_s21_record(Rng& rng, int max_n = 4);

}  // namespace svf::gen
