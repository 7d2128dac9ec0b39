#include "svf/generators.hpp"

namespace svf::gen {

namespace {

std::vector<Monomial> monomials_of_degree(int degree) {
    std::vector<Monomial> out;
    for (unsigned e1 = 0; e1 <= static_cast<unsigned>(degree); ++e1)
        for (unsigned e2 = 0; e1 + e2 <= static_cast<unsigned>(degree); ++e2)
            for (unsigned e3 = 0; e1 + e2 + e3 <= static_cast<unsigned>(degree); ++e3) {
                unsigned e4 = static_cast<unsigned>(degree) - e1 - e2 - e3;
                out.push_back(Monomial{{e1, e2, e3, e4}});
            }
    return out;
}

bool homogeneous_linear_nonzero(const Poly& p) {
    if (p.is_zero()) return false;
    return p.coefficient(Monomial{}) == 0 && p.degree() == 1;
}

}  // namespace

Rational rational9(Rng& rng) {
    Rational q(rng.int_in(-9, 9), rng.int_in(1, 9));
    q.canonicalize();
    return q;
}

Rational nonzero_rational9(Rng& rng) {
    for (;;) {
        Rational q = rational9(rng);
        if (q != 0) return q;
    }
}

Rational surface_param(Rng& rng) {
    Rational q(rng.int_in(1, 9), rng.int_in(1, 9));
    q.canonicalize();
    return Rational(1) + q;
}

Rational small_rational(Rng& rng) {
    Rational q(rng.int_in(-2, 2), rng.int_in(1, 4));
    q.canonicalize();
    return q;
}

Poly linear_poly(Rng& rng) {
    Poly p(rational9(rng));
    for (int i = 1; i <= kNumVars; ++i) p += Poly::variable(i) * rational9(rng);
    return p;
}

Poly homogeneous_poly(Rng& rng, int degree) {
    Poly p;
    for (const auto& m : monomials_of_degree(degree)) p.add_term(m, rational9(rng));
    return p;
}

Poly nonzero_homogeneous_poly(Rng& rng, int degree) {
    for (;;) {
        Poly p = homogeneous_poly(rng, degree);
        if (!p.is_zero()) return p;
    }
}

Poly random_poly(Rng& rng, int max_degree) {
    Poly p;
    for (int d = 0; d <= max_degree; ++d) p += homogeneous_poly(rng, d);
    return p;
}

FamilyRecord quad_s12_record(Rng& rng, bool classifiable) {
    for (;;) {
        FamilyRecord rec;
        rec.family = Family::QuadS12;
        rec.surface_param = surface_param(rng);
        rec.k3 = rational9(rng);
        rec.k4 = rational9(rng);
        rec.f = linear_poly(rng);
        rec.g = linear_poly(rng);
        if (classifiable) {
            bool k_zero = rec.k3 == 0 && rec.k4 == 0;
            bool degree_two = !k_zero || rec.f.degree() == 1 || rec.g.degree() == 1;
            bool homogeneous_overlap =
                k_zero && homogeneous_linear_nonzero(rec.f) && homogeneous_linear_nonzero(rec.g);
            if (!degree_two || homogeneous_overlap) continue;
        }
        return rec;
    }
}

FamilyRecord kolm_s12_record(Rng& rng, bool classifiable) {
    for (;;) {
        FamilyRecord rec;
        rec.family = Family::CubicKolmS12;
        rec.surface_param = surface_param(rng);
        rec.k33 = rational9(rng);
        rec.k44 = rational9(rng);
        rec.alpha = rational9(rng);
        rec.beta = rational9(rng);
        if (classifiable) {
            bool zero_field = rec.k33 == 0 && rec.k44 == 0 && rec.alpha == 0 && rec.beta == 0;
            bool homogeneous_overlap =
                rec.k33 == 0 && rec.k44 == 0 && rec.alpha != 0 && rec.beta != 0;
            if (zero_field || homogeneous_overlap) continue;
        }
        return rec;
    }
}

FamilyRecord type_n_s12_record(Rng& rng, int max_n) {
    FamilyRecord rec;
    rec.family = Family::TypeN_S12;
    rec.surface_param = surface_param(rng);
    rec.n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    rec.A = nonzero_homogeneous_poly(rng, rec.n - 1);
    rec.B = nonzero_homogeneous_poly(rng, rec.n - 1);
    return rec;
}

FamilyRecord quad_s21_record(Rng& rng, bool classifiable) {
    for (;;) {
        FamilyRecord rec;
        rec.family = Family::QuadS21;
        rec.surface_param = surface_param(rng);
        rec.c = rational9(rng);
        rec.f = linear_poly(rng);
        rec.f -= Poly::variable(3) * rec.f.coefficient(Monomial{{0, 0, 1, 0}});  // canonical position
        rec.g = linear_poly(rng);
        rec.h = linear_poly(rng);
        if (classifiable) {
            bool degree_two = rec.c != 0 || rec.f.degree() == 1 || rec.g.degree() == 1 ||
                              rec.h.degree() == 1;
            bool all_homogeneous = rec.f.coefficient(Monomial{}) == 0 &&
                                   rec.g.coefficient(Monomial{}) == 0 &&
                                   rec.h.coefficient(Monomial{}) == 0;
            bool homogeneous_overlap = rec.c == 0 && all_homogeneous &&
                                       !(rec.f.is_zero() && rec.g.is_zero() && rec.h.is_zero());
            if (!degree_two || homogeneous_overlap) continue;
        }
        return rec;
    }
}

FamilyRecord kolm_s21_record(Rng& rng, bool classifiable) {
    for (;;) {
        FamilyRecord rec;
        rec.family = Family::CubicKolmS21;
        rec.surface_param = surface_param(rng);
        rec.c = rational9(rng);
        rec.alpha = rational9(rng);
        rec.beta = rational9(rng);
        rec.gamma = rational9(rng);
        if (classifiable) {
            int nonzero = (rec.alpha != 0) + (rec.beta != 0) + (rec.gamma != 0);
            bool zero_field = rec.c == 0 && nonzero == 0;
            bool homogeneous_overlap = rec.c == 0 && nonzero >= 2;
            if (zero_field || homogeneous_overlap) continue;
        }
        return rec;
    }
}

FamilyRecord pseudo_type_n_s21_record(Rng& rng, int max_n) {
    for (;;) {
        FamilyRecord rec;
        rec.family = Family::PseudoTypeN_S21;
        rec.surface_param = surface_param(rng);
        rec.n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
        Poly a = homogeneous_poly(rng, rec.n - 1);
        for (const auto& [m, c] : a.terms())  // canonical position: no x3 in A
            if (m.e[2] == 0) rec.A.add_term(m, c);
        rec.B = homogeneous_poly(rng, rec.n - 1);
        rec.C = homogeneous_poly(rng, rec.n - 1);
        VectorField chi = rebuild(rec);
        if (chi.p[0].is_zero() || chi.p[1].is_zero() || chi.p[2].is_zero()) continue;
        return rec;
    }
}

}  // namespace svf::gen
