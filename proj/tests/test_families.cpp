#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svf/families.hpp"
#include "svf/generators.hpp"
#include "svf/rng.hpp"

using namespace svf;

namespace {

const Rational kTwo = rational(2);

FamilyRecord expect_member(const VectorField& chi, const Hypersurface& surface) {
    auto outcome = classify(chi, surface);
    REQUIRE(std::holds_alternative<FamilyRecord>(outcome));
    return std::get<FamilyRecord>(outcome);
}

}  // namespace

TEST_CASE("quadratic builder on s1xs2") {
    VectorField chi = build_quadratic_s1s2(kTwo, rational(1), rational(0), Poly(), Poly());
    CHECK(chi.p[0] == parse_poly("1/4*x1*x3"));
    CHECK(chi.p[1] == parse_poly("1/4*x2*x3"));
    CHECK(chi.p[2] == parse_poly("1/2*(-4*(x1^2+x2^2)+x3^2+x4^2+15)"));
    CHECK(chi.p[3].is_zero());

    VectorField lin = build_quadratic_s1s2(kTwo, rational(0), rational(0), Poly(rational(3)),
                                           Poly(rational(5)));
    CHECK(lin == parse_vector_field("3*x2; -3*x1; 5*x4; -5*x3"));

    VectorField deg = build_quadratic_s1s2(kTwo, rational(0), rational(0), Poly::variable(1), Poly());
    CHECK(deg == parse_vector_field("x1*x2; -x1^2; 0; 0"));
    auto cof = invariance_cofactor(deg, make_hypersurface(SurfaceKind::S1xS2, kTwo).poly);
    REQUIRE(cof.invariant);
    CHECK(cof.cofactor->is_zero());

    CHECK_THROWS_AS(build_quadratic_s1s2(kTwo, rational(1), rational(1), parse_poly("x1^2"), Poly()),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_quadratic_s1s2(rational(1), rational(0), rational(0), Poly(), Poly()),
                    std::invalid_argument);
}

TEST_CASE("cubic Kolmogorov builder on s1xs2") {
    VectorField chi = build_cubic_kolmogorov_s1s2(kTwo, rational(0), rational(0), rational(1),
                                                  rational(0));
    CHECK(chi == parse_vector_field("x1*x2^2; -x2*x1^2; 0; 0"));

    VectorField chi2 = build_cubic_kolmogorov_s1s2(kTwo, rational(1), rational(0), rational(0),
                                                   rational(0));
    CHECK(chi2.p[2] == parse_poly("x3*(1/2*(-4*(x1^2+x2^2)+x3^2+x4^2+15))"));
    auto cof = invariance_cofactor(chi2, make_hypersurface(SurfaceKind::S1xS2, kTwo).poly);
    REQUIRE(cof.invariant);
    CHECK(*cof.cofactor == parse_poly("x3^2"));

    for (std::uint64_t t = 0; t < 10; ++t) {
        Rng rng(7, t);
        CHECK(predicates(rebuild(gen::kolm_s12_record(rng, false))).is_kolmogorov);
    }
}

TEST_CASE("type-n builder on s1xs2") {
    CHECK(build_type_n_s1s2(Poly(1), Poly(1), 1) == parse_vector_field("x2; -x1; x4; -x3"));
    VectorField chi = build_type_n_s1s2(Poly::variable(3), Poly::variable(1), 2);
    CHECK(chi == parse_vector_field("x3*x2; -x3*x1; x1*x4; -x1*x3"));
    auto cof = invariance_cofactor(chi, make_hypersurface(SurfaceKind::S1xS2, kTwo).poly);
    REQUIRE(cof.invariant);
    CHECK(cof.cofactor->is_zero());
    CHECK_THROWS_AS(build_type_n_s1s2(parse_poly("x1 + 1"), Poly(1), 2), std::invalid_argument);
}

TEST_CASE("quadratic builder on s2xs1") {
    VectorField chi = build_quadratic_s2s1(kTwo, kTwo, Poly(), Poly(), Poly());
    CHECK(chi.p[3] == parse_poly("-4*(x1^2+x2^2+x3^2)+x4^2+15"));
    auto cof = invariance_cofactor(chi, make_hypersurface(SurfaceKind::S2xS1, kTwo).poly);
    REQUIRE(cof.invariant);
    CHECK(*cof.cofactor == parse_poly("2*x4"));

    VectorField lin = build_quadratic_s2s1(kTwo, rational(0), Poly(rational(1)), Poly(rational(2)),
                                           Poly(rational(3)));
    CHECK(lin == parse_vector_field("x2 + 2*x3; -x1 + 3*x3; -2*x1 - 3*x2; 0"));

    VectorField f4 = build_quadratic_s2s1(kTwo, rational(0), Poly::variable(4), Poly(), Poly());
    auto cof2 = invariance_cofactor(f4, make_hypersurface(SurfaceKind::S2xS1, kTwo).poly);
    REQUIRE(cof2.invariant);
    CHECK(cof2.cofactor->is_zero());
}

TEST_CASE("cubic Kolmogorov builder on s2xs1") {
    VectorField chi = build_cubic_kolmogorov_s2s1(kTwo, rational(0), rational(1), rational(2),
                                                  rational(3));
    CHECK(chi == parse_vector_field(
                     "x1*(x2^2 + 2*x3^2); x2*(-x1^2 + 3*x3^2); x3*(-2*x1^2 - 3*x2^2); 0"));

    VectorField chi2 = build_cubic_kolmogorov_s2s1(kTwo, kTwo, rational(0), rational(0), rational(0));
    CHECK(chi2.p[3] == parse_poly("x4*(-4*(x1^2+x2^2+x3^2)+x4^2+15)"));
    auto cof = invariance_cofactor(chi2, make_hypersurface(SurfaceKind::S2xS1, kTwo).poly);
    REQUIRE(cof.invariant);
    CHECK(*cof.cofactor == parse_poly("2*x4^2"));
    CHECK(predicates(chi2).is_kolmogorov);
}

TEST_CASE("pseudo-type-n builder on s2xs1") {
    CHECK(build_pseudo_type_n_s2s1(Poly(1), Poly(1), Poly(1), 1) ==
          parse_vector_field("x2 + x3; -x1 + x3; -x1 - x2; 0"));
    CHECK(build_pseudo_type_n_s2s1(Poly(1), Poly(), Poly(), 1) ==
          parse_vector_field("x2; -x1; 0; 0"));
    VectorField chi = build_pseudo_type_n_s2s1(Poly::variable(1), Poly::variable(2),
                                               Poly::variable(3), 2);
    CHECK(chi == parse_vector_field("x1*x2 + x2*x3; -x1^2 + x3^2; -x2*x1 - x3*x2; 0"));
    auto cof = invariance_cofactor(chi, make_hypersurface(SurfaceKind::S2xS1, kTwo).poly);
    REQUIRE(cof.invariant);
    CHECK(cof.cofactor->is_zero());
}

TEST_CASE("classification examples") {
    auto s12 = make_hypersurface(SurfaceKind::S1xS2, kTwo);

    auto quad = expect_member(build_quadratic_s1s2(kTwo, rational(1), rational(0), Poly(), Poly()), s12);
    CHECK(quad.family == Family::QuadS12);
    CHECK(quad.k3 == 1);
    CHECK(quad.k4 == 0);
    CHECK(quad.f.is_zero());
    CHECK(quad.g.is_zero());

    auto rot = expect_member(parse_vector_field("x2; -x1; x4; -x3"), s12);
    CHECK(rot.family == Family::TypeN_S12);
    CHECK(rot.A == Poly(1));
    CHECK(rot.B == Poly(1));
    CHECK(rot.n == 1);

    auto outcome = classify(parse_vector_field("1; 0; 0; 0"), s12);
    REQUIRE(std::holds_alternative<NotMember>(outcome));
    CHECK(std::get<NotMember>(outcome).reason == NotMember::Reason::NotInvariant);

    // Degenerate linear fields keep the linear tag.
    auto lin = expect_member(parse_vector_field("3*x2; -3*x1; 0; 0"), s12);
    CHECK(lin.family == Family::LinearS12);
    CHECK(lin.alpha == 3);
    CHECK(lin.beta == 0);

    auto s21 = make_hypersurface(SurfaceKind::S2xS1, kTwo);
    auto lin21 = expect_member(parse_vector_field("x2; -x1; 0; 0"), s21);
    CHECK(lin21.family == Family::LinearS21);
    CHECK(lin21.alpha == 1);

    auto pseudo = expect_member(parse_vector_field("x2 + x3; -x1 + x3; -x1 - x2; 0"), s21);
    CHECK(pseudo.family == Family::PseudoTypeN_S21);
    CHECK(pseudo.n == 1);

    // A characterized shape on the wrong surface is just not invariant.
    auto wrong = classify(build_quadratic_s2s1(kTwo, kTwo, Poly(), Poly(), Poly()), s12);
    CHECK(std::holds_alternative<NotMember>(wrong));

    // Invariant but outside every characterized family: degree 4 with mixed
    // component degrees.
    VectorField mixed = build_pencil_form_s1s2(parse_poly("x1^2*x2"), Poly(1));
    auto miss = classify(mixed, s12);
    REQUIRE(std::holds_alternative<NotMember>(miss));
    CHECK(std::get<NotMember>(miss).reason == NotMember::Reason::WrongDegreeShape);
}

TEST_CASE("classification round trip across all six families") {
    for (std::uint64_t t = 0; t < 120; ++t) {
        Rng rng(101, t);
        FamilyRecord rec;
        SurfaceKind kind = SurfaceKind::S1xS2;
        switch (t % 6) {
            case 0: rec = gen::quad_s12_record(rng, true); break;
            case 1: rec = gen::kolm_s12_record(rng, true); break;
            case 2: rec = gen::type_n_s12_record(rng); break;
            case 3:
                rec = gen::quad_s21_record(rng, true);
                kind = SurfaceKind::S2xS1;
                break;
            case 4:
                rec = gen::kolm_s21_record(rng, true);
                kind = SurfaceKind::S2xS1;
                break;
            default:
                rec = gen::pseudo_type_n_s21_record(rng);
                kind = SurfaceKind::S2xS1;
                break;
        }
        VectorField chi = rebuild(rec);
        auto got = expect_member(chi, make_hypersurface(kind, rec.surface_param));
        CHECK(got == rec);
        CHECK(rebuild(got) == chi);
    }
}

TEST_CASE("pseudo-type-n parameters are canonicalized, rebuild stays exact") {
    // (A,B,C) and (A + t*x3, B - t*x2, C + t*x1) describe the same field; the
    // classifier returns the representative with no x3 inside A.
    Poly a = parse_poly("x1 + x3");
    Poly b = parse_poly("x2");
    Poly c = parse_poly("x4");
    VectorField chi = build_pseudo_type_n_s2s1(a, b, c, 2);
    auto rec = expect_member(chi, make_hypersurface(SurfaceKind::S2xS1, kTwo));
    CHECK(rec.A == parse_poly("x1"));
    CHECK(rec.B == parse_poly("2*x2"));
    CHECK(rec.C == parse_poly("x4 - x1"));
    CHECK(rebuild(rec) == chi);
}

TEST_CASE("fixtures") {
    auto ms = fixture("meridian-sharp(2,2)");
    CHECK(ms.field == parse_vector_field("x1*x2*x3; -x1^2*x3; 2*x1*x3*x4; -2*x1*x3^2"));
    CHECK(*ms.expected_extactic == parse_poly("3*(x1^2+x2^2)*x1^3*x3^4"));

    auto ps12 = fixture("parallel-sharp-s12(3,1,2)");
    CHECK(ps12.field.p[2] == parse_poly("x4*(x4-1)*(x4-2)"));
    CHECK(ps12.field.p[3] == parse_poly("-x3*(x4-1)*(x4-2)"));
    CHECK(ps12.expected_parallel ==
          std::vector<std::pair<Rational, int>>{{rational(1), 1}, {rational(2), 1}});

    auto ps21 = fixture("parallel-sharp-s21(4,3)");
    CHECK(ps21.expected_parallel == std::vector<std::pair<Rational, int>>{
                                        {rational(-1), 1}, {rational(1), 1}, {rational(3), 1}});
    auto cof = invariance_cofactor(ps21.field, ps21.surface.poly);
    CHECK(cof.invariant);

    auto pm = fixture("pseudo-type1-meridian(1,2,3)");
    CHECK(pm.field == parse_vector_field("x2 + 2*x3; -x1 + 3*x3; -2*x1 - 3*x2; 0"));
    CHECK(*pm.expected_meridian == parse_poly("3*x1 - 2*x2 + x3"));

    CHECK_THROWS_AS(fixture("meridian-sharp(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(fixture("meridian-sharp(2,1)"), std::invalid_argument);
    CHECK_THROWS_AS(fixture("parallel-sharp-s21(4,1)"), std::invalid_argument);
    CHECK_THROWS_AS(fixture("no-such-fixture(1)"), std::invalid_argument);
}

TEST_CASE("property: cofactor contracts for every builder") {
    for (std::uint64_t t = 0; t < 60; ++t) {
        Rng rng(111, t);
        switch (t % 6) {
            case 0: {
                auto rec = gen::quad_s12_record(rng, false);
                auto cof = invariance_cofactor(
                    rebuild(rec), make_hypersurface(SurfaceKind::S1xS2, rec.surface_param).poly);
                REQUIRE(cof.invariant);
                CHECK(*cof.cofactor ==
                      Poly::variable(3) * rec.k3 + Poly::variable(4) * rec.k4);
                break;
            }
            case 1: {
                auto rec = gen::kolm_s12_record(rng, false);
                auto cof = invariance_cofactor(
                    rebuild(rec), make_hypersurface(SurfaceKind::S1xS2, rec.surface_param).poly);
                REQUIRE(cof.invariant);
                CHECK(*cof.cofactor == Poly(Monomial{{0, 0, 2, 0}}, rec.k33) +
                                           Poly(Monomial{{0, 0, 0, 2}}, rec.k44));
                break;
            }
            case 2: {
                auto rec = gen::type_n_s12_record(rng);
                auto cof = invariance_cofactor(
                    rebuild(rec), make_hypersurface(SurfaceKind::S1xS2, rec.surface_param).poly);
                REQUIRE(cof.invariant);
                CHECK(cof.cofactor->is_zero());
                break;
            }
            case 3: {
                auto rec = gen::quad_s21_record(rng, false);
                auto cof = invariance_cofactor(
                    rebuild(rec), make_hypersurface(SurfaceKind::S2xS1, rec.surface_param).poly);
                REQUIRE(cof.invariant);
                CHECK(*cof.cofactor == Poly::variable(4) * rec.c);
                break;
            }
            case 4: {
                auto rec = gen::kolm_s21_record(rng, false);
                auto cof = invariance_cofactor(
                    rebuild(rec), make_hypersurface(SurfaceKind::S2xS1, rec.surface_param).poly);
                REQUIRE(cof.invariant);
                CHECK(*cof.cofactor == Poly(Monomial{{0, 0, 0, 2}}, rec.c));
                break;
            }
            default: {
                auto rec = gen::pseudo_type_n_s21_record(rng);
                auto cof = invariance_cofactor(
                    rebuild(rec), make_hypersurface(SurfaceKind::S2xS1, rec.surface_param).poly);
                REQUIRE(cof.invariant);
                CHECK(cof.cofactor->is_zero());
                break;
            }
        }
    }
}

TEST_CASE("property: no nonzero Lotka-Volterra field on either surface") {
    for (std::uint64_t t = 0; t < 60; ++t) {
        Rng rng(121, t);
        VectorField chi = (t % 2 == 0) ? rebuild(gen::quad_s12_record(rng, false))
                                       : rebuild(gen::quad_s21_record(rng, false));
        if (predicates(chi).is_lotka_volterra) CHECK(chi.is_zero());
    }
}
