#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svf/families.hpp"
#include "svf/generators.hpp"
#include "svf/rng.hpp"
#include "svf/vector_field.hpp"

using namespace svf;

namespace {

VectorField rotation() {
    return parse_vector_field("x2; -x1; x4; -x3");
}

}  // namespace

TEST_CASE("lie derivative basics") {
    VectorField chi = rotation();
    CHECK(lie_derivative(chi, parse_poly("x1^2 + x2^2")).is_zero());
    CHECK(lie_derivative(chi, Poly::variable(1)) == Poly::variable(2));

    // Quadratic family instance (a=2, k3=1, k4=0, f=g=0): chi G = x3 * G.
    VectorField quad = build_quadratic_s1s2(rational(2), rational(1), rational(0), Poly(), Poly());
    Poly g = make_hypersurface(SurfaceKind::S1xS2, rational(2)).poly;
    CHECK(lie_derivative(quad, g) == Poly::variable(3) * g);
}

TEST_CASE("iterated lie derivative") {
    VectorField chi = rotation();
    Poly f = parse_poly("x1*x4^2 - x3");
    CHECK(iterated_lie(chi, f, 0) == f);

    VectorField planar = parse_vector_field("x2; -x1; 0; 0");
    CHECK(iterated_lie(planar, Poly::variable(1), 2) == -Poly::variable(1));

    // x3 -> x4 -> -x3 -> -x4 under the double rotation
    CHECK(iterated_lie(chi, Poly::variable(3), 3) == -Poly::variable(4));
}

TEST_CASE("degree profile") {
    auto dp = degree_profile(rotation());
    for (const auto& d : dp.component) CHECK(d == 1);
    CHECK(dp.degree == 1);

    auto zero = degree_profile(VectorField{});
    for (const auto& d : zero.component) CHECK_FALSE(d.has_value());
    CHECK_FALSE(zero.degree.has_value());

    VectorField quad = build_quadratic_s1s2(rational(2), rational(1), rational(0), Poly(), Poly());
    auto qp = degree_profile(quad);
    CHECK(qp.component[0] == 2);
    CHECK(qp.component[1] == 2);
    CHECK(qp.component[2] == 2);
    CHECK_FALSE(qp.component[3].has_value());
    CHECK(qp.degree == 2);
}

TEST_CASE("structural predicates") {
    auto k = predicates(parse_vector_field("x1*x2^2; -x2*x1^2; 0; 0"));
    CHECK(k.is_kolmogorov);
    CHECK_FALSE(k.is_lotka_volterra);
    CHECK_FALSE(k.type_n.has_value());

    auto t = predicates(rotation());
    CHECK(t.type_n == 1);
    CHECK_FALSE(t.pseudo_type_n.has_value());
    CHECK_FALSE(t.is_kolmogorov);

    auto p = predicates(parse_vector_field("x2; -x1; -x1 - x2; 0"));
    CHECK(p.pseudo_type_n == 1);
    CHECK_FALSE(p.type_n.has_value());

    auto lv = predicates(parse_vector_field("x1*x2; 2*x2; -x3; x4*(1 + x1)"));
    CHECK(lv.is_kolmogorov);
    CHECK(lv.is_lotka_volterra);

    auto z = predicates(VectorField{});
    CHECK(z.is_kolmogorov);
    CHECK(z.is_lotka_volterra);
}

TEST_CASE("hamiltonian field of a function") {
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    Poly h = (x1 * x1 + x2 * x2) * rational(-1, 2) + (x3 * x3 + x4 * x4) * rational(-1, 2);
    CHECK(hamiltonian_field_of(h) == rotation());
    CHECK(hamiltonian_field_of(Poly(5)).is_zero());
    CHECK(hamiltonian_field_of(x1 * x2) == parse_vector_field("-x1; x2; 0; 0"));
}

TEST_CASE("field text form") {
    VectorField chi = rotation();
    CHECK(parse_vector_field(to_string(chi)) == chi);
    CHECK(parse_vector_field("x2; -x1;\n# trailing comment\n x4; -x3") == chi);
    CHECK_THROWS_AS(parse_vector_field("x1; x2; x3"), std::invalid_argument);
}

TEST_CASE("property: Leibniz rule and linearity, exactly") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        Rng rng(51, t);
        VectorField chi;
        for (int i = 0; i < kNumVars; ++i) chi.p[i] = gen::random_poly(rng, 2);
        Poly f = gen::random_poly(rng, 3), g = gen::random_poly(rng, 3);
        CHECK(lie_derivative(chi, f * g) == f * lie_derivative(chi, g) + g * lie_derivative(chi, f));
        Rational a = gen::rational9(rng), b = gen::rational9(rng);
        CHECK(lie_derivative(chi, f * a + g * b) ==
              lie_derivative(chi, f) * a + lie_derivative(chi, g) * b);
    }
}

TEST_CASE("property: a Hamiltonian is a first integral of its field") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        Rng rng(61, t);
        Poly h = gen::random_poly(rng, 4);
        CHECK(lie_derivative(hamiltonian_field_of(h), h).is_zero());
    }
}

TEST_CASE("property: iterated lie composes additively") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng(71, t);
        VectorField chi;
        for (int i = 0; i < kNumVars; ++i) chi.p[i] = gen::random_poly(rng, 1);
        Poly f = gen::random_poly(rng, 2);
        unsigned j = static_cast<unsigned>(rng.below(3)), k = static_cast<unsigned>(rng.below(3));
        CHECK(iterated_lie(chi, f, j + k) == iterated_lie(chi, iterated_lie(chi, f, k), j));
    }
}
