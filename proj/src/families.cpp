#include "svf/families.hpp"

#include <algorithm>
#include <sstream>

namespace svf {

namespace {

Poly mono(unsigned e1, unsigned e2, unsigned e3, unsigned e4, const Rational& c = Rational(1)) {
    return Poly(Monomial{{e1, e2, e3, e4}}, c);
}

void require_linear(const Poly& p, const char* name) {
    auto d = p.degree();
    if (d && *d > 1) throw std::invalid_argument(std::string(name) + " must have degree <= 1");
}

void require_homogeneous_of(const Poly& p, int deg, const char* name) {
    if (p.is_zero()) return;
    if (!p.is_homogeneous() || *p.degree() != deg)
        throw std::invalid_argument(std::string(name) + " must be homogeneous of degree " + std::to_string(deg));
}

// Q = -a^2(x1^2+x2^2) + x3^2 + x4^2 + a^4 - 1
Poly q_s12(const Rational& a) {
    Rational a2 = a * a;
    return mono(2, 0, 0, 0, -a2) + mono(0, 2, 0, 0, -a2) + mono(0, 0, 2, 0) + mono(0, 0, 0, 2) +
           Poly(a2 * a2 - 1);
}

// Q' = -b^2(x1^2+x2^2+x3^2) + x4^2 + b^4 - 1
Poly q_s21(const Rational& b) {
    Rational b2 = b * b;
    return mono(2, 0, 0, 0, -b2) + mono(0, 2, 0, 0, -b2) + mono(0, 0, 2, 0, -b2) + mono(0, 0, 0, 2) +
           Poly(b2 * b2 - 1);
}

void require_param(const Rational& p) {
    if (p <= 1) throw std::invalid_argument("surface parameter must be > 1");
}

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::LinearS12: return "LinearS12";
        case Family::QuadS12: return "QuadS12";
        case Family::CubicKolmS12: return "CubicKolmS12";
        case Family::TypeN_S12: return "TypeN_S12";
        case Family::LinearS21: return "LinearS21";
        case Family::QuadS21: return "QuadS21";
        case Family::CubicKolmS21: return "CubicKolmS21";
        case Family::PseudoTypeN_S21: return "PseudoTypeN_S21";
    }
    return "?";
}

std::string to_string(NotMember::Reason reason) {
    switch (reason) {
        case NotMember::Reason::NotInvariant: return "not-invariant";
        case NotMember::Reason::WrongDegreeShape: return "wrong-degree-shape";
        case NotMember::Reason::ResidualMismatch: return "residual-mismatch";
    }
    return "?";
}

VectorField build_quadratic_s1s2(const Rational& a, const Rational& k3, const Rational& k4,
                                 const Poly& f, const Poly& g) {
    require_param(a);
    require_linear(f, "f");
    require_linear(g, "g");
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    Poly k = mono(0, 0, 1, 0, k3) + mono(0, 0, 0, 1, k4);
    Poly q = q_s12(a);
    VectorField chi;
    chi.p[0] = k * x1 * Rational(1, 4) + f * x2;
    chi.p[1] = k * x2 * Rational(1, 4) - f * x1;
    chi.p[2] = q * (k3 / 2) + g * x4;
    chi.p[3] = q * (k4 / 2) - g * x3;
    return chi;
}

VectorField build_cubic_kolmogorov_s1s2(const Rational& a, const Rational& k33, const Rational& k44,
                                        const Rational& alpha, const Rational& beta) {
    require_param(a);
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    Poly k = mono(0, 0, 2, 0, k33) + mono(0, 0, 0, 2, k44);
    Poly q = q_s12(a);
    VectorField chi;
    chi.p[0] = x1 * (k * Rational(1, 4) + mono(0, 2, 0, 0, alpha));
    chi.p[1] = x2 * (k * Rational(1, 4) - mono(2, 0, 0, 0, alpha));
    chi.p[2] = x3 * (q * (k33 / 2) + mono(0, 0, 0, 2, beta));
    chi.p[3] = x4 * (q * (k44 / 2) - mono(0, 0, 2, 0, beta));
    return chi;
}

VectorField build_type_n_s1s2(const Poly& A, const Poly& B, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    require_homogeneous_of(A, n - 1, "A");
    require_homogeneous_of(B, n - 1, "B");
    return build_pencil_form_s1s2(A, B);
}

VectorField build_pencil_form_s1s2(const Poly& A, const Poly& B) {
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    return VectorField{{A * x2, -(A * x1), B * x4, -(B * x3)}};
}

VectorField build_quadratic_s2s1(const Rational& b, const Rational& c, const Poly& f, const Poly& g,
                                 const Poly& h) {
    require_param(b);
    require_linear(f, "f");
    require_linear(g, "g");
    require_linear(h, "h");
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    Poly q = q_s21(b);
    VectorField chi;
    chi.p[0] = mono(1, 0, 0, 1, c / 4) + f * x2 + g * x3;
    chi.p[1] = mono(0, 1, 0, 1, c / 4) - f * x1 + h * x3;
    chi.p[2] = mono(0, 0, 1, 1, c / 4) - g * x1 - h * x2;
    chi.p[3] = q * (c / 2);
    return chi;
}

VectorField build_cubic_kolmogorov_s2s1(const Rational& b, const Rational& c, const Rational& alpha,
                                        const Rational& beta, const Rational& gamma) {
    require_param(b);
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    Poly cx42 = mono(0, 0, 0, 2, c / 4);
    VectorField chi;
    chi.p[0] = x1 * (cx42 + mono(0, 2, 0, 0, alpha) + mono(0, 0, 2, 0, beta));
    chi.p[1] = x2 * (cx42 - mono(2, 0, 0, 0, alpha) + mono(0, 0, 2, 0, gamma));
    chi.p[2] = x3 * (cx42 - mono(2, 0, 0, 0, beta) - mono(0, 2, 0, 0, gamma));
    chi.p[3] = x4 * (q_s21(b) * (c / 2));
    return chi;
}

VectorField build_pseudo_type_n_s2s1(const Poly& A, const Poly& B, const Poly& C, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    require_homogeneous_of(A, n - 1, "A");
    require_homogeneous_of(B, n - 1, "B");
    require_homogeneous_of(C, n - 1, "C");
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3);
    return VectorField{{A * x2 + B * x3, -(A * x1) + C * x3, -(B * x1) - C * x2, Poly()}};
}

VectorField rebuild(const FamilyRecord& r) {
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    switch (r.family) {
        case Family::LinearS12:
            return VectorField{{x2 * r.alpha, x1 * -r.alpha, x4 * r.beta, x3 * -r.beta}};
        case Family::QuadS12:
            return build_quadratic_s1s2(r.surface_param, r.k3, r.k4, r.f, r.g);
        case Family::CubicKolmS12:
            return build_cubic_kolmogorov_s1s2(r.surface_param, r.k33, r.k44, r.alpha, r.beta);
        case Family::TypeN_S12:
            return build_type_n_s1s2(r.A, r.B, r.n);
        case Family::LinearS21:
            return VectorField{{x2 * r.alpha + x3 * r.beta, x1 * -r.alpha + x3 * r.gamma,
                                x1 * -r.beta + x2 * -r.gamma, Poly()}};
        case Family::QuadS21:
            return build_quadratic_s2s1(r.surface_param, r.c, r.f, r.g, r.h);
        case Family::CubicKolmS21:
            return build_cubic_kolmogorov_s2s1(r.surface_param, r.c, r.alpha, r.beta, r.gamma);
        case Family::PseudoTypeN_S21:
            return build_pseudo_type_n_s2s1(r.A, r.B, r.C, r.n);
    }
    throw std::logic_error("unreachable");
}

namespace {

std::optional<Poly> exact_div(const Poly& f, const Poly& g) {
    if (f.is_zero()) return Poly();
    auto [q, rem] = divide(f, g);
    if (!rem.is_zero()) return std::nullopt;
    return q;
}

Poly part_without_x3(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms())
        if (m.e[2] == 0) r.add_term(m, c);
    return r;
}

// True when every monomial of p lies in `allowed`.
bool supported_on(const Poly& p, const std::vector<Monomial>& allowed) {
    for (const auto& [m, c] : p.terms())
        if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) return false;
    return true;
}

NotMember mismatch(const std::string& detail) {
    return NotMember{NotMember::Reason::ResidualMismatch, detail};
}

FamilyRecord make_record(Family family, const Rational& surface_param) {
    FamilyRecord rec;
    rec.family = family;
    rec.surface_param = surface_param;
    return rec;
}

ClassifyOutcome finish(FamilyRecord record, const VectorField& chi) {
    if (rebuild(record) != chi) return mismatch("rebuilt field differs from input");
    return record;
}

ClassifyOutcome classify_s12(const VectorField& chi, const Hypersurface& surface, const Poly& K) {
    const Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    const auto preds = predicates(chi);
    const auto profile = degree_profile(chi);

    if (preds.type_n) {
        if (!K.is_zero()) return mismatch("homogeneous field with nonzero cofactor");
        auto A = exact_div(chi.p[0], x2);
        auto B = exact_div(chi.p[2], x4);
        if (!A || !B) return mismatch("components do not factor through the pencil");
        FamilyRecord rec = make_record(Family::TypeN_S12, surface.param);
        rec.A = *A;
        rec.B = *B;
        rec.n = *preds.type_n;
        return finish(rec, chi);
    }

    if (!profile.degree || *profile.degree <= 1) {
        FamilyRecord rec = make_record(Family::LinearS12, surface.param);
        rec.alpha = chi.p[0].coefficient(Monomial{{0, 1, 0, 0}});
        rec.beta = chi.p[2].coefficient(Monomial{{0, 0, 0, 1}});
        return finish(rec, chi);
    }

    if (*profile.degree == 2) {
        if (!supported_on(K, {Monomial{{0, 0, 1, 0}}, Monomial{{0, 0, 0, 1}}}))
            return mismatch("cofactor is not of the form k3*x3 + k4*x4");
        FamilyRecord rec = make_record(Family::QuadS12, surface.param);
        rec.k3 = K.coefficient(Monomial{{0, 0, 1, 0}});
        rec.k4 = K.coefficient(Monomial{{0, 0, 0, 1}});
        auto f = exact_div(chi.p[0] - K * x1 * Rational(1, 4), x2);
        if (!f) return mismatch("P1 residual not divisible by x2");
        auto g = exact_div(chi.p[2] - q_s12(surface.param) * (rec.k3 / 2), x4);
        if (!g) return mismatch("P3 residual not divisible by x4");
        rec.f = *f;
        rec.g = *g;
        auto df = rec.f.degree(), dg = rec.g.degree();
        if ((df && *df > 1) || (dg && *dg > 1)) return mismatch("extracted f or g is not linear");
        return finish(rec, chi);
    }

    if (*profile.degree == 3 && preds.is_kolmogorov) {
        if (!supported_on(K, {Monomial{{0, 0, 2, 0}}, Monomial{{0, 0, 0, 2}}}))
            return mismatch("cofactor is not of the form k33*x3^2 + k44*x4^2");
        FamilyRecord rec = make_record(Family::CubicKolmS12, surface.param);
        rec.k33 = K.coefficient(Monomial{{0, 0, 2, 0}});
        rec.k44 = K.coefficient(Monomial{{0, 0, 0, 2}});
        Poly r1 = preds.kolmogorov_factors[0] - K * Rational(1, 4);
        if (!supported_on(r1, {Monomial{{0, 2, 0, 0}}})) return mismatch("psi1 residual is not alpha*x2^2");
        rec.alpha = r1.coefficient(Monomial{{0, 2, 0, 0}});
        Poly r3 = preds.kolmogorov_factors[2] - q_s12(surface.param) * (rec.k33 / 2);
        if (!supported_on(r3, {Monomial{{0, 0, 0, 2}}})) return mismatch("psi3 residual is not beta*x4^2");
        rec.beta = r3.coefficient(Monomial{{0, 0, 0, 2}});
        return finish(rec, chi);
    }

    return NotMember{NotMember::Reason::WrongDegreeShape,
                     "no characterized family on s1xs2 has this degree shape"};
}

ClassifyOutcome classify_s21(const VectorField& chi, const Hypersurface& surface, const Poly& K) {
    const Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3);
    const auto preds = predicates(chi);
    const auto profile = degree_profile(chi);

    if (preds.pseudo_type_n) {
        if (!K.is_zero()) return mismatch("homogeneous field with nonzero cofactor");
        Poly p1_flat = part_without_x3(chi.p[0]);
        auto A = exact_div(p1_flat, x2);
        auto B = exact_div(chi.p[0] - p1_flat, x3);
        if (!A || !B) return mismatch("P1 does not split as A*x2 + B*x3");
        auto C = exact_div(chi.p[1] + *A * x1, x3);
        if (!C) return mismatch("P2 residual not divisible by x3");
        FamilyRecord rec = make_record(Family::PseudoTypeN_S21, surface.param);
        rec.A = *A;
        rec.B = *B;
        rec.C = *C;
        rec.n = *preds.pseudo_type_n;
        return finish(rec, chi);
    }

    if (!profile.degree || *profile.degree <= 1) {
        FamilyRecord rec = make_record(Family::LinearS21, surface.param);
        rec.alpha = chi.p[0].coefficient(Monomial{{0, 1, 0, 0}});
        rec.beta = chi.p[0].coefficient(Monomial{{0, 0, 1, 0}});
        rec.gamma = chi.p[1].coefficient(Monomial{{0, 0, 1, 0}});
        return finish(rec, chi);
    }

    if (*profile.degree == 2) {
        if (!supported_on(K, {Monomial{{0, 0, 0, 1}}})) return mismatch("cofactor is not of the form c*x4");
        FamilyRecord rec = make_record(Family::QuadS21, surface.param);
        rec.c = K.coefficient(Monomial{{0, 0, 0, 1}});
        Poly r1 = chi.p[0] - mono(1, 0, 0, 1, rec.c / 4);
        Poly r1_flat = part_without_x3(r1);
        auto f = exact_div(r1_flat, x2);
        auto g = exact_div(r1 - r1_flat, x3);
        if (!f || !g) return mismatch("P1 residual does not split as f*x2 + g*x3");
        auto h = exact_div(chi.p[1] - mono(0, 1, 0, 1, rec.c / 4) + *f * x1, x3);
        if (!h) return mismatch("P2 residual not divisible by x3");
        rec.f = *f;
        rec.g = *g;
        rec.h = *h;
        for (const Poly* lin : {&rec.f, &rec.g, &rec.h}) {
            auto d = lin->degree();
            if (d && *d > 1) return mismatch("extracted f, g or h is not linear");
        }
        return finish(rec, chi);
    }

    if (*profile.degree == 3 && preds.is_kolmogorov) {
        if (!supported_on(K, {Monomial{{0, 0, 0, 2}}})) return mismatch("cofactor is not of the form c*x4^2");
        FamilyRecord rec = make_record(Family::CubicKolmS21, surface.param);
        rec.c = K.coefficient(Monomial{{0, 0, 0, 2}});
        Poly cx42 = mono(0, 0, 0, 2, rec.c / 4);
        Poly r1 = preds.kolmogorov_factors[0] - cx42;
        if (!supported_on(r1, {Monomial{{0, 2, 0, 0}}, Monomial{{0, 0, 2, 0}}}))
            return mismatch("psi1 residual is not alpha*x2^2 + beta*x3^2");
        rec.alpha = r1.coefficient(Monomial{{0, 2, 0, 0}});
        rec.beta = r1.coefficient(Monomial{{0, 0, 2, 0}});
        Poly r2 = preds.kolmogorov_factors[1] - cx42;
        if (!supported_on(r2, {Monomial{{2, 0, 0, 0}}, Monomial{{0, 0, 2, 0}}}))
            return mismatch("psi2 residual is not -alpha*x1^2 + gamma*x3^2");
        rec.gamma = r2.coefficient(Monomial{{0, 0, 2, 0}});
        return finish(rec, chi);
    }

    return NotMember{NotMember::Reason::WrongDegreeShape,
                     "no characterized family on s2xs1 has this degree shape"};
}

}  // namespace

ClassifyOutcome classify(const VectorField& chi, const Hypersurface& surface) {
    auto cof = invariance_cofactor(chi, surface.poly);
    if (!cof.invariant)
        return NotMember{NotMember::Reason::NotInvariant, "the surface polynomial does not divide chi G"};
    if (surface.kind == SurfaceKind::S1xS2) return classify_s12(chi, surface, *cof.cofactor);
    return classify_s21(chi, surface, *cof.cofactor);
}

namespace {

struct FixtureName {
    std::string tag;
    std::vector<Rational> args;
};

FixtureName parse_fixture_name(const std::string& name) {
    auto open = name.find('(');
    if (open == std::string::npos || name.back() != ')')
        throw std::invalid_argument("fixture name must look like tag(arg,...): " + name);
    FixtureName fx;
    fx.tag = name.substr(0, open);
    std::string args = name.substr(open + 1, name.size() - open - 2);
    std::istringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        fx.args.push_back(parse_rational(item));
    }
    return fx;
}

int as_int(const Rational& q, const char* what) {
    if (q.get_den() != 1 || !q.get_num().fits_sint_p())
        throw std::invalid_argument(std::string(what) + " must be a small integer");
    return static_cast<int>(q.get_num().get_si());
}

}  // namespace

Fixture fixture(const std::string& name) {
    const auto fx = parse_fixture_name(name);
    const Rational two = rational(2);
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);

    if (fx.tag == "meridian-sharp") {
        if (fx.args.size() != 2) throw std::invalid_argument("meridian-sharp needs (n,c)");
        int n = as_int(fx.args[0], "n");
        const Rational& c = fx.args[1];
        if (n < 2) throw std::invalid_argument("meridian-sharp needs n >= 2");
        if (c == 1 || c == -1) throw std::invalid_argument("meridian-sharp needs c outside {1,-1}");
        Fixture out;
        out.surface = make_hypersurface(SurfaceKind::S1xS2, two);
        Poly x1n1 = x1.pow(static_cast<unsigned>(n - 1));
        out.field = VectorField{{x1n1 * x2 * x3, -(x1n1 * x1 * x3), x1n1 * x3 * x4 * c,
                                 -(x1n1 * x3 * x3 * c)}};
        // Determinant of the iterated-derivative matrix with rows
        // (v, chi v, chi^2 v); the scalar factor is c^2 - 1, consistent with
        // the two-element cases E<1,x4> = P4 and E<x1,x2> = x1 P2 - x2 P1.
        out.expected_extactic =
            (x1 * x1 + x2 * x2) * Poly(c * c - 1) * x1.pow(static_cast<unsigned>(3 * n - 3)) * x3.pow(4);
        out.expected_multiplicities = {{x1, 3 * n - 3}, {x3, 4}};
        return out;
    }

    if (fx.tag == "parallel-sharp-s12") {
        if (fx.args.size() < 2) throw std::invalid_argument("parallel-sharp-s12 needs (n,k1..k_{n-1})");
        int n = as_int(fx.args[0], "n");
        std::vector<Rational> ks(fx.args.begin() + 1, fx.args.end());
        if (n < 2 || ks.size() != static_cast<std::size_t>(n - 1))
            throw std::invalid_argument("parallel-sharp-s12 needs n >= 2 and n-1 plane values");
        Poly w(1);
        for (const auto& k : ks) w = w * (x4 - Poly(k));
        Poly a_poly = x1.pow(static_cast<unsigned>(n - 1));
        Fixture out;
        out.field = VectorField{{a_poly * x2, -(a_poly * x1), x4 * w, -(x3 * w)}};
        out.surface = make_hypersurface(SurfaceKind::S1xS2, two);
        for (const auto& k : ks) out.expected_parallel.emplace_back(k, 1);
        std::sort(out.expected_parallel.begin(), out.expected_parallel.end(),
                  [](const auto& u, const auto& v) { return u.first < v.first; });
        return out;
    }

    if (fx.tag == "parallel-sharp-s21") {
        int n = as_int(fx.args.at(0), "n");
        std::vector<Rational> ks(fx.args.begin() + 1, fx.args.end());
        if (n < 3 || ks.size() != static_cast<std::size_t>(n - 3))
            throw std::invalid_argument("parallel-sharp-s21 needs n >= 3 and n-3 plane values");
        for (const auto& k : ks)
            if (k == 1 || k == -1) throw std::invalid_argument("plane values must avoid {1,-1}");
        Poly w(1);
        for (const auto& k : ks) w = w * (x4 - Poly(k));
        Poly shell = x1 * x1 + x2 * x2 + x3 * x3 - Poly(two * two);
        Poly p123 = x4 * shell * w * Rational(1, 4);
        Poly p4 = (x1 + x2 + x3) * (x4 * x4 - Poly(1)) * w * Rational(1, 2);
        Fixture out;
        out.field = VectorField{{p123, p123, p123, p4}};
        out.surface = make_hypersurface(SurfaceKind::S2xS1, two);
        out.expected_parallel.emplace_back(rational(-1), 1);
        out.expected_parallel.emplace_back(rational(1), 1);
        for (const auto& k : ks) out.expected_parallel.emplace_back(k, 1);
        std::sort(out.expected_parallel.begin(), out.expected_parallel.end(),
                  [](const auto& u, const auto& v) { return u.first < v.first; });
        return out;
    }

    if (fx.tag == "pseudo-type1-meridian") {
        if (fx.args.size() != 3) throw std::invalid_argument("pseudo-type1-meridian needs (A,B,C)");
        const Rational &a = fx.args[0], &b = fx.args[1], &c = fx.args[2];
        if (a == 0) throw std::invalid_argument("pseudo-type1-meridian needs A != 0");
        Fixture out;
        out.field = build_pseudo_type_n_s2s1(Poly(a), Poly(b), Poly(c), 1);
        out.surface = make_hypersurface(SurfaceKind::S2xS1, two);
        out.expected_meridian = x1 * c - x2 * b + x3 * a;
        return out;
    }

    throw std::invalid_argument("unknown fixture '" + fx.tag + "'");
}

}  // namespace svf
