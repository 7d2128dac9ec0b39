#include "svf/suite.hpp"

#include <functional>
#include <sstream>

#include "svf/extactic.hpp"
#include "svf/generators.hpp"
#include "svf/integrability.hpp"
#include "svf/linalg.hpp"
#include "svf/rng.hpp"

namespace svf::suite {

namespace {

using Check = std::function<bool(int, Rng&, std::string&)>;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Poly expected_quad_s12_cofactor(const FamilyRecord& rec) {
    return Poly::variable(3) * rec.k3 + Poly::variable(4) * rec.k4;
}

bool cofactor_matches(const VectorField& chi, const Hypersurface& surface, const Poly& expected,
                      std::string& dump) {
    auto res = invariance_cofactor(chi, surface.poly);
    if (!res.invariant) {
        dump = "field is not invariant: " + to_string(chi);
        return false;
    }
    if (*res.cofactor != expected) {
        dump = "cofactor " + res.cofactor->to_string() + " != expected " + expected.to_string();
        return false;
    }
    // Independent of the division route: chi G - K G must vanish identically.
    if (!(lie_derivative(chi, surface.poly) - expected * surface.poly).is_zero()) {
        dump = "cofactor identity fails";
        return false;
    }
    return true;
}

bool check_quad_s12_cofactor(int /*instance*/, Rng& rng, std::string& dump) {
    auto rec = gen::quad_s12_record(rng, false);
    auto surface = make_hypersurface(SurfaceKind::S1xS2, rec.surface_param);
    return cofactor_matches(rebuild(rec), surface, expected_quad_s12_cofactor(rec), dump);
}

bool check_kolm_s12_cofactor(int /*instance*/, Rng& rng, std::string& dump) {
    auto rec = gen::kolm_s12_record(rng, false);
    auto surface = make_hypersurface(SurfaceKind::S1xS2, rec.surface_param);
    Poly expected = Poly(Monomial{{0, 0, 2, 0}}, rec.k33) + Poly(Monomial{{0, 0, 0, 2}}, rec.k44);
    return cofactor_matches(rebuild(rec), surface, expected, dump);
}

bool check_quad_s21_cofactor(int /*instance*/, Rng& rng, std::string& dump) {
    auto rec = gen::quad_s21_record(rng, false);
    auto surface = make_hypersurface(SurfaceKind::S2xS1, rec.surface_param);
    return cofactor_matches(rebuild(rec), surface, Poly::variable(4) * rec.c, dump);
}

bool check_kolm_s21_cofactor(int /*instance*/, Rng& rng, std::string& dump) {
    auto rec = gen::kolm_s21_record(rng, false);
    auto surface = make_hypersurface(SurfaceKind::S2xS1, rec.surface_param);
    return cofactor_matches(rebuild(rec), surface, Poly(Monomial{{0, 0, 0, 2}}, rec.c), dump);
}

bool check_type_n_cofactor(int /*instance*/, Rng& rng, std::string& dump) {
    auto rec = gen::type_n_s12_record(rng);
    auto surface = make_hypersurface(SurfaceKind::S1xS2, rec.surface_param);
    return cofactor_matches(rebuild(rec), surface, Poly(), dump);
}

bool check_pseudo_type_n_cofactor(int /*instance*/, Rng& rng, std::string& dump) {
    auto rec = gen::pseudo_type_n_s21_record(rng);
    auto surface = make_hypersurface(SurfaceKind::S2xS1, rec.surface_param);
    return cofactor_matches(rebuild(rec), surface, Poly(), dump);
}

FamilyRecord classifiable_record(Rng& rng, int which) {
    switch (which % 6) {
        case 0: return gen::quad_s12_record(rng, true);
        case 1: return gen::kolm_s12_record(rng, true);
        case 2: return gen::type_n_s12_record(rng);
        case 3: return gen::quad_s21_record(rng, true);
        case 4: return gen::kolm_s21_record(rng, true);
        default: return gen::pseudo_type_n_s21_record(rng);
    }
}

bool roundtrip_one(const FamilyRecord& rec, std::string& dump) {
    VectorField chi = rebuild(rec);
    SurfaceKind kind = (rec.family == Family::QuadS12 || rec.family == Family::CubicKolmS12 ||
                        rec.family == Family::TypeN_S12 || rec.family == Family::LinearS12)
                           ? SurfaceKind::S1xS2
                           : SurfaceKind::S2xS1;
    auto outcome = classify(chi, make_hypersurface(kind, rec.surface_param));
    if (const auto* miss = std::get_if<NotMember>(&outcome)) {
        dump = "classify refused " + to_string(rec.family) + ": " + miss->detail;
        return false;
    }
    const auto& got = std::get<FamilyRecord>(outcome);
    if (!(got == rec)) {
        dump = "classify returned different parameters for " + to_string(rec.family);
        return false;
    }
    if (rebuild(got) != chi) {
        dump = "rebuilt field differs for " + to_string(rec.family);
        return false;
    }
    return true;
}

bool check_classify_roundtrip(int instance, Rng& rng, std::string& dump) {
    return roundtrip_one(classifiable_record(rng, instance), dump);
}

bool check_lotka_volterra_empty(int /*instance*/, Rng& rng, std::string& dump) {
    bool s12 = rng.below(2) == 0;
    FamilyRecord rec = s12 ? gen::quad_s12_record(rng, false) : gen::quad_s21_record(rng, false);
    VectorField chi = rebuild(rec);
    auto preds = predicates(chi);
    if (preds.is_lotka_volterra && !chi.is_zero()) {
        dump = "nonzero Lotka-Volterra field on the surface: " + to_string(chi);
        return false;
    }
    return true;
}

bool check_no_type_n_s21(int /*instance*/, Rng& rng, std::string& dump) {
    int n = 1 + static_cast<int>(rng.below(4));
    VectorField chi;
    for (int i = 0; i < kNumVars; ++i) chi.p[i] = gen::nonzero_homogeneous_poly(rng, n);
    auto surface = make_hypersurface(SurfaceKind::S2xS1, gen::surface_param(rng));
    if (invariance_cofactor(chi, surface.poly).invariant) {
        dump = "homogeneous field with nonzero P4 invariant on s2xs1: " + to_string(chi);
        return false;
    }
    return true;
}

bool check_no_pseudo_type_n_s12(int /*instance*/, Rng& rng, std::string& dump) {
    int n = 1 + static_cast<int>(rng.below(4));
    VectorField chi;
    for (int i = 0; i < 3; ++i) chi.p[i] = gen::nonzero_homogeneous_poly(rng, n);
    auto surface = make_hypersurface(SurfaceKind::S1xS2, gen::surface_param(rng));
    if (invariance_cofactor(chi, surface.poly).invariant) {
        dump = "pseudo-homogeneous field invariant on s1xs2: " + to_string(chi);
        return false;
    }
    return true;
}

bool check_degree_window(int /*instance*/, Rng& rng, std::string& dump) {
    // deg(P1)=deg(P2)=m and deg(P3)=deg(P4)=n with m-1 <= n <= m+3 forces a
    // zero cofactor for invariant fields; instances come from the pencil form.
    int m = 1 + static_cast<int>(rng.below(3));
    int low = std::max(1, m - 1);
    int n = low + static_cast<int>(rng.below(static_cast<std::uint64_t>(m + 3 - low + 1)));
    VectorField chi = build_pencil_form_s1s2(gen::nonzero_homogeneous_poly(rng, m - 1),
                                             gen::nonzero_homogeneous_poly(rng, n - 1));
    auto surface = make_hypersurface(SurfaceKind::S1xS2, gen::surface_param(rng));
    return cofactor_matches(chi, surface, Poly(), dump);
}

bool check_no_hamiltonian(int instance, Rng& rng, std::string& dump) {
    VectorField chi;
    switch (instance % 5) {
        case 0: {
            FamilyRecord rec;
            do {
                rec = gen::quad_s12_record(rng, false);
            } while (degree_profile(rebuild(rec)).degree != std::optional<int>(2));
            chi = rebuild(rec);
            break;
        }
        case 1: {
            FamilyRecord rec;
            do {
                rec = gen::kolm_s12_record(rng, false);
            } while (rebuild(rec).is_zero());
            chi = rebuild(rec);
            break;
        }
        case 2: {
            FamilyRecord rec;
            do {
                rec = gen::quad_s21_record(rng, false);
            } while (degree_profile(rebuild(rec)).degree != std::optional<int>(2));
            chi = rebuild(rec);
            break;
        }
        case 3: {
            FamilyRecord rec;
            do {
                rec = gen::kolm_s21_record(rng, false);
            } while (rebuild(rec).is_zero());
            chi = rebuild(rec);
            break;
        }
        default: {
            FamilyRecord rec;
            do {
                rec = gen::pseudo_type_n_s21_record(rng);
            } while (rebuild(rec).p[2].is_zero());
            chi = rebuild(rec);
            break;
        }
    }
    auto res = hamiltonian_solve(chi);
    if (res.exists) {
        dump = "unexpected Hamiltonian " + res.hamiltonian->to_string() + " for " + to_string(chi);
        return false;
    }
    return true;
}

bool check_hamiltonian_type1(int /*instance*/, Rng& rng, std::string& dump) {
    Rational a = gen::nonzero_rational9(rng), b = gen::nonzero_rational9(rng);
    VectorField chi = build_type_n_s1s2(Poly(a), Poly(b), 1);
    auto res = hamiltonian_solve(chi);
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2), x3 = Poly::variable(3), x4 = Poly::variable(4);
    Poly expected = (x1 * x1 + x2 * x2) * (-a / 2) + (x3 * x3 + x4 * x4) * (-b / 2);
    if (!res.exists || *res.hamiltonian != expected) {
        dump = "type-1 Hamiltonian mismatch for A=" + to_string(a) + ", B=" + to_string(b);
        return false;
    }
    return true;
}

bool darboux_g_pair(const VectorField& chi, const Hypersurface& surface, std::string& dump) {
    Poly r2 = Poly::variable(1) * Poly::variable(1) + Poly::variable(2) * Poly::variable(2);
    auto kg = invariance_cofactor(chi, surface.poly);
    auto kr = invariance_cofactor(chi, r2);
    if (!kg.invariant || !kr.invariant) {
        dump = "expected invariant factors";
        return false;
    }
    auto lambda = darboux_exponents({{surface.poly, *kg.cofactor}, {r2, *kr.cofactor}});
    if (!lambda || lambda->size() != 2 || (*lambda)[0] != 1 || (*lambda)[1] != -2) {
        dump = "exponents are not (1,-2)";
        return false;
    }
    DarbouxProduct product{{{surface.poly, (*lambda)[0]}, {r2, (*lambda)[1]}}};
    if (!verify_first_integral(chi, product)) {
        dump = "sum lambda_i K_i != 0";
        return false;
    }
    return true;
}

bool check_darboux_quad_s12(int /*instance*/, Rng& rng, std::string& dump) {
    FamilyRecord rec;
    do {
        rec = gen::quad_s12_record(rng, false);
    } while (rec.k3 == 0 && rec.k4 == 0);
    return darboux_g_pair(rebuild(rec), make_hypersurface(SurfaceKind::S1xS2, rec.surface_param), dump);
}

bool check_darboux_kolm_s12(int /*instance*/, Rng& rng, std::string& dump) {
    FamilyRecord rec;
    do {
        rec = gen::kolm_s12_record(rng, false);
    } while (rec.k33 == 0 && rec.k44 == 0);
    return darboux_g_pair(rebuild(rec), make_hypersurface(SurfaceKind::S1xS2, rec.surface_param), dump);
}

bool check_darboux_kolm_s21(int /*instance*/, Rng& rng, std::string& dump) {
    FamilyRecord rec;
    do {
        rec = gen::kolm_s21_record(rng, false);
    } while (rec.c == 0 || (rec.alpha == 0 && rec.beta == 0 && rec.gamma == 0));
    VectorField chi = rebuild(rec);
    std::vector<std::pair<Poly, Poly>> pairs;
    Poly sphere = Poly::variable(1) * Poly::variable(1) + Poly::variable(2) * Poly::variable(2) +
                  Poly::variable(3) * Poly::variable(3);
    for (const Poly& f : {Poly::variable(1), Poly::variable(2), Poly::variable(3), sphere}) {
        auto res = invariance_cofactor(chi, f);
        if (!res.invariant) {
            dump = "expected invariant factor " + f.to_string();
            return false;
        }
        pairs.emplace_back(f, *res.cofactor);
    }
    auto lambda = darboux_exponents(pairs);
    if (!lambda) {
        dump = "no exponents found";
        return false;
    }
    std::vector<Rational> expected{rec.gamma, -rec.beta, rec.alpha,
                                   -(rec.gamma - rec.beta + rec.alpha) / 2};
    expected = linalg::canonicalize_vector(std::move(expected));
    if (*lambda != expected) {
        dump = "exponents differ from (gamma,-beta,alpha,-(gamma-beta+alpha)/2)";
        return false;
    }
    Poly sum;
    for (std::size_t i = 0; i < pairs.size(); ++i) sum += pairs[i].second * (*lambda)[i];
    if (!sum.is_zero()) {
        dump = "sum lambda_i K_i != 0";
        return false;
    }
    return true;
}

bool check_first_integrals_rank(int instance, Rng& rng, std::string& dump) {
    bool s12 = instance % 2 == 0;
    FamilyRecord rec = s12 ? gen::type_n_s12_record(rng) : gen::pseudo_type_n_s21_record(rng);
    VectorField chi = rebuild(rec);
    auto surface = make_hypersurface(s12 ? SurfaceKind::S1xS2 : SurfaceKind::S2xS1, rec.surface_param);
    auto integrals = known_first_integrals(chi, rec);
    for (const auto& f : integrals) {
        if (!lie_derivative(chi, f).is_zero()) {
            dump = "integral not conserved: " + f.to_string();
            return false;
        }
    }
    int rank = independence_rank(integrals, surface, 8, rng.next());
    if (rank != 2) {
        dump = "independence rank " + std::to_string(rank) + " != 2";
        return false;
    }
    return true;
}

bool check_pencil_trichotomy(int /*instance*/, Rng& rng, std::string& dump) {
    FamilyRecord rec = gen::quad_s12_record(rng, false);
    switch (rng.below(3)) {
        case 0: rec.f = Poly(); break;
        case 1:
            rec.f = Poly::variable(1) * gen::nonzero_rational9(rng) +
                    Poly::variable(2) * gen::rational9(rng);
            break;
        default: break;  // keep the generic linear draw
    }
    VectorField chi = rebuild(rec);
    auto report = enumerate_pencil(chi, Pencil::X1X2);
    // Oracle straight from the parameters: the pencil planes of the quadratic
    // family are the pencil divisors of f.
    if (rec.f.is_zero()) {
        if (!report.all_invariant) {
            dump = "expected the whole pencil invariant for f = 0";
            return false;
        }
        return true;
    }
    Rational f1 = rec.f.coefficient(Monomial{{1, 0, 0, 0}});
    Rational f2 = rec.f.coefficient(Monomial{{0, 1, 0, 0}});
    bool pencil_divisor = rec.f == Poly::variable(1) * f1 + Poly::variable(2) * f2 && (f1 != 0 || f2 != 0);
    std::size_t expected = pencil_divisor ? 1 : 0;
    if (report.all_invariant || report.ratios.size() != expected) {
        dump = "pencil count mismatch for f = " + rec.f.to_string();
        return false;
    }
    return true;
}

bool check_parallel_sharp(int /*instance*/, Rng& rng, std::string& dump) {
    bool s12 = rng.below(2) == 0;
    int n = s12 ? 2 + static_cast<int>(rng.below(3)) : 3 + static_cast<int>(rng.below(3));
    int planted = s12 ? n - 1 : n - 3;
    std::vector<Rational> ks;
    while (static_cast<int>(ks.size()) < planted) {
        Rational k = gen::rational9(rng);
        if (k == 1 || k == -1) continue;
        if (std::find(ks.begin(), ks.end(), k) != ks.end()) continue;
        ks.push_back(k);
    }
    std::string name = s12 ? "parallel-sharp-s12(" : "parallel-sharp-s21(";
    name += std::to_string(n);
    for (const auto& k : ks) name += "," + to_string(k);
    name += ")";
    auto fx = fixture(name);
    auto report = enumerate_parallel(fx.field);
    if (report.all_invariant || report.candidates_indeterminate ||
        report.planes != fx.expected_parallel) {
        dump = "parallel planes mismatch for " + name;
        return false;
    }
    return true;
}

bool check_extactic_meridian_sharp(int /*instance*/, Rng& rng, std::string& dump) {
    int n = 2 + static_cast<int>(rng.below(4));
    Rational c;
    do {
        c = gen::nonzero_rational9(rng);
    } while (c == 1 || c == -1);
    auto fx = fixture("meridian-sharp(" + std::to_string(n) + "," + to_string(c) + ")");
    SubspaceBasis w({Poly::variable(1), Poly::variable(2), Poly::variable(3)});
    if (extactic(fx.field, w) != *fx.expected_extactic) {
        dump = "extactic differs from the closed form at n=" + std::to_string(n) + ", c=" + to_string(c);
        return false;
    }
    for (const auto& [plane, mult] : fx.expected_multiplicities) {
        auto m = multiplicity(fx.field, w, plane);
        if (m.infinite || m.value != mult) {
            dump = "multiplicity of " + plane.to_string() + " differs";
            return false;
        }
    }
    return true;
}

bool check_degree_relation(int /*instance*/, Rng& rng, std::string& dump) {
    int da = static_cast<int>(rng.below(4));
    int db = static_cast<int>(rng.below(4));
    VectorField chi = build_pencil_form_s1s2(gen::nonzero_homogeneous_poly(rng, da),
                                             gen::nonzero_homogeneous_poly(rng, db));
    auto surface = make_hypersurface(SurfaceKind::S1xS2, gen::surface_param(rng));
    auto res = invariance_cofactor(chi, surface.poly);
    if (!res.invariant || !res.cofactor->is_zero()) {
        dump = "pencil-form field should have zero cofactor";
        return false;
    }
    auto profile = degree_profile(chi);
    for (const auto& d : profile.component)
        if (!d) {
            dump = "zero component in a nonzero construction";
            return false;
        }
    if (!degree_profile_admissible(*profile.component[0], *profile.component[1],
                                   *profile.component[2], *profile.component[3])) {
        dump = "realized profile rejected by the degree relation";
        return false;
    }
    return true;
}

bool check_hamiltonian_closedness(int instance, Rng& rng, std::string& dump) {
    VectorField chi;
    if (instance % 2 == 0) {
        for (int i = 0; i < kNumVars; ++i) chi.p[i] = gen::random_poly(rng, 2);
        if (chi.is_zero()) chi.p[0] = Poly::variable(1);
    } else {
        Poly h = gen::random_poly(rng, 3);
        h.add_term(Monomial{}, -h.coefficient(Monomial{}));
        if (h.is_zero()) h = Poly::variable(1) * Poly::variable(2);
        chi = hamiltonian_field_of(h);
        if (chi.is_zero()) chi = hamiltonian_field_of(Poly::variable(1) * Poly::variable(2));
    }
    std::array<Poly, kNumVars> w = {chi.p[1], -chi.p[0], chi.p[3], -chi.p[2]};
    bool closed = true;
    for (int i = 0; i < kNumVars && closed; ++i)
        for (int j = i + 1; j < kNumVars && closed; ++j)
            if (w[i].derivative(j + 1) != w[j].derivative(i + 1)) closed = false;
    auto res = hamiltonian_solve(chi);
    if (res.exists != closed) {
        dump = std::string("solver ") + (res.exists ? "succeeded" : "failed") + " on a " +
               (closed ? "closed" : "non-closed") + " field";
        return false;
    }
    if (res.exists && hamiltonian_field_of(*res.hamiltonian) != chi) {
        dump = "returned Hamiltonian does not reproduce the field";
        return false;
    }
    return true;
}

const std::vector<std::pair<std::string, Check>>& registry() {
    static const std::vector<std::pair<std::string, Check>> suites = {
        {"quad-s12-cofactor", check_quad_s12_cofactor},
        {"kolm-s12-cofactor", check_kolm_s12_cofactor},
        {"quad-s21-cofactor", check_quad_s21_cofactor},
        {"kolm-s21-cofactor", check_kolm_s21_cofactor},
        {"type-n-s12-cofactor", check_type_n_cofactor},
        {"pseudo-type-n-s21-cofactor", check_pseudo_type_n_cofactor},
        {"classify-roundtrip", check_classify_roundtrip},
        {"lotka-volterra-empty", check_lotka_volterra_empty},
        {"no-type-n-s21", check_no_type_n_s21},
        {"no-pseudo-type-n-s12", check_no_pseudo_type_n_s12},
        {"degree-window", check_degree_window},
        {"no-hamiltonian", check_no_hamiltonian},
        {"hamiltonian-type1", check_hamiltonian_type1},
        {"hamiltonian-closedness", check_hamiltonian_closedness},
        {"darboux-quad-s12", check_darboux_quad_s12},
        {"darboux-kolm-s12", check_darboux_kolm_s12},
        {"darboux-kolm-s21", check_darboux_kolm_s21},
        {"first-integrals-rank", check_first_integrals_rank},
        {"pencil-trichotomy", check_pencil_trichotomy},
        {"parallel-sharp", check_parallel_sharp},
        {"extactic-meridian-sharp", check_extactic_meridian_sharp},
        {"degree-relation", check_degree_relation},
    };
    return suites;
}

SuiteResult run_one(const std::string& name, const Check& check, std::uint64_t seed, int instances) {
    SuiteResult result;
    result.name = name;
    result.instances = instances;
    for (int t = 0; t < instances; ++t) {
        Rng rng(seed ^ fnv1a(name), static_cast<std::uint64_t>(t));
        std::string dump;
        bool ok = false;
        try {
            ok = check(t, rng, dump);
        } catch (const std::exception& e) {
            dump = std::string("exception: ") + e.what();
        }
        if (ok) {
            ++result.passes;
        } else if (result.counterexample.empty()) {
            std::ostringstream os;
            os << "instance " << t << ": " << dump;
            result.counterexample = os.str();
        }
    }
    return result;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, check] : registry()) names.push_back(name);
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed, int instances) {
    if (instances < 1) throw std::invalid_argument("instances must be >= 1");
    std::vector<SuiteResult> results;
    bool found = false;
    for (const auto& [name, check] : registry()) {
        if (which != "all" && which != name) continue;
        found = true;
        results.push_back(run_one(name, check, seed, instances));
    }
    if (!found) throw std::invalid_argument("unknown suite '" + which + "'");
    return results;
}

}  // namespace svf::suite
