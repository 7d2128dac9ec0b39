#include "svf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "svf/extactic.hpp"
#include "svf/generators.hpp"
#include "svf/integrability.hpp"
#include "svf/numeric_sim.hpp"
#include "svf/suite.hpp"

namespace svf::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void emit(std::ostream& out, const Json& payload) { out << payload.dump(2) << "\n"; }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct FieldInput {
    std::string inline_text;
    std::string file;

    VectorField load() const {
        if (!inline_text.empty() && !file.empty())
            throw std::invalid_argument("--field and --field-file are mutually exclusive");
        if (!inline_text.empty()) return parse_vector_field(inline_text);
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open field file '" + file + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            return parse_vector_field(buffer.str());
        }
        throw std::invalid_argument("a vector field is required (--field or --field-file)");
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--field", inline_text, "vector field \"P1; P2; P3; P4\"");
        cmd->add_option("--field-file", file, "file with the field text ('#' comments allowed)");
    }
};

struct SurfaceInput {
    std::string kind_text = "s1xs2";
    std::string param_text = "2";

    Hypersurface load() const {
        auto kind = surface_kind_from_string(kind_text);
        if (!kind) throw std::invalid_argument("surface must be s1xs2 or s2xs1");
        return make_hypersurface(*kind, parse_rational(param_text));
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--surface", kind_text, "s1xs2 or s2xs1")->capture_default_str();
        cmd->add_option("--param", param_text, "surface parameter a or b (> 1)")->capture_default_str();
    }
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

Json record_json(const FamilyRecord& rec) {
    Json params = Json::object();
    switch (rec.family) {
        case Family::LinearS12:
            params["alpha"] = to_string(rec.alpha);
            params["beta"] = to_string(rec.beta);
            break;
        case Family::QuadS12:
            params["k3"] = to_string(rec.k3);
            params["k4"] = to_string(rec.k4);
            params["f"] = rec.f.to_string();
            params["g"] = rec.g.to_string();
            break;
        case Family::CubicKolmS12:
            params["k33"] = to_string(rec.k33);
            params["k44"] = to_string(rec.k44);
            params["alpha"] = to_string(rec.alpha);
            params["beta"] = to_string(rec.beta);
            break;
        case Family::TypeN_S12:
            params["A"] = rec.A.to_string();
            params["B"] = rec.B.to_string();
            params["n"] = rec.n;
            break;
        case Family::LinearS21:
            params["alpha"] = to_string(rec.alpha);
            params["beta"] = to_string(rec.beta);
            params["gamma"] = to_string(rec.gamma);
            break;
        case Family::QuadS21:
            params["c"] = to_string(rec.c);
            params["f"] = rec.f.to_string();
            params["g"] = rec.g.to_string();
            params["h"] = rec.h.to_string();
            break;
        case Family::CubicKolmS21:
            params["c"] = to_string(rec.c);
            params["alpha"] = to_string(rec.alpha);
            params["beta"] = to_string(rec.beta);
            params["gamma"] = to_string(rec.gamma);
            break;
        case Family::PseudoTypeN_S21:
            params["A"] = rec.A.to_string();
            params["B"] = rec.B.to_string();
            params["C"] = rec.C.to_string();
            params["n"] = rec.n;
            break;
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["member"] = true;
    j["family"] = to_string(rec.family);
    j["surface_param"] = to_string(rec.surface_param);
    j["params"] = params;
    return j;
}

struct Command {
    std::function<int(std::ostream&, std::ostream&)> execute;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    int exit_code = kExitOk;
    try {
        CLI::App app{"polynomial vector fields on the products of spheres S1xS2 and S2xS1 in R^4"};
        app.require_subcommand(1);

        // build ------------------------------------------------------------
        auto* build = app.add_subcommand("build", "construct a family field or a named fixture");
        build->set_help_flag("--help", "print help");  // frees -h for the h parameter below
        struct {
            std::string family, fixture, param = "2";
            std::string k3 = "0", k4 = "0", k33 = "0", k44 = "0", c = "0";
            std::string alpha = "0", beta = "0", gamma = "0";
            std::string f = "0", g = "0", h = "0", A = "0", B = "0", C = "0";
            int n = 1;
        } b;
        build->add_option("--family", b.family,
                          "quad-s12 | kolm-s12 | type-n-s12 | quad-s21 | kolm-s21 | pseudo-type-n-s21");
        build->add_option("--fixture", b.fixture, "fixture name, e.g. meridian-sharp(2,2)");
        build->add_option("--param", b.param, "surface parameter (> 1)")->capture_default_str();
        build->add_option("--k3", b.k3);
        build->add_option("--k4", b.k4);
        build->add_option("--k33", b.k33);
        build->add_option("--k44", b.k44);
        build->add_option("--c", b.c);
        build->add_option("--alpha", b.alpha);
        build->add_option("--beta", b.beta);
        build->add_option("--gamma", b.gamma);
        build->add_option("--f", b.f);
        build->add_option("--g", b.g);
        build->add_option("--h", b.h);
        build->add_option("--A", b.A);
        build->add_option("--B", b.B);
        build->add_option("--C", b.C);
        build->add_option("--n", b.n);
        build->callback([&] {
            VectorField chi;
            if (!b.fixture.empty()) {
                chi = fixture(b.fixture).field;
            } else if (b.family == "quad-s12") {
                chi = build_quadratic_s1s2(parse_rational(b.param), parse_rational(b.k3),
                                           parse_rational(b.k4), parse_poly(b.f), parse_poly(b.g));
            } else if (b.family == "kolm-s12") {
                chi = build_cubic_kolmogorov_s1s2(parse_rational(b.param), parse_rational(b.k33),
                                                  parse_rational(b.k44), parse_rational(b.alpha),
                                                  parse_rational(b.beta));
            } else if (b.family == "type-n-s12") {
                chi = build_type_n_s1s2(parse_poly(b.A), parse_poly(b.B), b.n);
            } else if (b.family == "quad-s21") {
                chi = build_quadratic_s2s1(parse_rational(b.param), parse_rational(b.c), parse_poly(b.f),
                                           parse_poly(b.g), parse_poly(b.h));
            } else if (b.family == "kolm-s21") {
                chi = build_cubic_kolmogorov_s2s1(parse_rational(b.param), parse_rational(b.c),
                                                  parse_rational(b.alpha), parse_rational(b.beta),
                                                  parse_rational(b.gamma));
            } else if (b.family == "pseudo-type-n-s21") {
                chi = build_pseudo_type_n_s2s1(parse_poly(b.A), parse_poly(b.B), parse_poly(b.C), b.n);
            } else if (b.family.empty()) {
                throw std::invalid_argument("build needs --family or --fixture");
            } else {
                throw std::invalid_argument("unknown family '" + b.family + "'");
            }
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["field"] = to_string(chi);
            emit(out, j);
        });

        // classify ----------------------------------------------------------
        auto* classify_cmd = app.add_subcommand("classify", "match a field against the characterized families");
        auto cl_field = std::make_shared<FieldInput>();
        auto cl_surface = std::make_shared<SurfaceInput>();
        cl_field->attach(classify_cmd);
        cl_surface->attach(classify_cmd);
        classify_cmd->callback([&, cl_field, cl_surface] {
            auto outcome = classify(cl_field->load(), cl_surface->load());
            if (const auto* rec = std::get_if<FamilyRecord>(&outcome)) {
                emit(out, record_json(*rec));
            } else {
                const auto& miss = std::get<NotMember>(outcome);
                Json j;
                j["schema_version"] = kSchemaVersion;
                j["member"] = false;
                j["reason"] = to_string(miss.reason);
                j["detail"] = miss.detail;
                emit(out, j);
                exit_code = kExitNegative;
            }
        });

        // cofactor ----------------------------------------------------------
        auto* cofactor_cmd = app.add_subcommand("cofactor", "invariance test with cofactor extraction");
        auto co_field = std::make_shared<FieldInput>();
        auto co_surface = std::make_shared<SurfaceInput>();
        auto co_of = std::make_shared<std::string>();
        co_field->attach(cofactor_cmd);
        co_surface->attach(cofactor_cmd);
        cofactor_cmd->add_option("--of", *co_of, "test this polynomial instead of the surface polynomial");
        cofactor_cmd->callback([&, co_field, co_surface, co_of] {
            Poly f = co_of->empty() ? co_surface->load().poly : parse_poly(*co_of);
            auto res = invariance_cofactor(co_field->load(), f);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["invariant"] = res.invariant;
            if (res.invariant)
                j["cofactor"] = res.cofactor->to_string();
            else
                j["cofactor"] = nullptr;
            emit(out, j);
            if (!res.invariant) exit_code = kExitNegative;
        });

        // lie ----------------------------------------------------------------
        auto* lie_cmd = app.add_subcommand("lie", "iterated Lie derivative of a polynomial");
        auto lie_field = std::make_shared<FieldInput>();
        auto lie_poly = std::make_shared<std::string>();
        auto lie_k = std::make_shared<unsigned>(1);
        lie_field->attach(lie_cmd);
        lie_cmd->add_option("--poly", *lie_poly, "polynomial expression")->required();
        lie_cmd->add_option("--k", *lie_k, "number of applications")->capture_default_str();
        lie_cmd->callback([&, lie_field, lie_poly, lie_k] {
            Poly result = iterated_lie(lie_field->load(), parse_poly(*lie_poly), *lie_k);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["iterations"] = *lie_k;
            j["result"] = result.to_string();
            emit(out, j);
        });

        // hamiltonian ----------------------------------------------------------
        auto* ham_cmd = app.add_subcommand("hamiltonian", "solve for a Hamiltonian of the field");
        auto ham_field = std::make_shared<FieldInput>();
        ham_field->attach(ham_cmd);
        ham_cmd->callback([&, ham_field] {
            auto res = hamiltonian_solve(ham_field->load());
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["exists"] = res.exists;
            j["hamiltonian"] = res.exists ? Json(res.hamiltonian->to_string()) : Json(nullptr);
            emit(out, j);
            if (!res.exists) exit_code = kExitNegative;
        });

        // darboux ----------------------------------------------------------
        auto* darboux_cmd = app.add_subcommand("darboux", "power-product exponents from invariant factors");
        auto da_field = std::make_shared<FieldInput>();
        auto da_factors = std::make_shared<std::string>();
        da_field->attach(darboux_cmd);
        darboux_cmd->add_option("--factors", *da_factors, "comma-separated invariant polynomials")->required();
        darboux_cmd->callback([&, da_field, da_factors] {
            VectorField chi = da_field->load();
            std::vector<std::pair<Poly, Poly>> pairs;
            Json factors = Json::array(), cofactors = Json::array();
            for (const auto& text : split(*da_factors, ',')) {
                Poly f = parse_poly(text);
                auto res = invariance_cofactor(chi, f);
                if (!res.invariant)
                    throw std::domain_error("factor is not invariant under the field: " + f.to_string());
                factors.push_back(f.to_string());
                cofactors.push_back(res.cofactor->to_string());
                pairs.emplace_back(f, *res.cofactor);
            }
            auto lambda = darboux_exponents(pairs);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["factors"] = factors;
            j["cofactors"] = cofactors;
            if (lambda) {
                Json exps = Json::array();
                for (const auto& l : *lambda) exps.push_back(to_string(l));
                j["exponents"] = exps;
            } else {
                j["exponents"] = nullptr;
                exit_code = kExitNegative;
            }
            emit(out, j);
        });

        // first-integrals ----------------------------------------------------
        auto* fi_cmd = app.add_subcommand("first-integrals", "known first integrals and their independence rank");
        auto fi_field = std::make_shared<FieldInput>();
        auto fi_surface = std::make_shared<SurfaceInput>();
        auto fi_seed = std::make_shared<std::uint64_t>(0);
        auto fi_trials = std::make_shared<int>(8);
        fi_field->attach(fi_cmd);
        fi_surface->attach(fi_cmd);
        fi_cmd->add_option("--seed", *fi_seed, "sampling seed")->capture_default_str();
        fi_cmd->add_option("--trials", *fi_trials, "sample points for the rank")->capture_default_str();
        fi_cmd->callback([&, fi_field, fi_surface, fi_seed, fi_trials] {
            VectorField chi = fi_field->load();
            Hypersurface surface = fi_surface->load();
            auto outcome = classify(chi, surface);
            Json j;
            j["schema_version"] = kSchemaVersion;
            if (const auto* rec = std::get_if<FamilyRecord>(&outcome);
                rec && (rec->family == Family::TypeN_S12 || rec->family == Family::PseudoTypeN_S21)) {
                auto integrals = known_first_integrals(chi, *rec);
                Json list = Json::array();
                bool conserved = true;
                for (const auto& f : integrals) {
                    list.push_back(f.to_string());
                    conserved = conserved && lie_derivative(chi, f).is_zero();
                }
                j["family"] = to_string(rec->family);
                j["integrals"] = list;
                j["lie_derivatives_zero"] = conserved;
                j["independence_rank"] = independence_rank(integrals, surface, *fi_trials, *fi_seed);
                emit(out, j);
            } else {
                j["family"] = nullptr;
                j["error"] = "known first integrals cover only TypeN_S12 and PseudoTypeN_S21 fields";
                emit(out, j);
                exit_code = kExitNegative;
            }
        });

        // extactic ----------------------------------------------------------
        auto* ex_cmd = app.add_subcommand("extactic", "extactic polynomial for a subspace basis");
        auto ex_field = std::make_shared<FieldInput>();
        auto ex_basis = std::make_shared<std::string>();
        auto ex_mult = std::make_shared<std::string>();
        ex_field->attach(ex_cmd);
        ex_cmd->add_option("--basis", *ex_basis, "comma-separated basis polynomials")->required();
        ex_cmd->add_option("--multiplicity-of", *ex_mult, "also report the multiplicity of this polynomial");
        ex_cmd->callback([&, ex_field, ex_basis, ex_mult] {
            VectorField chi = ex_field->load();
            std::vector<Poly> basis;
            for (const auto& text : split(*ex_basis, ',')) basis.push_back(parse_poly(text));
            SubspaceBasis w(basis);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["basis"] = Json::array();
            for (const auto& p : basis) j["basis"].push_back(p.to_string());
            j["extactic"] = extactic(chi, w).to_string();
            if (!ex_mult->empty()) {
                auto m = multiplicity(chi, w, parse_poly(*ex_mult));
                j["multiplicity"] = {{"of", *ex_mult},
                                     {"infinite", m.infinite},
                                     {"value", m.infinite ? Json(nullptr) : Json(m.value)}};
            }
            emit(out, j);
        });

        // hyperplanes ----------------------------------------------------------
        auto* hp_cmd = app.add_subcommand("hyperplanes", "invariant parallel/pencil/meridian hyperplanes");
        auto hp_field = std::make_shared<FieldInput>();
        auto hp_parallel = std::make_shared<bool>(false);
        auto hp_pencil = std::make_shared<std::string>();
        auto hp_check = std::make_shared<std::string>();
        hp_field->attach(hp_cmd);
        hp_cmd->add_flag("--parallel", *hp_parallel, "enumerate invariant planes x4 = k");
        hp_cmd->add_option("--pencil", *hp_pencil, "x1x2 or x3x4: enumerate a*xi + b*xj = 0");
        hp_cmd->add_option("--check", *hp_check, "a1,a2,a3: check the meridian a1 x1 + a2 x2 + a3 x3 = 0");
        hp_cmd->callback([&, hp_field, hp_parallel, hp_pencil, hp_check] {
            VectorField chi = hp_field->load();
            Json j;
            j["schema_version"] = kSchemaVersion;
            if (*hp_parallel) {
                auto rep = enumerate_parallel(chi);
                j["mode"] = "parallel";
                j["all_invariant"] = rep.all_invariant;
                j["indeterminate_candidates"] = rep.candidates_indeterminate;
                Json planes = Json::array();
                for (const auto& [k, mult] : rep.planes)
                    planes.push_back({{"k", to_string(k)}, {"multiplicity", mult}});
                j["planes"] = planes;
            } else if (!hp_pencil->empty()) {
                Pencil pencil;
                if (*hp_pencil == "x1x2")
                    pencil = Pencil::X1X2;
                else if (*hp_pencil == "x3x4")
                    pencil = Pencil::X3X4;
                else
                    throw std::invalid_argument("--pencil must be x1x2 or x3x4");
                auto rep = enumerate_pencil(chi, pencil);
                j["mode"] = "pencil";
                j["pencil"] = *hp_pencil;
                j["all_invariant"] = rep.all_invariant;
                Json ratios = Json::array();
                for (const auto& r : rep.ratios)
                    ratios.push_back(
                        {{"a", to_string(r.a)}, {"b", to_string(r.b)}, {"multiplicity", r.multiplicity}});
                j["ratios"] = ratios;
            } else if (!hp_check->empty()) {
                auto coeffs = split(*hp_check, ',');
                if (coeffs.size() != 3)
                    throw std::invalid_argument("--check needs three coefficients a1,a2,a3");
                Poly plane;
                for (int i = 0; i < 3; ++i) plane += Poly::variable(i + 1) * parse_rational(coeffs[i]);
                auto res = check_hyperplane(chi, plane);
                j["mode"] = "check";
                j["hyperplane"] = plane.to_string();
                j["invariant"] = res.invariant;
                j["cofactor"] = res.invariant ? Json(res.cofactor->to_string()) : Json(nullptr);
                if (!res.invariant) exit_code = kExitNegative;
            } else {
                throw std::invalid_argument("one of --parallel, --pencil, --check is required");
            }
            emit(out, j);
        });

        // simulate ----------------------------------------------------------
        auto* sim_cmd = app.add_subcommand("simulate", "fixed-step RK4 trajectory as CSV");
        auto sim_field = std::make_shared<FieldInput>();
        auto sim_surface = std::make_shared<SurfaceInput>();
        auto sim_angles = std::make_shared<std::string>("0,0,0");
        auto sim_dt = std::make_shared<double>(1e-3);
        auto sim_tend = std::make_shared<double>(10.0);
        auto sim_watch = std::make_shared<std::string>();
        sim_field->attach(sim_cmd);
        sim_surface->attach(sim_cmd);
        sim_cmd->add_option("--angles", *sim_angles, "theta,alpha,beta in turns (rationals)")
            ->capture_default_str();
        sim_cmd->add_option("--dt", *sim_dt, "step size")->capture_default_str();
        sim_cmd->add_option("--t-end", *sim_tend, "end time")->capture_default_str();
        sim_cmd->add_option("--watch", *sim_watch, "name=poly,... conservation columns");
        sim_cmd->callback([&, sim_field, sim_surface, sim_angles, sim_dt, sim_tend, sim_watch] {
            VectorField chi = sim_field->load();
            Hypersurface surface = sim_surface->load();
            auto angle_parts = split(*sim_angles, ',');
            if (angle_parts.size() != 3) throw std::invalid_argument("--angles needs theta,alpha,beta");
            std::array<Rational, 3> angles{parse_rational(angle_parts[0]), parse_rational(angle_parts[1]),
                                           parse_rational(angle_parts[2])};
            std::vector<std::pair<std::string, Poly>> watches;
            if (!sim_watch->empty()) {
                for (const auto& item : split(*sim_watch, ',')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw std::invalid_argument("--watch entries must look like name=poly");
                    watches.emplace_back(item.substr(0, eq), parse_poly(item.substr(eq + 1)));
                }
            }
            auto x0 = sample_point(surface, angles);
            auto traj = integrate_rk4(chi, x0, *sim_dt, *sim_tend);
            out << "t,x1,x2,x3,x4";
            for (const auto& [name, poly] : watches) out << "," << name;
            out << "\n";
            for (std::size_t i = 0; i < traj.states.size(); ++i) {
                out << format_double(traj.times[i]);
                for (double v : traj.states[i]) out << "," << format_double(v);
                std::array<double, kNumVars> state = traj.states[i];
                for (const auto& [name, poly] : watches) out << "," << format_double(poly.eval(state));
                out << "\n";
            }
            if (traj.overflowed) {
                err << "integration aborted: non-finite state after " << traj.states.size() - 1
                    << " steps\n";
                exit_code = kExitInternal;
            }
        });

        // verify ----------------------------------------------------------
        auto* verify_cmd = app.add_subcommand("verify", "run the seeded property suites");
        auto ve_suite = std::make_shared<std::string>("all");
        auto ve_seed = std::make_shared<std::uint64_t>(0);
        auto ve_instances = std::make_shared<int>(100);
        verify_cmd->add_option("--suite", *ve_suite, "suite name or 'all'")->capture_default_str();
        verify_cmd->add_option("--seed", *ve_seed, "random seed")->capture_default_str();
        verify_cmd->add_option("--instances", *ve_instances, "instances per suite")->capture_default_str();
        verify_cmd->callback([&, ve_suite, ve_seed, ve_instances] {
            auto results = suite::run_suites(*ve_suite, *ve_seed, *ve_instances);
            bool all_passed = true;
            Json suites = Json::array();
            for (const auto& r : results) {
                all_passed = all_passed && r.passed();
                suites.push_back({{"name", r.name},
                                  {"instances", r.instances},
                                  {"passes", r.passes},
                                  {"failures", r.instances - r.passes},
                                  {"counterexample",
                                   r.counterexample.empty() ? Json(nullptr) : Json(r.counterexample)}});
            }
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["seed"] = *ve_seed;
            j["instances"] = *ve_instances;
            j["suites"] = suites;
            j["all_passed"] = all_passed;
            emit(out, j);
            if (!all_passed) exit_code = kExitNegative;
        });

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
            return exit_code;
        } catch (const CLI::ParseError& e) {
            int rc = app.exit(e, out, err);
            return rc == 0 ? kExitOk : kExitUsage;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace svf::cli
