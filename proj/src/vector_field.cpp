#include "svf/vector_field.hpp"

#include <sstream>
#include <vector>

namespace svf {

Poly lie_derivative(const VectorField& chi, const Poly& f) {
    Poly r;
    for (int i = 0; i < kNumVars; ++i) {
        if (chi.p[i].is_zero()) continue;
        r += chi.p[i] * f.derivative(i + 1);
    }
    return r;
}

Poly iterated_lie(const VectorField& chi, const Poly& f, unsigned k) {
    Poly r(f);
    for (unsigned i = 0; i < k; ++i) r = lie_derivative(chi, r);
    return r;
}

DegreeProfile degree_profile(const VectorField& chi) {
    DegreeProfile dp;
    for (int i = 0; i < kNumVars; ++i) {
        dp.component[i] = chi.p[i].degree();
        if (dp.component[i] && (!dp.degree || *dp.component[i] > *dp.degree)) dp.degree = dp.component[i];
    }
    return dp;
}

FieldPredicates predicates(const VectorField& chi) {
    FieldPredicates out;

    out.is_kolmogorov = true;
    for (int i = 0; i < kNumVars; ++i) {
        auto [q, r] = divide(chi.p[i], Poly::variable(i + 1));
        if (!r.is_zero()) {
            out.is_kolmogorov = false;
            break;
        }
        out.kolmogorov_factors[i] = q;
    }
    if (out.is_kolmogorov) {
        out.is_lotka_volterra = true;
        for (const auto& psi : out.kolmogorov_factors) {
            auto d = psi.degree();
            if (d && *d > 1) {
                out.is_lotka_volterra = false;
                break;
            }
        }
    } else {
        out.kolmogorov_factors = {};
    }

    auto common_degree = [](const VectorField& v, int upto) -> std::optional<int> {
        std::optional<int> n;
        for (int i = 0; i < upto; ++i) {
            if (v.p[i].is_zero() || !v.p[i].is_homogeneous()) return std::nullopt;
            int d = *v.p[i].degree();
            if (n && *n != d) return std::nullopt;
            n = d;
        }
        return n;
    };
    out.type_n = common_degree(chi, 4);
    if (chi.p[3].is_zero()) out.pseudo_type_n = common_degree(chi, 3);

    return out;
}

VectorField hamiltonian_field_of(const Poly& hamiltonian) {
    return VectorField{{-hamiltonian.derivative(2), hamiltonian.derivative(1),
                        -hamiltonian.derivative(4), hamiltonian.derivative(3)}};
}

VectorField parse_vector_field(const std::string& text) {
    std::string stripped;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        stripped += line;
        stripped += ' ';
    }

    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto semi = stripped.find(';', start);
        parts.push_back(stripped.substr(start, semi == std::string::npos ? semi : semi - start));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (parts.size() != kNumVars)
        throw std::invalid_argument("vector field needs exactly 4 ';'-separated components, got " +
                                    std::to_string(parts.size()));
    VectorField chi;
    for (int i = 0; i < kNumVars; ++i) chi.p[i] = parse_poly(parts[i]);
    return chi;
}

std::string to_string(const VectorField& chi) {
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (i > 0) s += "; ";
        s += chi.p[i].to_string();
    }
    return s;
}

}  // namespace svf
