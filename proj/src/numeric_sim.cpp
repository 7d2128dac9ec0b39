#include "svf/numeric_sim.hpp"

#include <cmath>

namespace svf {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Flat term list in graded-lex descending order; evaluation order is fixed so
// results are reproducible.
struct CompiledPoly {
    struct Term {
        double c;
        std::array<std::uint32_t, kNumVars> e;
    };
    std::vector<Term> terms;

    static CompiledPoly from(const Poly& p) {
        CompiledPoly cp;
        cp.terms.reserve(p.term_count());
        for (const auto& [m, c] : p.terms()) cp.terms.push_back({c.get_d(), m.e});
        return cp;
    }

    double eval(const std::array<double, kNumVars>& x) const {
        double sum = 0.0;
        for (const auto& t : cterms()) {
            double v = t.c;
            for (int i = 0; i < kNumVars; ++i)
                for (std::uint32_t k = 0; k < t.e[i]; ++k) v *= x[i];
            sum += v;
        }
        return sum;
    }

    const std::vector<Term>& cterms() const { return terms; }
};

struct CompiledField {
    std::array<CompiledPoly, kNumVars> p;

    explicit CompiledField(const VectorField& chi) {
        for (int i = 0; i < kNumVars; ++i) p[i] = CompiledPoly::from(chi.p[i]);
    }

    std::array<double, kNumVars> eval(const std::array<double, kNumVars>& x) const {
        return {p[0].eval(x), p[1].eval(x), p[2].eval(x), p[3].eval(x)};
    }
};

bool finite_state(const std::array<double, kNumVars>& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace

std::array<double, kNumVars> sample_point(const Hypersurface& surface,
                                          const std::array<Rational, 3>& angles_turns) {
    const double theta = kTwoPi * angles_turns[0].get_d();
    const double alpha = kTwoPi * angles_turns[1].get_d();
    const double beta = kTwoPi * angles_turns[2].get_d();
    const double param = surface.param.get_d();
    if (surface.kind == SurfaceKind::S1xS2) {
        double u = std::cos(alpha);
        double r = std::sqrt(param * param + u);
        return {r * std::cos(theta), r * std::sin(theta), std::sin(alpha) * std::cos(beta),
                std::sin(alpha) * std::sin(beta)};
    }
    double u = std::cos(beta);
    double r = std::sqrt(param * param + u);
    return {r * std::cos(alpha) * std::cos(theta), r * std::cos(alpha) * std::sin(theta),
            r * std::sin(alpha), std::sin(beta)};
}

Trajectory integrate_rk4(const VectorField& chi, const std::array<double, kNumVars>& x0, double dt,
                         double t_end) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(t_end >= dt)) throw std::invalid_argument("t_end must be at least dt");
    const CompiledField field(chi);
    const auto steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));

    Trajectory traj;
    traj.step = dt;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(x0);

    std::array<double, kNumVars> x = x0;
    for (std::size_t n = 0; n < steps; ++n) {
        const auto k1 = field.eval(x);
        std::array<double, kNumVars> tmp;
        for (int i = 0; i < kNumVars; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
        const auto k2 = field.eval(tmp);
        for (int i = 0; i < kNumVars; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
        const auto k3 = field.eval(tmp);
        for (int i = 0; i < kNumVars; ++i) tmp[i] = x[i] + dt * k3[i];
        const auto k4 = field.eval(tmp);
        for (int i = 0; i < kNumVars; ++i)
            x[i] += dt * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]) / 6.0;
        if (!finite_state(x)) {
            traj.overflowed = true;
            break;
        }
        traj.times.push_back(static_cast<double>(n + 1) * dt);
        traj.states.push_back(x);
    }
    return traj;
}

ConservationReport conservation_report(const Trajectory& traj,
                                       const std::vector<std::pair<std::string, Poly>>& quantities) {
    ConservationReport report;
    for (const auto& [name, poly] : quantities) {
        const CompiledPoly cp = CompiledPoly::from(poly);
        QuantityDrift qd;
        qd.name = name;
        if (!traj.states.empty()) {
            qd.initial = cp.eval(traj.states.front());
            for (const auto& state : traj.states) {
                double drift = std::abs(cp.eval(state) - qd.initial);
                if (drift > qd.max_drift) qd.max_drift = drift;
            }
            qd.final_drift = std::abs(cp.eval(traj.states.back()) - qd.initial);
        }
        report.quantities.push_back(std::move(qd));
    }
    return report;
}

}  // namespace svf
