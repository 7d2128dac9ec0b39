#pragma once

#include <string>
#include <vector>

#include "svf/hypersurface.hpp"
#include "svf/vector_field.hpp"

namespace svf {

// On-surface starting point from angle fractions (theta, alpha, beta) given
// in turns as exact rationals, so identical inputs give identical doubles.
// S1xS2: u = cos 2*pi*alpha, r = sqrt(a^2 + u),
//        (r cos 2*pi*theta, r sin 2*pi*theta,
//         sin 2*pi*alpha cos 2*pi*beta, sin 2*pi*alpha sin 2*pi*beta).
// S2xS1: R = sqrt(b^2 + cos 2*pi*beta), x4 = sin 2*pi*beta, and (x1,x2,x3)
//        the R-sphere point with longitude theta and latitude alpha.
std::array<double, kNumVars> sample_point(const Hypersurface& surface,
                                          const std::array<Rational, 3>& angles_turns);

struct Trajectory {
    std::vector<double> times;                      // uniform grid, starts at 0
    std::vector<std::array<double, kNumVars>> states;
    double step = 0.0;
    bool overflowed = false;  // a non-finite state stopped the integration early
};

// Classical fixed-step fourth-order Runge-Kutta. Pre: dt > 0, t_end >= dt.
Trajectory integrate_rk4(const VectorField& chi, const std::array<double, kNumVars>& x0, double dt,
                         double t_end);

struct QuantityDrift {
    std::string name;
    double initial = 0.0;
    double max_drift = 0.0;    // max |value - initial| along the trajectory
    double final_drift = 0.0;  // |value - initial| at the last state
};

struct ConservationReport {
    std::vector<QuantityDrift> quantities;
};

ConservationReport conservation_report(const Trajectory& traj,
                                       const std::vector<std::pair<std::string, Poly>>& quantities);

}  // namespace svf
