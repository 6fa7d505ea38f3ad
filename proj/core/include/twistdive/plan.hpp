#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "twistdive/dynamics.hpp"

namespace twistdive {

// A dive: m somersaults and n twists in T_tot seconds, on a given body.
// m and n are positive multiples of 1/2. A body with l <= 0 asks the planner
// to solve for the angular momentum from the rotor (h = omega_d * I_d fixed).
struct DiveRequest {
    double m = 0.0;
    double n = 0.0;
    double T_tot = 0.0;  // seconds
    BodyParams body;
};

// Solved stage schedule. Stage 1/5: rotor off, pure somersault; stage 2/4:
// rotor on, tilting in/out; stage 3: rotor off, twisting. T4 = T2 and
// T5 = T1 by construction. Scaled durations are That_i = l T_i / I1.
struct DivePlan {
    bool general = false;  // tri-axial planner produced it
    double m = 0.0, n = 0.0;

    double s = 0.0;        // sin(theta_max); equals s_plus in the general case
    double s_minus = 0.0;  // sin(theta_min) of the twisting stage (== s when symmetric)

    double l = 0.0;  // angular momentum the plan is built for
    double beta = 0.0, rho = 0.0, rho_hat = 0.0, h = 0.0;

    double That1 = 0.0, That2 = 0.0, That3 = 0.0, That_tot = 0.0;
    double T1 = 0.0, T2 = 0.0, T3 = 0.0, T4 = 0.0, T5 = 0.0, T_tot = 0.0;

    double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0;  // per-stage somersault, radians
    double psi2 = 0.0, psi3 = 0.0;              // per-stage twist (psi1 = 0, psi4 = psi2)

    double twist_period = 0.0;      // scaled period of one twist cycle (P3)
    double twist_somersault = 0.0;  // somersault per twist cycle (Phi3)

    int terminal_sign = 1;  // -1: half-integer n, final somersault about -l

    bool feasible = false;
    std::string reason;  // violated condition when infeasible
    std::vector<std::string> warnings;
};

// Scaled schedule at a fixed tilt band, before feasibility is applied.
struct StageTimes {
    double That1 = 0.0, That2 = 0.0, That3 = 0.0, That_tot = 0.0;
    double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0;
    bool feasible = false;  // That1 >= 0
};

inline bool is_half_integer_count(double x) {
    return std::fabs(2.0 * x - std::round(2.0 * x)) < 1e-9;
}
inline bool is_integer_count(double x) { return std::fabs(x - std::round(x)) < 1e-9; }

}  // namespace twistdive
