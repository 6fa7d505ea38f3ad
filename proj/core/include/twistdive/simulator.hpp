#pragma once

// Direct integration of the switched rotor dynamics on the momentum sphere.
// State y = (u1, u2, u3, phi, psi): the momentum direction in the body frame
// plus the two unwrapped angles. Stages switch the signed rotor strength and
// stop either after a fixed scaled duration or at a bisection-localized event.

#include <array>
#include <string>
#include <vector>

#include "twistdive/plan.hpp"

namespace twistdive {

using State5 = std::array<double, 5>;

enum class StopKind {
    fixed_duration,  // amount = scaled duration (may be negative: integrate backward)
    turning_point,   // first u1 = 0 crossing (tilt extremum of the rotor-on arc)
    theta_turn,      // first sign change of theta' = u1 (delta u2 - rho_hat) / cos(theta)
    psi_advance,     // psi has advanced by amount from its start value
    u3_down,         // first downward u3 = 0 crossing
};

struct StageSpec {
    int index = 0;            // 1-based stage tag recorded in samples
    double rho_signed = 0.0;  // rotor strength during the stage (0 = rotor off)
    StopKind stop = StopKind::fixed_duration;
    double amount = 0.0;
};

struct Tolerances {
    double rel = 1e-10;
    double abs = 1e-12;
    double init_dt = 1e-3;
    double max_dt = 0.1;
    double max_sample_dt = 0.01;  // spacing of recorded samples
    double event_tol = 1e-12;     // time window for event bisection
    double max_tau = 500.0;       // event-search horizon per stage
};

struct Sample {
    double tau = 0.0;
    State5 y{};
    double energy = 0.0;    // scaled kinetic energy at the sample's rotor setting
    double rho_signed = 0.0;
    int stage = 0;
};

struct Trajectory {
    std::vector<Sample> samples;
    double max_energy_drift = 0.0;  // worst per-stage |E - E_stage_start|
    double max_unit_drift = 0.0;    // worst | |u| - 1 |
};

// Integrate one stage from y0 at tau0; appends nothing, returns the stage's
// own trajectory (first sample at tau0, last exactly at the stop).
Trajectory integrate_stage(const State5& y0, double tau0, const StageSpec& spec,
                           const DimensionlessParams& d, const Tolerances& tol = {});

// Last state of a trajectory.
const Sample& final_sample(const Trajectory& t);

// Concatenate b onto a (b's first sample duplicates a's last on purpose:
// same tau, new stage tag and rotor setting).
void append_trajectory(Trajectory& a, const Trajectory& b);

// The five switched stages of a feasible plan.
std::vector<StageSpec> build_stage_specs(const DivePlan& plan);

struct ClosureReport {
    double delta_phi = 0.0, delta_psi = 0.0;  // accumulated over the dive
    double phi_error = 0.0;                   // |delta_phi - 2 pi m|
    double psi_error = 0.0;                   // |delta_psi - 2 pi n * terminal_sign adjustment|
    double theta_final = 0.0;
    double max_energy_drift = 0.0;
    double max_unit_drift = 0.0;
    Trajectory trajectory;
};

// Run all five stages of a feasible plan from u = (1, 0, 0) and compare the
// accumulated somersault/twist against the requested counts. shape supplies
// delta and gamma; each stage's rotor setting comes from the plan.
ClosureReport simulate_plan(const DivePlan& plan, const DimensionlessParams& shape,
                            const Tolerances& tol = {});

// Rotor-on arc from the equator to the first tilt turning point; the ODE
// oracle for the transit-time and somersault closed forms.
struct TransitResult {
    double That2 = 0.0;
    double phi2 = 0.0;
    State5 end{};
};
TransitResult transit_oracle(const DimensionlessParams& d, double rho,
                             const Tolerances& tol = {});

// CSV with header tau,phi,theta,psi,L1,L2,L3,E,stage; L = l * u.
std::string trajectory_csv(const Trajectory& t, double l);

}  // namespace twistdive
