#pragma once

// Planner for tri-axial bodies (I3 < I1 <= I2, so delta <= 0 < gamma).
// The twisting stage nutates between tilts s_minus and s_plus; both stage
// durations and somersault angles reduce to complete elliptic integrals
// except the per-cycle somersault Phi3, which is evaluated by quadrature.

#include "twistdive/defining_integrals.hpp"
#include "twistdive/plan.hpp"

namespace twistdive {

// Tilt band of the twisting stage: sin(theta) oscillates in [s_minus, s_plus],
// nu = delta / gamma <= 0.
struct TiltBand {
    double s_minus = 0.0;
    double s_plus = 0.0;
    double nu = 0.0;
};

// s_plus^2 = (s_minus^2 - nu) / (1 - nu).
double s_plus_from_s_minus(double s_minus, double nu);

TiltBand band_from_s_minus(double s_minus, const DimensionlessParams& d);

// Rotor setting that tips the free axis to the band edge:
// rho_hat = gamma s_minus^2 / (2 sqrt(1 - s_plus^2)).
double rho_hat_for_band(const TiltBand& band, double gamma);

// Inverse: the band reached from rest with rotor momentum rho (rho > 0).
TiltBand band_from_rho(double rho, const DimensionlessParams& d);

// Scaled twist period P3 (closed form) and per-cycle somersault Phi3
// (quadrature) of the rotor-off orbit through the band.
struct TwistCycle {
    double period = 0.0;
    double somersault = 0.0;
};
TwistCycle twist_period_and_somersault(const TiltBand& band, const DimensionlessParams& d);

// Tilt-in stage duration and somersault. phi2 = phitilde2 - pi/2, where
// phitilde2 is the somersault accumulated in the frame of the twist axis.
double t2_general(const TiltBand& band, const DimensionlessParams& d);
double phi2_general(const TiltBand& band, const DimensionlessParams& d);

StageTimes stage_times_general(const TiltBand& band, const DimensionlessParams& d, double m,
                               double n);

// Smallest s_minus with a nonnegative stage-1 budget.
double min_tilt_general(double m, double n, const DimensionlessParams& d);

// Solve the whole dive for a tri-axial body (delta <= 0). Same request
// conventions as the symmetric plan_dive.
DivePlan plan_dive_general(const DiveRequest& req);

}  // namespace twistdive
