#pragma once

// Somersault decomposition over closed loops on the momentum sphere:
//   delta_phi = dynamic - geometric,
// geometric = solid angle enclosed by the loop, oint sin(theta) dpsi,
// dynamic   = int (phi' + psi' sin(theta)) dtau = int u . w dtau,
// which reduces to 2 E tau on rotor-off segments. Both sides are computed
// independently (geometry vs energies), so the residual is a real check.

#include <functional>

#include "twistdive/simulator.hpp"

namespace twistdive {

struct PhaseDecomposition {
    double dynamic_phase = 0.0;
    double geometric_phase = 0.0;   // the solid angle
    double total_delta_phi = 0.0;   // phi accumulated by the integrated loop
    double residual = 0.0;          // total - (dynamic - geometric)
};

// oint sin(theta) dpsi by the trapezoid rule on the recorded samples.
// Throws if the endpoints do not close on the sphere (open loop).
double solid_angle(const Trajectory& loop);

// int u . w dtau by the trapezoid rule; w is evaluated with each sample's
// own rotor setting, so the integrand is exactly 2E on rotor-off segments.
double dynamic_phase(const Trajectory& loop, const DimensionlessParams& shape);

PhaseDecomposition verify_phase_decomposition(const Trajectory& loop,
                                              const DimensionlessParams& shape);

// Re-integrate the loop with halved sample spacing until both integrals move
// by less than tol, then decompose at the finest density.
PhaseDecomposition decompose_refined(const std::function<Trajectory(double)>& build_loop,
                                     const DimensionlessParams& shape, double tol = 1e-9);

// One rotor-off twist cycle through the band with sin(theta_min) = s_minus,
// started at the tilt minimum.
Trajectory twist_period_loop(const DimensionlessParams& shape, double s_minus,
                             double max_sample_dt);

// Tilt in from the equator, twist n - 1/2 cycles, tilt back out: closes on
// the sphere for integer n only (event-stopped, no planner input needed).
Trajectory switched_dive_loop(const DimensionlessParams& shape, double rho, double n,
                              double max_sample_dt);

}  // namespace twistdive
