#pragma once

// Planner for bodies symmetric about the somersault axis (I1 == I2, so
// delta == 0). All stage formulas are closed forms in complete elliptic
// integrals; every value is cross-checked against quadrature in the tests.

#include "twistdive/plan.hpp"

namespace twistdive {

// Maximum tilt from the rotor ratio beta = rho / gamma and back.
// cos(theta_max) = sqrt(beta^2 + 1) - beta, exact inverse of
// beta = s^2 / (2 sqrt(1 - s^2)) with s = sin(theta_max).
double tilt_from_beta(double beta);
double beta_from_tilt(double s);

// Scaled duration of the tilt-in stage (rotor on, equator to theta_max)
// and the somersault it accumulates. s in (0, 1), gamma > 0.
double t2_hat(double s, double gamma);
double phi2(double s, double gamma);

// t2_hat - phi2; independent of gamma.
double somersault_excess(double s);

// Small-tilt expansion constants: somersault_excess(s) -> pi A s and
// t2_hat(s, gamma) -> (B + 1/2) pi / (gamma s) as s -> 0. They give the
// min_tilt estimate s ~ (B + n) / (m gamma).
double expansion_constant_a();
double expansion_constant_b();

// Full schedule at a given tilt: That3 = P3 (n - 1/2),
// 2 That1 = 2 pi m - 2 phi2 - Phi3 (n - 1/2), with Phi3 = P3 = 2 pi / (gamma s).
StageTimes stage_times(double s, double gamma, double m, double n);

// Invert That_tot(s) = 2 pi m + 2 somersault_excess(s) for s on [1e-6, 0.99].
// Throws std::domain_error when no tilt attains the requested total
// (including the zero-tilt boundary That_tot <= 2 pi m).
double solve_tilt_for_ttot(double That_tot, double m);

// Smallest tilt with a nonnegative stage-1 budget: root of That1(s) = 0.
// Near (B + n) / (m gamma) for small tilt.
double min_tilt(double m, double n, double gamma);

// Solve the whole dive. Requires delta == 0 (within 1e-12). body.l <= 0
// means "solve l for the fixed rotor momentum h = omega_d * I_d".
// Infeasible requests return a plan with feasible == false and a reason;
// malformed requests throw std::invalid_argument.
DivePlan plan_dive(const DiveRequest& req);

}  // namespace twistdive
