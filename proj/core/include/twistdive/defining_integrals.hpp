#pragma once

#include "twistdive/quadrature.hpp"

namespace twistdive {

// Proof-level defining integrals, evaluated by adaptive quadrature after a
// change of variables that absorbs the square-root endpoint singularities.
// These are the normative oracles: every closed-form stage formula in the
// planners is accepted only where it agrees with the matching kind here.
enum class DefiningIntegral {
    transit_time_symmetric,      // scaled rotor-on tilting time, delta = 0   (uses s, gamma)
    somersault_symmetric,        // somersault angle over that arc, delta = 0 (uses s, gamma)
    somersault_excess_symmetric, // transit time minus somersault; gamma-free (uses s)
    transit_time_general,        // scaled rotor-on tilting time              (uses rho_hat, delta, gamma)
    tilde_somersault_general,    // tilde-chart somersault over that arc      (uses rho_hat, delta, gamma)
    twist_period_general,        // rotor-off twist period                    (uses s = s_minus, delta, gamma)
    twist_somersault_general,    // somersault per twist period               (uses s = s_minus, delta, gamma)
};

struct IntegralParams {
    double s = 0.0;        // sin(theta_max) symmetric / sin(theta_min) twist kinds
    double gamma = 0.0;
    double delta = 0.0;
    double rho_hat = 0.0;  // signed rotor strength rho(1+delta), positive here
};

QuadResult quad_defining_integral(DefiningIntegral kind, const IntegralParams& p,
                                  double abs_tol = 1e-12);

}  // namespace twistdive
