#pragma once

namespace twistdive {

// Carlson symmetric integrals, evaluated by the duplication algorithm.
// These are the low-level primitives; they accept any arguments in the
// mathematical domain (e.g. negative y in R_F via x,z >= 0 still works
// through the symmetric limits used below, and R_J requires p > 0 here).
double carlson_rf(double x, double y, double z);
double carlson_rc(double x, double y);
double carlson_rd(double x, double y, double z);
double carlson_rj(double x, double y, double z, double p);

// Complete Legendre integrals in the PARAMETER convention m = k^2:
//   K(m)    = int_0^{pi/2} dt / sqrt(1 - m sin^2 t)
//   E(m)    = int_0^{pi/2} sqrt(1 - m sin^2 t) dt
//   Pi(n,m) = int_0^{pi/2} dt / ((1 - n sin^2 t) sqrt(1 - m sin^2 t))
// Domains are enforced strictly (std::domain_error): 0 <= m < 1 for K and Pi,
// 0 <= m <= 1 for E, n < 1 for Pi. The m -> 1 and n -> 1 limits diverge and
// correspond to the separatrix; callers must not sneak past them.
double ellip_k(double m);
double ellip_e(double m);
double ellip_pi(double n, double m);

}  // namespace twistdive
