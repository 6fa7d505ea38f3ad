#pragma once

#include <array>

namespace twistdive {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Physical parameters. The body frame is fixed: axis 1 is the somersault
// (lateral) axis carrying the angular momentum at the start, the rotor's
// internal momentum A = (0, h, 0) sits on axis 2, axis 3 is the twist axis.
struct BodyParams {
    double I1 = 0.0, I2 = 0.0, I3 = 0.0;  // principal moments, kg m^2
    double l = 0.0;                       // total angular momentum, kg m^2/s
    double omega_d = 0.0;                 // rotor rate, rad/s
    double I_d = 0.0;                     // rotor moment, kg m^2
    double h() const { return omega_d * I_d; }
};

struct DimensionlessParams {
    double delta = 0.0;    // I1/I2 - 1
    double gamma = 0.0;    // I1/I3 - 1
    double rho = 0.0;      // h/l, signed
    double rho_hat = 0.0;  // rho (1 + delta)
    double beta = 0.0;     // rho/gamma
    double nu = 0.0;       // delta/gamma
    double time_scale = 0.0;  // I1/l: seconds per unit of scaled time tau = t l/I1
};

DimensionlessParams derive_dimensionless(const BodyParams& p);

// Same body, different rotor setting (used by the stage scheduler, which owns
// the rotor sign).
DimensionlessParams with_rotor(const DimensionlessParams& d, double rho_signed);

// Euler-angle state. somersault_tilt_twist: R = R1(phi) R2(theta) R3(psi).
// tilde: R = R1(phi~) R3(theta~) R2(psi~), the chart with the rotation about
// the rotor axis last. Angles are never wrapped; winding counts are data.
enum class AngleConvention { somersault_tilt_twist, tilde };

struct AngleState {
    double phi = 0.0, theta = 0.0, psi = 0.0;
    AngleConvention convention = AngleConvention::somersault_tilt_twist;
};

struct AngleRates {
    double dphi = 0.0, dtheta = 0.0, dpsi = 0.0;
};

// Scaled equations of motion (d/dtau). Both reject |theta| within 1e-9 of
// the chart singularity at pi/2.
AngleRates eom_angles(const AngleState& s, const DimensionlessParams& d);
AngleRates eom_tilde_angles(const AngleState& s, const DimensionlessParams& d);

// Body-frame angular momentum and the rotor-body Euler equations in physical
// time: Ldot = L x Omega, Omega = I^{-1}(L - A), A = (0, h, 0).
struct MomentumState {
    Vec3 L{0.0, 0.0, 0.0};
    double h = 0.0;
};

Vec3 eom_momentum(const MomentumState& s, const BodyParams& p);

// Unit momentum direction u = L/l for an angle state.
Vec3 momentum_direction(const AngleState& s);

// Principal-value angles from a momentum direction (phi is not recoverable
// from u and is returned as 0).
AngleState angles_from_momentum(const Vec3& u);

// Scaled right-hand side on the momentum sphere with accumulated somersault
// and twist: y = (u1, u2, u3, phi, psi). This is the simulator's chart; it is
// free of singularities along dive trajectories.
std::array<double, 5> sphere_rhs(const std::array<double, 5>& y, const DimensionlessParams& d);

// Scaled conserved energy, per chart. The sphere form is
// E = (u - a) . diag(1, 1+delta, 1+gamma) (u - a) / 2 with a = (0, rho, 0).
double energy(const AngleState& s, const DimensionlessParams& d);
double energy(const Vec3& u, const DimensionlessParams& d);

// Corollary of the symmetric energy relation: sin(psi) on the rotor-on orbit
// of energy E at tilt theta. |result| > 1 means theta is outside the
// reachable band (that is the out-of-band indicator, not an error).
double sin_psi_from_energy(double theta, double E, const DimensionlessParams& d);

}  // namespace twistdive
