#include "twistdive/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twistdive {

namespace {
constexpr double chart_margin = 1e-9;

void check_tilt(double theta, const char* chart) {
    if (std::fabs(theta) >= std::numbers::pi / 2.0 - chart_margin)
        throw std::domain_error(std::string(chart) + ": tilt chart singular at |theta| = pi/2");
}
}  // namespace

DimensionlessParams derive_dimensionless(const BodyParams& p) {
    if (!(p.I1 > 0.0 && p.I2 > 0.0 && p.I3 > 0.0))
        throw std::domain_error("derive_dimensionless: moments of inertia must be positive");
    if (!(p.l > 0.0)) throw std::domain_error("derive_dimensionless: need l > 0");
    DimensionlessParams d;
    d.delta = p.I1 / p.I2 - 1.0;
    d.gamma = p.I1 / p.I3 - 1.0;
    d.rho = p.h() / p.l;
    d.rho_hat = d.rho * (1.0 + d.delta);
    d.beta = d.gamma != 0.0 ? d.rho / d.gamma : 0.0;
    d.nu = d.gamma != 0.0 ? d.delta / d.gamma : 0.0;
    d.time_scale = p.I1 / p.l;
    return d;
}

DimensionlessParams with_rotor(const DimensionlessParams& d, double rho_signed) {
    DimensionlessParams out = d;
    out.rho = rho_signed;
    out.rho_hat = rho_signed * (1.0 + d.delta);
    out.beta = d.gamma != 0.0 ? rho_signed / d.gamma : 0.0;
    return out;
}

AngleRates eom_angles(const AngleState& s, const DimensionlessParams& d) {
    if (s.convention != AngleConvention::somersault_tilt_twist)
        throw std::invalid_argument("eom_angles: state is not in the somersault/tilt/twist chart");
    check_tilt(s.theta, "eom_angles");
    const double sp = std::sin(s.psi), cp = std::cos(s.psi);
    const double st = std::sin(s.theta), ct = std::cos(s.theta);
    AngleRates r;
    r.dphi = 1.0 + d.delta * sp * sp + d.rho_hat * sp / ct;
    r.dtheta = -d.delta * ct * cp * sp - d.rho_hat * cp;
    r.dpsi = d.gamma * st - d.delta * st * sp * sp - d.rho_hat * (st / ct) * sp;
    return r;
}

AngleRates eom_tilde_angles(const AngleState& s, const DimensionlessParams& d) {
    if (s.convention != AngleConvention::tilde)
        throw std::invalid_argument("eom_tilde_angles: state is not in the tilde chart");
    check_tilt(s.theta, "eom_tilde_angles");
    const double sp = std::sin(s.psi), cp = std::cos(s.psi);
    const double st = std::sin(s.theta), ct = std::cos(s.theta);
    AngleRates r;
    r.dphi = 1.0 + d.gamma * sp * sp;
    r.dtheta = d.gamma * ct * sp * cp;
    r.dpsi = -d.rho_hat + st * (d.gamma * sp * sp - d.delta);
    return r;
}

Vec3 eom_momentum(const MomentumState& s, const BodyParams& p) {
    const Vec3 omega{s.L[0] / p.I1, (s.L[1] - s.h) / p.I2, s.L[2] / p.I3};
    return cross(s.L, omega);
}

Vec3 momentum_direction(const AngleState& s) {
    const double sp = std::sin(s.psi), cp = std::cos(s.psi);
    const double st = std::sin(s.theta), ct = std::cos(s.theta);
    if (s.convention == AngleConvention::somersault_tilt_twist) return {ct * cp, -ct * sp, st};
    return {ct * cp, -st, ct * sp};
}

AngleState angles_from_momentum(const Vec3& u) {
    AngleState s;
    s.theta = std::asin(std::clamp(u[2], -1.0, 1.0));
    s.psi = std::atan2(-u[1], u[0]);
    return s;
}

std::array<double, 5> sphere_rhs(const std::array<double, 5>& y, const DimensionlessParams& d) {
    const Vec3 u{y[0], y[1], y[2]};
    const Vec3 w{u[0], (1.0 + d.delta) * (u[1] - d.rho), (1.0 + d.gamma) * u[2]};
    const Vec3 du = cross(u, w);
    const double denom = u[0] * u[0] + u[1] * u[1];
    const double dphi = 1.0 + u[1] * (d.delta * u[1] - d.rho_hat) / denom;
    const double dpsi = d.gamma * u[2] - u[2] * (dphi - 1.0);
    return {du[0], du[1], du[2], dphi, dpsi};
}

double energy(const AngleState& s, const DimensionlessParams& d) {
    const double sp = std::sin(s.psi);
    const double st = std::sin(s.theta), ct = std::cos(s.theta);
    if (s.convention == AngleConvention::somersault_tilt_twist) {
        return 0.5 * (1.0 + d.gamma * st * st + d.delta * ct * ct * sp * sp) +
               0.5 * d.rho_hat * (d.rho + 2.0 * ct * sp);
    }
    const double rps = d.rho + st;
    return 0.5 * ((1.0 + d.gamma * sp * sp) * ct * ct + (1.0 + d.delta) * rps * rps);
}

double energy(const Vec3& u, const DimensionlessParams& d) {
    const double v1 = u[0];
    const double v2 = u[1] - d.rho;
    const double v3 = u[2];
    return 0.5 * (v1 * v1 + (1.0 + d.delta) * v2 * v2 + (1.0 + d.gamma) * v3 * v3);
}

double sin_psi_from_energy(double theta, double E, const DimensionlessParams& d) {
    if (d.delta != 0.0)
        throw std::domain_error("sin_psi_from_energy: symmetric relation, needs delta = 0");
    if (d.rho == 0.0) throw std::domain_error("sin_psi_from_energy: needs a rotor, rho != 0");
    check_tilt(theta, "sin_psi_from_energy");
    const double st = std::sin(theta), ct = std::cos(theta);
    return (E - 0.5 * (1.0 + d.rho * d.rho)) / (d.rho * ct) -
           (d.gamma / (2.0 * d.rho)) * st * (st / ct);
}

}  // namespace twistdive
