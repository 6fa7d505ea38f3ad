#include "twistdive/defining_integrals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twistdive {
namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

// Symmetric rotor-on arc. With z = sin(theta) the time element is
// dz / sqrt((s^2 - z^2)(z^2 + b^2)) up to 2/gamma, b^2 = s^2/(1 - s^2);
// z = s sin(u) removes the upper-endpoint root.
QuadResult transit_time_sym(double s, double gamma, double tol) {
    require(s > 0.0 && s < 1.0, "transit_time_symmetric: need 0 < s < 1");
    require(gamma > 0.0, "transit_time_symmetric: need gamma > 0");
    const double b2 = s * s / (1.0 - s * s);
    auto f = [=](double u) {
        const double zs = s * std::sin(u);
        return 1.0 / std::sqrt(zs * zs + b2);
    };
    QuadResult r = integrate(f, 0.0, half_pi, tol);
    r.value *= 2.0 / gamma;
    return r;
}

// The somersault deficit over the same arc; the gamma factors cancel.
QuadResult somersault_excess_sym(double s, double tol) {
    require(s > 0.0 && s < 1.0, "somersault_excess_symmetric: need 0 < s < 1");
    const double b2 = s * s / (1.0 - s * s);
    auto f = [=](double u) {
        const double zs = s * std::sin(u);
        const double z2 = zs * zs;
        return z2 / ((1.0 - z2) * std::sqrt(z2 + b2));
    };
    return integrate(f, 0.0, half_pi, tol);
}

struct TransitCurve {
    // w^2 = P(z) = z (dz + 2rh) (gamma - delta) (z - z_lo)(z - z_hi),
    // z_lo < 0 < z_hi the roots of the quadratic factor.
    double delta, gamma, rho_hat;
    double z_lo, z_hi;

    explicit TransitCurve(const IntegralParams& p)
        : delta(p.delta), gamma(p.gamma), rho_hat(p.rho_hat) {
        require(gamma > 0.0, "transit general: need gamma > 0");
        require(delta <= 0.0 && delta > -1.0, "transit general: need -1 < delta <= 0");
        require(rho_hat > 0.0, "transit general: need rho_hat > 0");
        const double gd = gamma - delta;
        const double disc = std::sqrt(rho_hat * rho_hat + gamma * gd);
        z_lo = (rho_hat - disc) / gd;
        z_hi = (rho_hat + disc) / gd;
    }

    // P(z) with the root at z (near z_lo or 0) divided out.
    double reduced_near_lo(double z) const {
        return (-z) * (delta * z + 2.0 * rho_hat) * (gamma - delta) * (z_hi - z);
    }
    double reduced_near_zero(double z) const {
        return (delta * z + 2.0 * rho_hat) * (gamma - delta) * (z - z_lo) * (z_hi - z);
    }
};

// Integrates f(z) dz / sqrt(P(z)) over (z_lo, 0) by splitting at the midpoint
// and substituting w^2 for the distance to the nearby root on each side.
template <class F>
QuadResult transit_integral(const TransitCurve& c, F f, double tol) {
    const double zm = 0.5 * c.z_lo;
    auto near_lo = [&](double w) {
        const double z = c.z_lo + w * w;
        return f(z) / std::sqrt(c.reduced_near_lo(z));
    };
    auto near_zero = [&](double w) {
        const double z = -w * w;
        return f(z) / std::sqrt(c.reduced_near_zero(z));
    };
    QuadResult a = integrate(near_lo, 0.0, std::sqrt(zm - c.z_lo), 0.5 * tol);
    QuadResult b = integrate(near_zero, 0.0, std::sqrt(-zm), 0.5 * tol);
    QuadResult r;
    r.value = 2.0 * (a.value + b.value);
    r.error_estimate = 2.0 * (a.error_estimate + b.error_estimate);
    r.converged = a.converged && b.converged;
    r.evaluations = a.evaluations + b.evaluations;
    return r;
}

// Rational part of the tilde somersault integrand; R(0) = 1.
double tilde_rational(double z, double delta, double rho_hat) {
    return (1.0 + delta) + (rho_hat - 0.5 * delta) / (1.0 + z) -
           (rho_hat + 0.5 * delta) / (1.0 - z);
}

// Rotor-off twist kinds, parameterized by psi over a quarter period:
// gamma * dtau = dpsi / sqrt((s^2 - nu sin^2 psi)(1 - nu sin^2 psi)).
QuadResult twist_integral(const IntegralParams& p, bool with_somersault_weight, double tol) {
    require(p.s > 0.0 && p.s < 1.0, "twist general: s_minus must lie in (0,1); s_minus -> 0 is the separatrix");
    require(p.gamma > 0.0, "twist general: need gamma > 0");
    require(p.delta <= 0.0, "twist general: need delta <= 0");
    const double nu = p.delta / p.gamma;
    const double s2 = p.s * p.s;
    auto f = [=](double psi) {
        const double sp2 = std::sin(psi) * std::sin(psi);
        const double d = (s2 - nu * sp2) * (1.0 - nu * sp2);
        const double w = with_somersault_weight ? 1.0 + p.delta * sp2 : 1.0;
        return w / std::sqrt(d);
    };
    QuadResult r = integrate(f, 0.0, half_pi, tol);
    r.value *= 4.0 / p.gamma;
    return r;
}

}  // namespace

QuadResult quad_defining_integral(DefiningIntegral kind, const IntegralParams& p, double abs_tol) {
    switch (kind) {
        case DefiningIntegral::transit_time_symmetric:
            return transit_time_sym(p.s, p.gamma, abs_tol);
        case DefiningIntegral::somersault_excess_symmetric:
            return somersault_excess_sym(p.s, abs_tol);
        case DefiningIntegral::somersault_symmetric: {
            QuadResult t = transit_time_sym(p.s, p.gamma, 0.5 * abs_tol);
            QuadResult e = somersault_excess_sym(p.s, 0.5 * abs_tol);
            t.value -= e.value;
            t.error_estimate += e.error_estimate;
            t.converged = t.converged && e.converged;
            t.evaluations += e.evaluations;
            return t;
        }
        case DefiningIntegral::transit_time_general: {
            const TransitCurve c(p);
            return transit_integral(c, [](double) { return 1.0; }, abs_tol);
        }
        case DefiningIntegral::tilde_somersault_general: {
            const TransitCurve c(p);
            return transit_integral(
                c, [&](double z) { return tilde_rational(z, p.delta, p.rho_hat); }, abs_tol);
        }
        case DefiningIntegral::twist_period_general:
            return twist_integral(p, false, abs_tol);
        case DefiningIntegral::twist_somersault_general:
            return twist_integral(p, true, abs_tol);
    }
    throw std::logic_error("quad_defining_integral: unknown kind");
}

}  // namespace twistdive
