#include "twistdive/gen_planner.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "twistdive/elliptic.hpp"
#include "twistdive/root_find.hpp"

namespace twistdive {

namespace {

constexpr double kPi = std::numbers::pi;

// The transit closed forms need K and Pi at negative parameter (the modulus
// goes imaginary for narrow bands); the Carlson forms cover m < 1 directly,
// so bypass the strict Legendre wrappers here.
double comp_k_any(double m) {
    if (!(m < 1.0)) throw std::domain_error("complete K: need m < 1");
    return carlson_rf(0.0, 1.0 - m, 1.0);
}

double comp_pi_any(double n, double m) {
    if (!(m < 1.0)) throw std::domain_error("complete Pi: need m < 1");
    if (!(n < 1.0)) throw std::domain_error("complete Pi: need n < 1");
    double r = carlson_rf(0.0, 1.0 - m, 1.0);
    if (n != 0.0) r += n / 3.0 * carlson_rj(0.0, 1.0 - m, 1.0, 1.0 - n);
    return r;
}

void check_band(const TiltBand& b) {
    if (!(b.s_minus > 0.0 && b.s_minus < 1.0))
        throw std::domain_error("band: s_minus must lie in (0, 1); s_minus -> 0 is the separatrix");
    if (!(b.nu <= 0.0 && b.nu > -1.0)) throw std::domain_error("band: need -1 < nu <= 0");
}

void check_regime(const DimensionlessParams& d) {
    if (!(d.gamma > 0.0)) throw std::domain_error("general planner: need gamma > 0");
    if (!(d.delta <= 0.0 && d.delta > -1.0))
        throw std::domain_error("general planner: need -1 < delta <= 0");
}

// Modulus and prefactor of the transit closed forms.
struct TransitModulus {
    double m;     // squared modulus, may be negative
    double pref;  // gamma * That2 = 2 pref K(m)
};

TransitModulus transit_modulus(const TiltBand& b) {
    double s2 = b.s_minus * b.s_minus;
    double om_nu = 1.0 - b.nu;
    double a = 1.0 / s2 - 1.0;
    double denom = (2.0 - s2) * om_nu;
    return {a * (s2 * om_nu + b.nu) / denom, std::sqrt(a / denom)};
}

void validate_request(const DiveRequest& req) {
    const BodyParams& b = req.body;
    if (!(b.I1 > 0.0 && b.I2 > 0.0 && b.I3 > 0.0))
        throw std::invalid_argument("principal inertias must be positive");
    if (!(b.I1 > b.I3))
        throw std::invalid_argument("somersault inertia I1 must exceed twist inertia I3");
    if (b.I1 > b.I2)
        throw std::invalid_argument("general planner requires I1 <= I2 (delta <= 0)");
    if (!(req.m > 0.0) || !is_half_integer_count(req.m))
        throw std::invalid_argument("somersault count m must be a positive multiple of 1/2");
    if (!(req.n >= 0.5) || !is_half_integer_count(req.n))
        throw std::invalid_argument("twist count n must be a multiple of 1/2, at least 1/2");
    if (!(req.T_tot > 0.0)) throw std::invalid_argument("flight time must be positive");
}

DimensionlessParams dimensionless_shape(const BodyParams& b) {
    // Shape ratios only; valid before l is known.
    DimensionlessParams d;
    d.delta = b.I1 / b.I2 - 1.0;
    d.gamma = b.I1 / b.I3 - 1.0;
    d.nu = d.delta / d.gamma;
    return d;
}

}  // namespace

double s_plus_from_s_minus(double s_minus, double nu) {
    return std::sqrt((s_minus * s_minus - nu) / (1.0 - nu));
}

TiltBand band_from_s_minus(double s_minus, const DimensionlessParams& d) {
    check_regime(d);
    TiltBand b;
    b.s_minus = s_minus;
    b.nu = d.nu;
    check_band(b);
    b.s_plus = s_plus_from_s_minus(s_minus, d.nu);
    return b;
}

double rho_hat_for_band(const TiltBand& b, double gamma) {
    check_band(b);
    double c_plus = std::sqrt(1.0 - b.s_plus * b.s_plus);
    return gamma * b.s_minus * b.s_minus / (2.0 * c_plus);
}

TiltBand band_from_rho(double rho, const DimensionlessParams& d) {
    check_regime(d);
    if (!(rho > 0.0)) throw std::domain_error("band_from_rho: need rho > 0");
    double rh = rho * (1.0 + d.delta);
    double gd = d.gamma - d.delta;
    double z_lo = (rh - std::sqrt(rh * rh + d.gamma * gd)) / gd;
    TiltBand b;
    b.nu = d.nu;
    b.s_plus = std::sqrt(1.0 - z_lo * z_lo);
    // s_minus^2 = 2 rho_hat cos(theta_max) / gamma, the exact inverse of
    // rho_hat_for_band; the band relation in terms of s_plus cancels badly
    // for weak rotors.
    b.s_minus = std::sqrt(2.0 * rh * (-z_lo) / d.gamma);
    return b;
}

TwistCycle twist_period_and_somersault(const TiltBand& b, const DimensionlessParams& d) {
    check_regime(d);
    check_band(b);
    TwistCycle tc;
    double k = (b.s_plus - b.s_minus) / (b.s_plus + b.s_minus);
    tc.period = 8.0 * ellip_k(k * k) /
                (d.gamma * (b.s_plus + b.s_minus) * std::sqrt(1.0 - b.nu));
    IntegralParams p;
    p.s = b.s_minus;
    p.gamma = d.gamma;
    p.delta = d.delta;
    QuadResult q = quad_defining_integral(DefiningIntegral::twist_somersault_general, p);
    if (!q.converged) throw std::runtime_error("twist somersault quadrature did not converge");
    tc.somersault = q.value;
    return tc;
}

double t2_general(const TiltBand& b, const DimensionlessParams& d) {
    check_regime(d);
    check_band(b);
    TransitModulus tm = transit_modulus(b);
    return 2.0 * tm.pref * comp_k_any(tm.m) / d.gamma;
}

double phi2_general(const TiltBand& b, const DimensionlessParams& d) {
    check_regime(d);
    check_band(b);
    double s2 = b.s_minus * b.s_minus;
    double c2 = 1.0 - s2;
    double om_nu = 1.0 - b.nu;
    TransitModulus tm = transit_modulus(b);

    double g = b.s_minus * std::sqrt(c2 * (2.0 - s2) * om_nu);
    double fr = std::sqrt(c2 * om_nu);
    double nr = std::sqrt(c2 / om_nu);
    double n_plus = 1.0 - (1.0 - nr) / s2;
    double n_minus = 1.0 - (1.0 + nr) / s2;
    if (!(n_plus < 1.0 && n_minus < 1.0))
        throw std::logic_error("transit somersault: characteristic out of range");

    double phitilde2 = t2_general(b, d) + (c2 - fr) / g * comp_pi_any(n_plus, tm.m) +
                       (c2 + fr) / g * comp_pi_any(n_minus, tm.m);
    return phitilde2 - 0.5 * kPi;
}

StageTimes stage_times_general(const TiltBand& b, const DimensionlessParams& d, double m,
                               double n) {
    StageTimes st;
    TwistCycle tc = twist_period_and_somersault(b, d);
    st.That2 = t2_general(b, d);
    st.phi2 = phi2_general(b, d);
    st.That3 = tc.period * (n - 0.5);
    st.phi3 = tc.somersault * (n - 0.5);
    st.That1 = 0.5 * (2.0 * kPi * m - 2.0 * st.phi2 - st.phi3);
    st.phi1 = st.That1;
    st.That_tot = 2.0 * st.That1 + 2.0 * st.That2 + st.That3;
    st.feasible = st.That1 >= -1e-12;
    if (st.feasible && st.That1 < 0.0) st.That1 = 0.0;
    return st;
}

double min_tilt_general(double m, double n, const DimensionlessParams& d) {
    check_regime(d);
    auto budget = [&](double sm) {
        TiltBand b = band_from_s_minus(sm, d);
        TwistCycle tc = twist_period_and_somersault(b, d);
        return kPi * m - phi2_general(b, d) - 0.5 * tc.somersault * (n - 0.5);
    };
    double guess = (std::numbers::sqrt2 * ellip_k(0.5) / kPi - 0.5 + n) / (m * d.gamma);
    guess = std::min(std::max(guess, 1e-3), 0.9);
    double lo = 0.5 * guess, hi = std::min(2.0 * guess, 0.99);
    while (budget(lo) > 0.0 && lo > 1e-3) lo = std::max(1e-3, 0.5 * lo);
    while (budget(hi) < 0.0 && hi < 0.99) hi = std::min(0.99, 2.0 * hi);
    if (budget(lo) > 0.0 || budget(hi) < 0.0)
        throw std::domain_error("no feasible tilt band in (0, 0.99) for these counts");
    RootResult r = find_root(budget, lo, hi, 1e-13);
    if (!r.converged) throw std::runtime_error("general min-tilt solve did not converge");
    return r.x;
}

DivePlan plan_dive_general(const DiveRequest& req) {
    validate_request(req);
    const BodyParams& body = req.body;
    DimensionlessParams shape = dimensionless_shape(body);

    DivePlan plan;
    plan.general = true;
    plan.m = req.m;
    plan.n = req.n;
    plan.terminal_sign = is_integer_count(req.n) ? 1 : -1;

    auto total_scaled = [&](const TiltBand& band) {
        TwistCycle tc = twist_period_and_somersault(band, shape);
        return 2.0 * kPi * req.m + 2.0 * (t2_general(band, shape) - phi2_general(band, shape)) +
               (tc.period - tc.somersault) * (req.n - 0.5);
    };

    // The scaled total is not monotone in s_minus (it diverges toward the
    // separatrix, dips to a minimum, then grows), so both solves scan their
    // bracket and take the first sign change: the least-tilt feasible root.
    auto first_crossing = [](const std::function<double(double)>& f, double lo, double hi,
                             double x_tol) -> RootResult {
        const int scan = 64;
        double x_prev = lo, f_prev = f(lo);
        if (f_prev == 0.0) return {lo, 0.0, 0, true};
        for (int i = 1; i <= scan; ++i) {
            double x = lo + (hi - lo) * i / scan;
            double fx = f(x);
            if (f_prev * fx <= 0.0) return find_root(f, x_prev, x, x_tol);
            x_prev = x;
            f_prev = fx;
        }
        return {0.0, 0.0, 0, false};
    };

    double l = body.l;
    TiltBand band;
    if (l > 0.0) {
        if (body.h() > 0.0)
            throw std::invalid_argument("give either l or a rotor (omega_d, I_d), not both");
        double target = l * req.T_tot / body.I1;
        if (!(target > 2.0 * kPi * req.m)) {
            plan.l = l;
            plan.reason =
                "requested total is at or below the zero-tilt boundary (That_tot <= 2 pi m); "
                "no positive tilt can slow the somersault enough";
            return plan;
        }
        double sm0;
        try {
            sm0 = min_tilt_general(req.m, req.n, shape);
        } catch (const std::domain_error& e) {
            plan.l = l;
            plan.reason = e.what();
            return plan;
        }
        auto f = [&](double sm) { return total_scaled(band_from_s_minus(sm, shape)) - target; };
        RootResult r = first_crossing(f, sm0, 0.99, 1e-13);
        if (!r.converged) {
            plan.l = l;
            plan.reason =
                "no feasible tilt band attains the requested total: it lies below the "
                "attainable minimum on [min_tilt, 0.99]";
            return plan;
        }
        band = band_from_s_minus(r.x, shape);
    } else {
        double h = body.h();
        if (!(h > 0.0))
            throw std::invalid_argument("either l > 0 or a rotor (omega_d > 0, I_d > 0) is required");
        auto residual = [&](double lv) {
            return total_scaled(band_from_rho(h / lv, shape)) - lv * req.T_tot / body.I1;
        };
        double l_lo = 2.0 * kPi * req.m * body.I1 / req.T_tot;
        double l_hi = 2.0 * l_lo;
        for (int i = 0; i < 60 && residual(l_hi) > 0.0; ++i) l_hi *= 2.0;
        RootResult r = first_crossing(residual, l_lo, l_hi, 1e-12);
        if (!r.converged) throw std::runtime_error("angular momentum solve did not converge");
        l = r.x;
        band = band_from_rho(h / l, shape);
    }

    plan.l = l;
    plan.s = band.s_plus;
    plan.s_minus = band.s_minus;
    plan.rho_hat = rho_hat_for_band(band, shape.gamma);
    plan.rho = plan.rho_hat / (1.0 + shape.delta);
    plan.beta = plan.rho / shape.gamma;
    plan.h = plan.rho * l;

    StageTimes st = stage_times_general(band, shape, req.m, req.n);
    TwistCycle tc = twist_period_and_somersault(band, shape);
    plan.That1 = st.That1;
    plan.That2 = st.That2;
    plan.That3 = st.That3;
    plan.That_tot = st.That_tot;
    plan.phi1 = st.phi1;
    plan.phi2 = st.phi2;
    plan.phi3 = st.phi3;
    plan.psi2 = 0.5 * kPi;
    plan.psi3 = 2.0 * kPi * (req.n - 0.5);
    plan.twist_period = tc.period;
    plan.twist_somersault = tc.somersault;

    double ts = body.I1 / l;
    plan.T1 = plan.That1 * ts;
    plan.T2 = plan.That2 * ts;
    plan.T3 = plan.That3 * ts;
    plan.T4 = plan.T2;
    plan.T5 = plan.T1;
    plan.T_tot = plan.That_tot * ts;

    plan.feasible = st.feasible;
    if (!plan.feasible)
        plan.reason =
            "stage-1 budget negative: tilt somersault plus twist-stage somersault exceed 2 pi m";

    if (plan.h > 8.0 * kPi)
        plan.warnings.push_back("rotor momentum h exceeds the plausible arm-driven range (8 pi)");
    if (l > 50.0 * kPi)
        plan.warnings.push_back("angular momentum l exceeds the plausible takeoff range (50 pi)");
    if (req.T_tot < 0.8 || req.T_tot > 3.0)
        plan.warnings.push_back("flight time outside the typical dive range [0.8 s, 3 s]");
    return plan;
}

}  // namespace twistdive
