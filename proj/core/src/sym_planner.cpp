#include "twistdive/sym_planner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twistdive/elliptic.hpp"
#include "twistdive/root_find.hpp"

namespace twistdive {

namespace {

constexpr double kPi = std::numbers::pi;

void check_tilt_arg(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::domain_error("tilt s must lie in (0, 1)");
}

// Modulus of the tilt-in quarter period: m = k^2 = (1 - s^2) / (2 - s^2).
double modulus_sq(double s) {
    double c2 = 1.0 - s * s;
    return c2 / (1.0 + c2);
}

void validate_request(const DiveRequest& req) {
    const BodyParams& b = req.body;
    if (!(b.I1 > 0.0 && b.I2 > 0.0 && b.I3 > 0.0))
        throw std::invalid_argument("principal inertias must be positive");
    if (!(b.I1 > b.I3))
        throw std::invalid_argument("somersault inertia I1 must exceed twist inertia I3");
    if (!(req.m > 0.0) || !is_half_integer_count(req.m))
        throw std::invalid_argument("somersault count m must be a positive multiple of 1/2");
    if (!(req.n >= 0.5) || !is_half_integer_count(req.n))
        throw std::invalid_argument("twist count n must be a multiple of 1/2, at least 1/2");
    if (!(req.T_tot > 0.0)) throw std::invalid_argument("flight time must be positive");
}

}  // namespace

double tilt_from_beta(double beta) {
    if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
    double c = 1.0 / (std::sqrt(beta * beta + 1.0) + beta);  // cos(theta_max)
    return std::sqrt(2.0 * beta * c);                        // s^2 = 2 beta cos(theta_max)
}

double beta_from_tilt(double s) {
    check_tilt_arg(s);
    return s * s / (2.0 * std::sqrt(1.0 - s * s));
}

double t2_hat(double s, double gamma) {
    check_tilt_arg(s);
    if (!(gamma > 0.0)) throw std::domain_error("gamma must be positive");
    double m = modulus_sq(s);
    return 2.0 * std::sqrt(m) / (s * gamma) * ellip_k(m);
}

double somersault_excess(double s) {
    check_tilt_arg(s);
    double c2 = 1.0 - s * s;
    double m = modulus_sq(s);
    double n = -s * s / c2;
    return std::sqrt(m) / s * (ellip_pi(n, m) / c2 - ellip_k(m));
}

double phi2(double s, double gamma) { return t2_hat(s, gamma) - somersault_excess(s); }

double expansion_constant_a() {
    double k = ellip_k(0.5), e = ellip_e(0.5);
    return (2.0 * e - k) / (std::numbers::sqrt2 * kPi);
}

double expansion_constant_b() {
    return std::numbers::sqrt2 * ellip_k(0.5) / kPi - 0.5;
}

StageTimes stage_times(double s, double gamma, double m, double n) {
    check_tilt_arg(s);
    StageTimes st;
    double period = 2.0 * kPi / (gamma * s);  // Phi3 == P3 when I1 == I2
    st.That3 = period * (n - 0.5);
    st.phi3 = st.That3;
    st.phi2 = phi2(s, gamma);
    st.That2 = t2_hat(s, gamma);
    st.That1 = 0.5 * (2.0 * kPi * m - 2.0 * st.phi2 - st.phi3);
    st.phi1 = st.That1;
    st.That_tot = 2.0 * st.That1 + 2.0 * st.That2 + st.That3;
    st.feasible = st.That1 >= -1e-12;
    if (st.feasible && st.That1 < 0.0) st.That1 = 0.0;
    return st;
}

double solve_tilt_for_ttot(double That_tot, double m) {
    double target = 0.5 * (That_tot - 2.0 * kPi * m);
    if (!(target > 0.0))
        throw std::domain_error(
            "requested total is at or below the zero-tilt boundary (That_tot <= 2 pi m); "
            "no positive tilt can slow the somersault enough");

    const double lo = 1e-6, hi = 0.99;
    // The excess is strictly increasing on the bracket; verify before solving.
    double prev = somersault_excess(lo);
    for (int i = 1; i <= 8; ++i) {
        double si = lo + (hi - lo) * i / 8.0;
        double cur = somersault_excess(si);
        if (!(cur > prev)) throw std::logic_error("somersault excess not increasing in s");
        prev = cur;
    }
    if (target > somersault_excess(hi))
        throw std::domain_error(
            "requested total exceeds the attainable range: no tilt below 0.99 absorbs it");

    auto f = [target](double s) { return somersault_excess(s) - target; };
    RootResult r = find_root(f, lo, hi, 1e-14);
    if (!r.converged) throw std::runtime_error("tilt solve did not converge");
    return r.x;
}

double min_tilt(double m, double n, double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("gamma must be positive");
    auto budget = [&](double s) {
        return kPi * m - phi2(s, gamma) - kPi * (n - 0.5) / (gamma * s);
    };
    double guess = (expansion_constant_b() + n) / (m * gamma);
    guess = std::min(std::max(guess, 1e-4), 0.9);
    double lo = 0.5 * guess, hi = std::min(2.0 * guess, 0.99);
    while (budget(lo) > 0.0 && lo > 1e-4) lo = std::max(1e-4, 0.5 * lo);
    while (budget(hi) < 0.0 && hi < 0.99) hi = std::min(0.99, 2.0 * hi);
    if (budget(lo) > 0.0 || budget(hi) < 0.0)
        throw std::domain_error("no feasible tilt in (0, 0.99) for these counts");
    RootResult r = find_root(budget, lo, hi, 1e-14);
    if (!r.converged) throw std::runtime_error("min-tilt solve did not converge");
    return r.x;
}

DivePlan plan_dive(const DiveRequest& req) {
    validate_request(req);
    const BodyParams& b = req.body;
    if (std::fabs(b.I1 - b.I2) > 1e-12 * b.I1)
        throw std::invalid_argument("symmetric planner requires I1 == I2 (use the general planner)");
    double gamma = b.I1 / b.I3 - 1.0;

    DivePlan plan;
    plan.m = req.m;
    plan.n = req.n;
    plan.terminal_sign = is_integer_count(req.n) ? 1 : -1;

    double l = b.l;
    double s = 0.0;
    if (l > 0.0) {
        if (b.h() > 0.0)
            throw std::invalid_argument("give either l or a rotor (omega_d, I_d), not both");
        double That_tot = l * req.T_tot / b.I1;
        try {
            s = solve_tilt_for_ttot(That_tot, req.m);
        } catch (const std::domain_error& e) {
            plan.l = l;
            plan.reason = e.what();
            return plan;
        }
    } else {
        double h = b.h();
        if (!(h > 0.0))
            throw std::invalid_argument("either l > 0 or a rotor (omega_d > 0, I_d > 0) is required");
        // With h fixed, l sets both the time scale and the tilt; the total-time
        // equation has a unique root above the zero-tilt l.
        auto total_residual = [&](double lv) {
            double sv = tilt_from_beta(h / (lv * gamma));
            return 2.0 * kPi * req.m + 2.0 * somersault_excess(sv) - lv * req.T_tot / b.I1;
        };
        double l_lo = 2.0 * kPi * req.m * b.I1 / req.T_tot;
        double l_hi = 2.0 * l_lo;
        for (int i = 0; i < 60 && total_residual(l_hi) > 0.0; ++i) l_hi *= 2.0;
        RootResult r = find_root(total_residual, l_lo, l_hi, 1e-12);
        if (!r.converged) throw std::runtime_error("angular momentum solve did not converge");
        l = r.x;
        s = tilt_from_beta(h / (l * gamma));
    }

    plan.l = l;
    plan.s = s;
    plan.s_minus = s;
    plan.beta = beta_from_tilt(s);
    plan.rho = gamma * plan.beta;
    plan.rho_hat = plan.rho;  // delta == 0
    plan.h = plan.rho * l;

    StageTimes st = stage_times(s, gamma, req.m, req.n);
    plan.That1 = st.That1;
    plan.That2 = st.That2;
    plan.That3 = st.That3;
    plan.That_tot = st.That_tot;
    plan.phi1 = st.phi1;
    plan.phi2 = st.phi2;
    plan.phi3 = st.phi3;
    plan.psi2 = 0.5 * kPi;
    plan.psi3 = 2.0 * kPi * (req.n - 0.5);
    plan.twist_period = 2.0 * kPi / (gamma * s);
    plan.twist_somersault = plan.twist_period;

    double ts = b.I1 / l;
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
