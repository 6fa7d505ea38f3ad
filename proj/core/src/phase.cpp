#include "twistdive/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twistdive {

namespace {

double closure_gap(const Trajectory& loop) {
    const Sample& a = loop.samples.front();
    const Sample& b = loop.samples.back();
    return std::hypot(b.y[0] - a.y[0], b.y[1] - a.y[1], b.y[2] - a.y[2]);
}

void check_loop(const Trajectory& loop) {
    if (loop.samples.size() < 2) throw std::invalid_argument("loop needs at least two samples");
    double gap = closure_gap(loop);
    if (gap > 1e-7)
        throw std::invalid_argument("open loop: endpoints differ on the sphere by " +
                                    std::to_string(gap));
}

}  // namespace

double solid_angle(const Trajectory& loop) {
    check_loop(loop);
    double s = 0.0;
    for (std::size_t i = 1; i < loop.samples.size(); ++i) {
        const State5& a = loop.samples[i - 1].y;
        const State5& b = loop.samples[i].y;
        s += 0.5 * (a[2] + b[2]) * (b[4] - a[4]);  // u3 = sin(theta)
    }
    return s;
}

double dynamic_phase(const Trajectory& loop, const DimensionlessParams& shape) {
    check_loop(loop);
    auto integrand = [&](const Sample& s) {
        const DimensionlessParams ds = with_rotor(shape, s.rho_signed);
        const Vec3 u{s.y[0], s.y[1], s.y[2]};
        const Vec3 w{u[0], (1.0 + ds.delta) * (u[1] - ds.rho), (1.0 + ds.gamma) * u[2]};
        return dot(u, w);
    };
    double d = 0.0;
    double f_prev = integrand(loop.samples.front());
    for (std::size_t i = 1; i < loop.samples.size(); ++i) {
        const double f = integrand(loop.samples[i]);
        d += 0.5 * (f_prev + f) * (loop.samples[i].tau - loop.samples[i - 1].tau);
        f_prev = f;
    }
    return d;
}

PhaseDecomposition verify_phase_decomposition(const Trajectory& loop,
                                              const DimensionlessParams& shape) {
    PhaseDecomposition p;
    p.geometric_phase = solid_angle(loop);
    p.dynamic_phase = dynamic_phase(loop, shape);
    p.total_delta_phi = loop.samples.back().y[3] - loop.samples.front().y[3];
    p.residual = p.total_delta_phi - (p.dynamic_phase - p.geometric_phase);
    return p;
}

PhaseDecomposition decompose_refined(const std::function<Trajectory(double)>& build_loop,
                                     const DimensionlessParams& shape, double tol) {
    double dt = 0.01;
    Trajectory loop = build_loop(dt);
    double s_prev = solid_angle(loop);
    double d_prev = dynamic_phase(loop, shape);
    for (int i = 0; i < 16; ++i) {
        dt *= 0.5;
        loop = build_loop(dt);
        const double s = solid_angle(loop);
        const double d = dynamic_phase(loop, shape);
        const bool settled = std::fabs(s - s_prev) < tol && std::fabs(d - d_prev) < tol;
        s_prev = s;
        d_prev = d;
        if (settled) break;
    }
    return verify_phase_decomposition(loop, shape);
}

Trajectory twist_period_loop(const DimensionlessParams& shape, double s_minus,
                             double max_sample_dt) {
    if (!(s_minus > 0.0 && s_minus < 1.0))
        throw std::domain_error("twist loop: s_minus must lie in (0, 1)");
    Tolerances tol;
    tol.max_sample_dt = max_sample_dt;
    // Start at the tilt minimum (psi = 0), advance psi by one full turn.
    State5 y0{std::sqrt(1.0 - s_minus * s_minus), 0.0, s_minus, 0.0, 0.0};
    StageSpec spec{3, 0.0, StopKind::psi_advance, 2.0 * std::numbers::pi};
    return integrate_stage(y0, 0.0, spec, shape, tol);
}

Trajectory switched_dive_loop(const DimensionlessParams& shape, double rho, double n,
                              double max_sample_dt) {
    if (!(rho > 0.0)) throw std::domain_error("dive loop: need rho > 0");
    if (!is_integer_count(n) || !(n >= 1.0))
        throw std::invalid_argument("dive loop closes only for integer twist counts n >= 1");
    Tolerances tol;
    tol.max_sample_dt = max_sample_dt;

    Trajectory loop;
    State5 y{1.0, 0.0, 0.0, 0.0, 0.0};
    double tau = 0.0;
    const StageSpec stages[] = {
        {2, -rho, StopKind::turning_point, 0.0},
        {3, 0.0, StopKind::psi_advance, 2.0 * std::numbers::pi * (n - 0.5)},
        {4, rho, StopKind::u3_down, 0.0},
    };
    for (const StageSpec& spec : stages) {
        Trajectory t = integrate_stage(y, tau, spec, shape, tol);
        const Sample& last = final_sample(t);
        y = last.y;
        tau = last.tau;
        append_trajectory(loop, t);
    }
    return loop;
}

}  // namespace twistdive
