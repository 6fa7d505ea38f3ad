#include "twistdive/simulator.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace twistdive {

namespace {

namespace ode = boost::numeric::odeint;

double unit_error(const State5& y) {
    return std::fabs(std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]) - 1.0);
}

Vec3 direction(const State5& y) { return {y[0], y[1], y[2]}; }

// Stop function g(y); the stage ends at its first qualifying zero crossing.
class EventFn {
  public:
    EventFn(const StageSpec& spec, const DimensionlessParams& ds, double psi0)
        : kind_(spec.stop), target_(psi0 + spec.amount), rho_hat_(ds.rho_hat),
          delta_(ds.delta) {}

    double operator()(const State5& y) const {
        switch (kind_) {
            case StopKind::turning_point: return y[0];
            case StopKind::theta_turn: return y[0] * (delta_ * y[1] - rho_hat_);
            case StopKind::psi_advance: return y[4] - target_;
            case StopKind::u3_down: return y[2];
            case StopKind::fixed_duration: break;
        }
        throw std::logic_error("event function queried for a fixed-duration stage");
    }

    bool crossed(double g_before, double g_after) const {
        switch (kind_) {
            case StopKind::turning_point:
            case StopKind::theta_turn:
                return (g_before > 0.0 && g_after <= 0.0) || (g_before < 0.0 && g_after >= 0.0);
            case StopKind::psi_advance: return g_before < 0.0 && g_after >= 0.0;
            case StopKind::u3_down: return g_before > 0.0 && g_after <= 0.0;
            case StopKind::fixed_duration: break;
        }
        throw std::logic_error("event function queried for a fixed-duration stage");
    }

  private:
    StopKind kind_;
    double target_, rho_hat_, delta_;
};

}  // namespace

const Sample& final_sample(const Trajectory& t) {
    if (t.samples.empty()) throw std::logic_error("empty trajectory");
    return t.samples.back();
}

void append_trajectory(Trajectory& a, const Trajectory& b) {
    a.samples.insert(a.samples.end(), b.samples.begin(), b.samples.end());
    a.max_energy_drift = std::max(a.max_energy_drift, b.max_energy_drift);
    a.max_unit_drift = std::max(a.max_unit_drift, b.max_unit_drift);
}

Trajectory integrate_stage(const State5& y0, double tau0, const StageSpec& spec,
                           const DimensionlessParams& d, const Tolerances& tol) {
    const DimensionlessParams ds = with_rotor(d, spec.rho_signed);
    const double E0 = energy(direction(y0), ds);

    Trajectory traj;
    auto record = [&](double tau, const State5& y) {
        Sample s;
        s.tau = tau;
        s.y = y;
        s.energy = energy(direction(y), ds);
        s.rho_signed = spec.rho_signed;
        s.stage = spec.index;
        traj.max_energy_drift = std::max(traj.max_energy_drift, std::fabs(s.energy - E0));
        traj.max_unit_drift = std::max(traj.max_unit_drift, unit_error(y));
        traj.samples.push_back(s);
    };
    record(tau0, y0);

    const bool fixed = spec.stop == StopKind::fixed_duration;
    if (fixed && std::fabs(spec.amount) < 1e-15) return traj;

    const double dir = (fixed && spec.amount < 0.0) ? -1.0 : 1.0;
    const double tau_end = tau0 + spec.amount;  // fixed-duration stop only

    auto sys = [&ds](const State5& y, State5& dydt, double) { dydt = sphere_rhs(y, ds); };
    // max_dt must carry the integration sign: odeint's step limiter compares
    // signed step sizes and would flip a backward step to +max_dt otherwise.
    auto stepper = ode::make_dense_output(tol.abs, tol.rel, dir * tol.max_dt,
                                          ode::runge_kutta_dopri5<State5>());
    stepper.initialize(y0, tau0, dir * tol.init_dt);

    EventFn event(spec, ds, y0[4]);
    double g_prev = fixed ? 0.0 : event(y0);

    double next_sample = tau0 + dir * tol.max_sample_dt;
    State5 ys;
    auto sample_through = [&](double limit) {
        // Record grid points in (previous, limit); the caller records limit itself.
        while ((next_sample - limit) * dir < -1e-14) {
            stepper.calc_state(next_sample, ys);
            record(next_sample, ys);
            next_sample += dir * tol.max_sample_dt;
        }
    };

    long steps = 0;
    while (true) {
        if (++steps > 20'000'000) throw std::runtime_error("stage integration exceeded step budget");
        auto interval = stepper.do_step(sys);
        const double t1 = interval.second;

        if (fixed) {
            if ((t1 - tau_end) * dir >= 0.0) {
                sample_through(tau_end);
                stepper.calc_state(tau_end, ys);
                record(tau_end, ys);
                return traj;
            }
        } else {
            const double g_now = event(stepper.current_state());
            if (g_prev != 0.0 && event.crossed(g_prev, g_now)) {
                double ta = interval.first, tb = t1, ga = g_prev;
                for (int i = 0; i < 200 && tb - ta > tol.event_tol; ++i) {
                    const double tm = 0.5 * (ta + tb);
                    stepper.calc_state(tm, ys);
                    const double gm = event(ys);
                    if (event.crossed(ga, gm)) {
                        tb = tm;
                    } else {
                        ta = tm;
                        ga = gm;
                    }
                }
                sample_through(tb);
                stepper.calc_state(tb, ys);
                record(tb, ys);
                return traj;
            }
            g_prev = g_now;
            if (t1 - tau0 > tol.max_tau)
                throw std::runtime_error("stage event not found within the search horizon");
        }
        sample_through(t1);
        // Record the step endpoint too so event brackets are never skipped.
        if (std::fabs(next_sample - t1) > 1e-14) {
            record(t1, stepper.current_state());
        }
    }
}

std::vector<StageSpec> build_stage_specs(const DivePlan& plan) {
    if (!plan.feasible) throw std::invalid_argument("cannot schedule an infeasible plan");
    const double rho4 = plan.terminal_sign > 0 ? plan.rho : -plan.rho;
    return {
        {1, 0.0, StopKind::fixed_duration, plan.That1},
        {2, -plan.rho, StopKind::fixed_duration, plan.That2},
        {3, 0.0, StopKind::fixed_duration, plan.That3},
        {4, rho4, StopKind::fixed_duration, plan.That2},
        {5, 0.0, StopKind::fixed_duration, plan.That1},
    };
}

ClosureReport simulate_plan(const DivePlan& plan, const DimensionlessParams& shape,
                            const Tolerances& tol) {
    ClosureReport rep;
    State5 y{1.0, 0.0, 0.0, 0.0, 0.0};
    double tau = 0.0;
    for (const StageSpec& spec : build_stage_specs(plan)) {
        Trajectory t = integrate_stage(y, tau, spec, shape, tol);
        const Sample& last = final_sample(t);
        y = last.y;
        tau = last.tau;
        append_trajectory(rep.trajectory, t);
    }
    rep.delta_phi = y[3];
    rep.delta_psi = y[4];
    rep.phi_error = std::fabs(rep.delta_phi - 2.0 * std::numbers::pi * plan.m);
    rep.psi_error = std::fabs(rep.delta_psi - 2.0 * std::numbers::pi * plan.n);
    rep.theta_final = std::asin(std::clamp(y[2], -1.0, 1.0));
    rep.max_energy_drift = rep.trajectory.max_energy_drift;
    rep.max_unit_drift = rep.trajectory.max_unit_drift;
    return rep;
}

TransitResult transit_oracle(const DimensionlessParams& d, double rho, const Tolerances& tol) {
    if (!(rho > 0.0)) throw std::domain_error("transit oracle: need rho > 0");
    StageSpec spec{2, -rho, StopKind::turning_point, 0.0};
    State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
    Trajectory t = integrate_stage(y0, 0.0, spec, d, tol);
    const Sample& last = final_sample(t);
    TransitResult r;
    r.That2 = last.tau;
    r.phi2 = last.y[3];
    r.end = last.y;
    return r;
}

std::string trajectory_csv(const Trajectory& t, double l) {
    std::string out = "tau,phi,theta,psi,L1,L2,L3,E,stage\n";
    char buf[320];
    for (const Sample& s : t.samples) {
        const double theta = std::asin(std::clamp(s.y[2], -1.0, 1.0));
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n",
                      s.tau, s.y[3], theta, s.y[4], l * s.y[0], l * s.y[1], l * s.y[2], s.energy,
                      s.stage);
        out += buf;
    }
    return out;
}

}  // namespace twistdive
