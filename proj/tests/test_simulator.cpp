#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "twistdive/gen_planner.hpp"
#include "twistdive/simulator.hpp"
#include "twistdive/sym_planner.hpp"

#include "oracle_values.hpp"

using namespace twistdive;

namespace {

constexpr double pi = std::numbers::pi;

DimensionlessParams make_shape(double delta, double gamma = 19.0) {
  DimensionlessParams d;
  d.delta = delta;
  d.gamma = gamma;
  d.nu = delta / gamma;
  return d;
}

DiveRequest make_request(double m, double n, double T, double l) {
  DiveRequest r;
  r.m = m;
  r.n = n;
  r.T_tot = T;
  r.body.I1 = 20.0;
  r.body.I2 = 20.0;
  r.body.I3 = 1.0;
  r.body.l = l;
  return r;
}

}  // namespace

TEST_SUITE("simulator") {
  TEST_CASE("transit oracle reproduces the symmetric closed forms") {
    const DimensionlessParams d = make_shape(0.0);
    for (double s : {0.05, 0.14, 0.3}) {
      const double rho = 19.0 * beta_from_tilt(s);
      const TransitResult r = transit_oracle(d, rho);
      CHECK(r.That2 == doctest::Approx(t2_hat(s, 19.0)).epsilon(1e-8));
      CHECK(r.phi2 == doctest::Approx(phi2(s, 19.0)).epsilon(1e-8));
      CHECK(std::abs(r.end[0]) < 1e-9);          // stopped at the turning point
      CHECK(r.end[2] == doctest::Approx(s).epsilon(1e-8));
      CHECK(r.end[4] == doctest::Approx(pi / 2.0).epsilon(1e-8));
    }
    CHECK_THROWS_AS(transit_oracle(d, 0.0), std::domain_error);
  }

  TEST_CASE("transit oracle reproduces the general closed forms") {
    const DimensionlessParams d = make_shape(-0.4);
    const double rho = oracle::gen_d04_s1_rh / (1.0 - 0.4);
    const TransitResult r = transit_oracle(d, rho);
    CHECK(r.That2 == doctest::Approx(oracle::gen_d04_s1_T2).epsilon(1e-8));
    CHECK(r.phi2 == doctest::Approx(oracle::gen_d04_s1_phitilde2 - pi / 2.0).epsilon(1e-8));
    CHECK(r.end[2] == doctest::Approx(oracle::gen_d04_s1_sp).epsilon(1e-8));
  }

  TEST_CASE("psi-advance event recovers the twist period") {
    // One full twist cycle from the band's tilt minimum, rotor off.
    const DimensionlessParams d = make_shape(-0.4);
    const double sm = 0.1;
    const State5 y0{std::sqrt(1.0 - sm * sm), 0.0, sm, 0.0, 0.0};
    const StageSpec spec{3, 0.0, StopKind::psi_advance, 2.0 * pi};
    const Trajectory t = integrate_stage(y0, 0.0, spec, d);
    const Sample& last = final_sample(t);
    CHECK(last.tau == doctest::Approx(oracle::gen_d04_s1_P3).epsilon(1e-9));
    CHECK(last.y[0] == doctest::Approx(y0[0]).epsilon(1e-9));  // orbit closes
    CHECK(last.y[2] == doctest::Approx(sm).epsilon(1e-9));
    CHECK(last.y[3] == doctest::Approx(oracle::gen_d04_s1_Phi3).epsilon(1e-8));
  }

  TEST_CASE("tilt-rate event agrees with the turning point on a symmetric arc") {
    const DimensionlessParams d = make_shape(0.0);
    const double rho = 19.0 * beta_from_tilt(0.14);
    const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
    const Trajectory a =
        integrate_stage(y0, 0.0, {2, -rho, StopKind::turning_point, 0.0}, d);
    const Trajectory b = integrate_stage(y0, 0.0, {2, -rho, StopKind::theta_turn, 0.0}, d);
    CHECK(final_sample(a).tau == doctest::Approx(final_sample(b).tau).epsilon(1e-10));
  }

  TEST_CASE("fixed-duration stages are exact in time") {
    // Rotor off on the equator: phi advances at unit rate, nothing else moves.
    const DimensionlessParams d = make_shape(0.0);
    const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
    const Trajectory t = integrate_stage(y0, 0.0, {1, 0.0, StopKind::fixed_duration, 1.25}, d);
    const Sample& last = final_sample(t);
    CHECK(last.tau == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(last.y[3] == doctest::Approx(1.25).epsilon(1e-10));
    CHECK(last.y[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(last.y[4]) < 1e-10);
  }

  TEST_CASE("zero-duration stage records a single sample") {
    const DimensionlessParams d = make_shape(0.0);
    const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
    const Trajectory t = integrate_stage(y0, 2.0, {1, 0.0, StopKind::fixed_duration, 0.0}, d);
    CHECK(t.samples.size() == 1);
    CHECK(final_sample(t).tau == 2.0);
  }

  TEST_CASE("backward integration reverses a transit") {
    const DimensionlessParams d = make_shape(-0.4);
    const double rho = oracle::gen_d04_s1_rh / 0.6;
    const TransitResult fwd = transit_oracle(d, rho);
    const Trajectory back = integrate_stage(
        fwd.end, fwd.That2, {2, -rho, StopKind::fixed_duration, -fwd.That2}, d);
    const Sample& last = final_sample(back);
    CHECK(last.tau == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(last.y[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(last.y[1]) < 1e-8);
    CHECK(std::abs(last.y[2]) < 1e-8);
    CHECK(std::abs(last.y[3]) < 1e-8);
    CHECK(std::abs(last.y[4]) < 1e-8);
  }

  TEST_CASE("event localization is stable under sampling choices") {
    const DimensionlessParams d = make_shape(0.0);
    const double rho = 19.0 * beta_from_tilt(0.14);
    Tolerances coarse;
    coarse.max_sample_dt = 0.01;
    Tolerances dense;
    dense.max_sample_dt = 0.0037;
    const TransitResult a = transit_oracle(d, rho, coarse);
    const TransitResult b = transit_oracle(d, rho, dense);
    CHECK(std::abs(a.That2 - b.That2) < 1e-12);  // sampling only interpolates

    Tolerances other;
    other.init_dt = 1e-4;  // different step sequence, same event
    const TransitResult c = transit_oracle(d, rho, other);
    CHECK(std::abs(a.That2 - c.That2) < 1e-9);
  }

  TEST_CASE("never-firing events stop at the horizon") {
    // theta' vanishes identically on the equator of an axisymmetric body with
    // the rotor off, so the event can never trigger.
    const DimensionlessParams d = make_shape(0.0);
    const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
    Tolerances tol;
    tol.max_tau = 1.0;
    CHECK_THROWS_AS(integrate_stage(y0, 0.0, {1, 0.0, StopKind::theta_turn, 0.0}, d, tol),
                    std::runtime_error);
  }

  TEST_CASE("full dive closes on the requested counts") {
    const DivePlan plan = plan_dive(make_request(1.5, 2.0, 1.5, 127.4));
    REQUIRE(plan.feasible);
    const ClosureReport rep = simulate_plan(plan, make_shape(0.0));
    CHECK(rep.phi_error < 1e-7);
    CHECK(rep.psi_error < 1e-7);
    CHECK(std::abs(rep.theta_final) < 1e-7);
    CHECK(rep.max_energy_drift < 1e-9);
    CHECK(rep.max_unit_drift < 1e-9);
    CHECK(rep.delta_phi == doctest::Approx(2.0 * pi * 1.5).epsilon(1e-9));
    CHECK(rep.delta_psi == doctest::Approx(2.0 * pi * 2.0).epsilon(1e-9));
    // Stage tags cover all five stages in order.
    CHECK(rep.trajectory.samples.front().stage == 1);
    CHECK(rep.trajectory.samples.back().stage == 5);
  }

  TEST_CASE("half-integer twist count ends on the reversed somersault axis") {
    const DivePlan plan = plan_dive(make_request(1.5, 1.5, 1.5, 127.4));
    REQUIRE(plan.feasible);
    CHECK(plan.terminal_sign == -1);
    const ClosureReport rep = simulate_plan(plan, make_shape(0.0));
    CHECK(rep.phi_error < 1e-7);
    CHECK(rep.psi_error < 1e-7);
    const State5& yf = final_sample(rep.trajectory).y;
    CHECK(yf[0] == doctest::Approx(-1.0).epsilon(1e-7));
  }

  TEST_CASE("infeasible plans cannot be scheduled") {
    const DivePlan bad = plan_dive(make_request(1.5, 2.0, 1.5, 125.0));
    REQUIRE_FALSE(bad.feasible);
    CHECK_THROWS_AS(build_stage_specs(bad), std::invalid_argument);
    CHECK_THROWS_AS(simulate_plan(bad, make_shape(0.0)), std::invalid_argument);
  }

  TEST_CASE("trajectory export format") {
    const DimensionlessParams d = make_shape(0.0);
    const State5 y0{1.0, 0.0, 0.0, 0.0, 0.0};
    const Trajectory t = integrate_stage(y0, 0.0, {1, 0.0, StopKind::fixed_duration, 0.05}, d);
    const std::string csv = trajectory_csv(t, 127.4);

    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "tau,phi,theta,psi,L1,L2,L3,E,stage");

    std::size_t rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(std::count(line.begin(), line.end(), ',') == 8);
    }
    CHECK(rows == t.samples.size());

    // First row is the initial condition: L = l u, theta = 0, stage tag 1.
    const std::string first = csv.substr(csv.find('\n') + 1);
    std::istringstream row(first.substr(0, first.find('\n')));
    double tau, phi, theta, psi, L1, L2, L3, E;
    int stage;
    char comma;
    row >> tau >> comma >> phi >> comma >> theta >> comma >> psi >> comma >> L1 >> comma >> L2 >>
        comma >> L3 >> comma >> E >> comma >> stage;
    CHECK(tau == 0.0);
    CHECK(L1 == doctest::Approx(127.4).epsilon(1e-15));
    CHECK(L2 == 0.0);
    CHECK(theta == 0.0);
    CHECK(stage == 1);

    // Identical call, identical bytes.
    CHECK(trajectory_csv(t, 127.4) == csv);
  }
}
