#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twistdive/sym_planner.hpp"

#include "oracle_values.hpp"

using namespace twistdive;

namespace {

constexpr double pi = std::numbers::pi;

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

TEST_SUITE("sym_planner") {
  TEST_CASE("maximum tilt from rotor ratio and back") {
    CHECK(beta_from_tilt(0.14) == doctest::Approx(oracle::beta_s14).epsilon(1e-14));
    for (double s : {0.02, 0.1, 0.3, 0.6, 0.9}) {
      CHECK(tilt_from_beta(beta_from_tilt(s)) == doctest::Approx(s).epsilon(1e-14));
    }
    for (double beta : {1e-4, 0.01, 0.5, 3.0}) {
      CHECK(beta_from_tilt(tilt_from_beta(beta)) == doctest::Approx(beta).epsilon(1e-13));
    }
    CHECK_THROWS_AS(tilt_from_beta(0.0), std::domain_error);
    CHECK_THROWS_AS(beta_from_tilt(1.0), std::domain_error);
  }

  TEST_CASE("tilt-in stage closed forms match frozen references") {
    CHECK(t2_hat(0.02, 19.0) == doctest::Approx(oracle::t2_s02).epsilon(1e-13));
    CHECK(t2_hat(0.05, 19.0) == doctest::Approx(oracle::t2_s05).epsilon(1e-13));
    CHECK(t2_hat(0.1, 19.0) == doctest::Approx(oracle::t2_s1).epsilon(1e-13));
    CHECK(t2_hat(0.14, 19.0) == doctest::Approx(oracle::t2_s14).epsilon(1e-13));
    CHECK(t2_hat(0.3, 19.0) == doctest::Approx(oracle::t2_s3).epsilon(1e-13));
    CHECK(t2_hat(0.6, 19.0) == doctest::Approx(oracle::t2_s6).epsilon(1e-13));

    CHECK(phi2(0.02, 19.0) == doctest::Approx(oracle::phi2_s02).epsilon(1e-13));
    CHECK(phi2(0.05, 19.0) == doctest::Approx(oracle::phi2_s05).epsilon(1e-13));
    CHECK(phi2(0.1, 19.0) == doctest::Approx(oracle::phi2_s1).epsilon(1e-13));
    CHECK(phi2(0.14, 19.0) == doctest::Approx(oracle::phi2_s14).epsilon(1e-13));
    CHECK(phi2(0.3, 19.0) == doctest::Approx(oracle::phi2_s3).epsilon(1e-13));
    CHECK(phi2(0.6, 19.0) == doctest::Approx(oracle::phi2_s6).epsilon(1e-13));

    CHECK(somersault_excess(0.1) == doctest::Approx(oracle::excess_s1).epsilon(1e-11));
    CHECK(somersault_excess(0.14) == doctest::Approx(oracle::excess_s14).epsilon(1e-12));

    CHECK_THROWS_AS(t2_hat(0.0, 19.0), std::domain_error);
    CHECK_THROWS_AS(t2_hat(1.0, 19.0), std::domain_error);
    CHECK_THROWS_AS(t2_hat(0.5, 0.0), std::domain_error);
  }

  TEST_CASE("somersault excess does not depend on gamma") {
    for (double s : {0.05, 0.14, 0.5}) {
      const double ex = somersault_excess(s);
      for (double gamma : {5.0, 19.0, 100.0}) {
        CHECK(t2_hat(s, gamma) - phi2(s, gamma) == doctest::Approx(ex).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("small-tilt expansion constants") {
    CHECK(expansion_constant_a() == doctest::Approx(oracle::const_a).epsilon(1e-14));
    CHECK(expansion_constant_b() == doctest::Approx(oracle::const_b).epsilon(1e-14));
    // Leading behaviour they encode.
    CHECK(somersault_excess(1e-4) == doctest::Approx(pi * oracle::const_a * 1e-4).epsilon(1e-4));
    CHECK(t2_hat(1e-4, 19.0) ==
          doctest::Approx((oracle::const_b + 0.5) * pi / (19.0 * 1e-4)).epsilon(1e-4));
  }

  TEST_CASE("stage schedule identities") {
    for (double s : {0.08, 0.14, 0.3}) {
      const StageTimes st = stage_times(s, 19.0, 1.5, 2.0);
      const double period = 2.0 * pi / (19.0 * s);
      CHECK(st.That3 == doctest::Approx(period * 1.5).epsilon(1e-13));
      CHECK(st.phi3 == st.That3);  // twisting stage advances phi at unit mean rate
      CHECK(st.phi1 == st.That1);
      CHECK(st.That2 == doctest::Approx(t2_hat(s, 19.0)).epsilon(1e-13));
      CHECK(2.0 * st.That1 + 2.0 * st.phi2 + st.phi3 ==
            doctest::Approx(2.0 * pi * 1.5).epsilon(1e-13));
      CHECK(st.That_tot ==
            doctest::Approx(2.0 * pi * 1.5 + 2.0 * somersault_excess(s)).epsilon(1e-13));
    }
  }

  TEST_CASE("total time inversion") {
    double prev = 0.0;
    for (double target : {9.5, 10.0, 12.0}) {
      const double s = solve_tilt_for_ttot(target, 1.5);
      CHECK(2.0 * pi * 1.5 + 2.0 * somersault_excess(s) == doctest::Approx(target).epsilon(1e-13));
      CHECK(s > prev);
      prev = s;
    }
    CHECK_THROWS_AS(solve_tilt_for_ttot(2.0 * pi * 1.5, 1.5), std::domain_error);
    CHECK_THROWS_AS(solve_tilt_for_ttot(9.0, 1.5), std::domain_error);
  }

  TEST_CASE("smallest feasible tilt matches frozen references") {
    CHECK(min_tilt(1.5, 1.0, 19.0) == doctest::Approx(oracle::min_tilt_m32_n1).epsilon(1e-10));
    CHECK(min_tilt(1.5, 2.0, 19.0) == doctest::Approx(oracle::min_tilt_m32_n2).epsilon(1e-10));
    CHECK(min_tilt(1.5, 3.0, 19.0) == doctest::Approx(oracle::min_tilt_m32_n3).epsilon(1e-10));
    CHECK(min_tilt(1.5, 4.0, 19.0) == doctest::Approx(oracle::min_tilt_m32_n4).epsilon(1e-10));
    CHECK(min_tilt(1.5, 5.0, 19.0) == doctest::Approx(oracle::min_tilt_m32_n5).epsilon(1e-10));
    // At the minimum the stage-1 budget is exactly exhausted.
    const StageTimes st = stage_times(oracle::min_tilt_m32_n2, 19.0, 1.5, 2.0);
    CHECK(std::abs(st.That1) < 1e-9);
  }

  TEST_CASE("plan solves a feasible dive") {
    const DivePlan plan = plan_dive(make_request(1.5, 2.0, 1.5, 127.4));
    REQUIRE(plan.feasible);
    CHECK_FALSE(plan.general);
    CHECK(plan.reason.empty());
    CHECK(plan.warnings.empty());
    CHECK(plan.terminal_sign == 1);
    CHECK(plan.s == plan.s_minus);
    CHECK(plan.T_tot == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(plan.That_tot == doctest::Approx(127.4 * 1.5 / 20.0).epsilon(1e-12));
    CHECK(plan.T4 == plan.T2);
    CHECK(plan.T5 == plan.T1);
    CHECK(plan.T_tot ==
          doctest::Approx(2 * plan.T1 + 2 * plan.T2 + plan.T3).epsilon(1e-12));
    CHECK(plan.psi2 == doctest::Approx(pi / 2.0));
    CHECK(plan.psi3 == doctest::Approx(3.0 * pi));
    CHECK(plan.h == doctest::Approx(plan.rho * plan.l).epsilon(1e-14));
    CHECK(plan.rho == doctest::Approx(19.0 * plan.beta).epsilon(1e-14));
    CHECK(plan.phi1 + plan.phi2 + plan.phi3 + plan.phi2 + plan.phi1 ==
          doctest::Approx(2.0 * pi * 1.5).epsilon(1e-12));
    // Half-integer twist count flips the terminal somersault direction.
    CHECK(plan_dive(make_request(1.5, 1.5, 1.5, 127.4)).terminal_sign == -1);
  }

  TEST_CASE("plan solves the angular momentum from a fixed rotor") {
    const DivePlan ref = plan_dive(make_request(1.5, 2.0, 1.5, 127.4));
    DiveRequest req = make_request(1.5, 2.0, 1.5, 0.0);
    req.body.omega_d = ref.h / 2.0;
    req.body.I_d = 2.0;
    const DivePlan plan = plan_dive(req);
    REQUIRE(plan.feasible);
    CHECK(plan.l == doctest::Approx(127.4).epsilon(1e-9));
    CHECK(plan.s == doctest::Approx(ref.s).epsilon(1e-9));
    CHECK(plan.T_tot == doctest::Approx(1.5).epsilon(1e-10));
  }

  TEST_CASE("infeasible dives are reported, not thrown") {
    // Barely above the zero-tilt boundary: solvable tilt, but the twist stage
    // consumes more somersault than the budget allows.
    const DivePlan tight = plan_dive(make_request(1.5, 2.0, 1.5, 125.664));
    CHECK_FALSE(tight.feasible);
    CHECK(tight.reason.find("stage-1") != std::string::npos);
    CHECK(tight.That1 < 0.0);

    // Below the boundary: no tilt at all reaches the requested total.
    const DivePlan slow = plan_dive(make_request(1.5, 2.0, 1.5, 125.0));
    CHECK_FALSE(slow.feasible);
    CHECK_FALSE(slow.reason.empty());
  }

  TEST_CASE("implausible magnitudes warn but do not fail") {
    const DivePlan plan = plan_dive(make_request(1.5, 2.0, 0.5, 400.0));
    REQUIRE(plan.feasible);
    CHECK(plan.warnings.size() == 3);  // h, l, and flight time all out of range
  }

  TEST_CASE("malformed requests throw") {
    CHECK_THROWS_AS(plan_dive(make_request(0.3, 2.0, 1.5, 127.4)), std::invalid_argument);
    CHECK_THROWS_AS(plan_dive(make_request(1.5, 0.25, 1.5, 127.4)), std::invalid_argument);
    CHECK_THROWS_AS(plan_dive(make_request(1.5, 2.0, 0.0, 127.4)), std::invalid_argument);

    DiveRequest triaxial = make_request(1.5, 2.0, 1.5, 127.4);
    triaxial.body.I2 = 21.0;
    CHECK_THROWS_AS(plan_dive(triaxial), std::invalid_argument);

    DiveRequest both = make_request(1.5, 2.0, 1.5, 127.4);
    both.body.omega_d = 7.0;
    both.body.I_d = 2.0;
    CHECK_THROWS_AS(plan_dive(both), std::invalid_argument);

    DiveRequest neither = make_request(1.5, 2.0, 1.5, 0.0);
    CHECK_THROWS_AS(plan_dive(neither), std::invalid_argument);

    DiveRequest inverted = make_request(1.5, 2.0, 1.5, 127.4);
    inverted.body.I3 = 25.0;
    CHECK_THROWS_AS(plan_dive(inverted), std::invalid_argument);
  }
}
