// Microbenchmarks for the planning hot paths: the elliptic primitives, the
// closed forms against their defining quadratures, and full plan solves.

#include <benchmark/benchmark.h>

#include "twistdive/defining_integrals.hpp"
#include "twistdive/elliptic.hpp"
#include "twistdive/gen_planner.hpp"
#include "twistdive/simulator.hpp"
#include "twistdive/sym_planner.hpp"

namespace {

using namespace twistdive;

void bm_ellip_k(benchmark::State& state) {
    double m = 0.0;
    for (auto _ : state) {
        m = m < 0.9 ? m + 1e-4 : 0.0;
        benchmark::DoNotOptimize(ellip_k(m));
    }
}
BENCHMARK(bm_ellip_k);

void bm_ellip_pi(benchmark::State& state) {
    double n = -5.0;
    for (auto _ : state) {
        n = n < 0.9 ? n + 1e-4 : -5.0;
        benchmark::DoNotOptimize(ellip_pi(n, 0.5));
    }
}
BENCHMARK(bm_ellip_pi);

void bm_t2_closed(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(t2_hat(0.14, 19.0));
}
BENCHMARK(bm_t2_closed);

void bm_t2_quadrature(benchmark::State& state) {
    IntegralParams p;
    p.s = 0.14;
    p.gamma = 19.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            quad_defining_integral(DefiningIntegral::transit_time_symmetric, p).value);
}
BENCHMARK(bm_t2_quadrature);

void bm_phi2_general_closed(benchmark::State& state) {
    DimensionlessParams d;
    d.delta = -0.4;
    d.gamma = 19.0;
    d.nu = d.delta / d.gamma;
    TiltBand band = band_from_s_minus(0.1, d);
    for (auto _ : state) benchmark::DoNotOptimize(phi2_general(band, d));
}
BENCHMARK(bm_phi2_general_closed);

void bm_phi2_general_quadrature(benchmark::State& state) {
    DimensionlessParams d;
    d.delta = -0.4;
    d.gamma = 19.0;
    d.nu = d.delta / d.gamma;
    TiltBand band = band_from_s_minus(0.1, d);
    IntegralParams p;
    p.gamma = d.gamma;
    p.delta = d.delta;
    p.rho_hat = rho_hat_for_band(band, d.gamma);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            quad_defining_integral(DefiningIntegral::tilde_somersault_general, p).value);
}
BENCHMARK(bm_phi2_general_quadrature);

DiveRequest sym_request() {
    DiveRequest req;
    req.m = 1.5;
    req.n = 2.0;
    req.T_tot = 1.5;
    req.body = {20.0, 20.0, 1.0, 127.4, 0.0, 0.0};
    return req;
}

void bm_plan_dive(benchmark::State& state) {
    DiveRequest req = sym_request();
    for (auto _ : state) benchmark::DoNotOptimize(plan_dive(req));
}
BENCHMARK(bm_plan_dive);

void bm_plan_dive_general(benchmark::State& state) {
    DiveRequest req = sym_request();
    req.body.I2 = 200.0 / 9.0;
    req.body.l = 130.9;
    for (auto _ : state) benchmark::DoNotOptimize(plan_dive_general(req));
}
BENCHMARK(bm_plan_dive_general);

void bm_simulate_plan(benchmark::State& state) {
    DiveRequest req = sym_request();
    DivePlan plan = plan_dive(req);
    DimensionlessParams shape;
    shape.gamma = req.body.I1 / req.body.I3 - 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_plan(plan, shape).phi_error);
}
BENCHMARK(bm_simulate_plan);

}  // namespace

BENCHMARK_MAIN();
