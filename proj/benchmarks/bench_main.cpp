#include <benchmark/benchmark.h>

#include <complex>
#include <cstdint>

#include "pinchperf/analytics.hpp"
#include "pinchperf/model.hpp"
#include "pinchperf/oracles.hpp"
#include "pinchperf/placement.hpp"
#include "pinchperf/rng.hpp"
#include "pinchperf/specfun.hpp"

namespace {

using namespace pinchperf;

// Mid-regime operating point: every outage branch term is live and the rate
// bracket exercises both dilog paths.
Deployment reference_deployment(double gamma_t_db, double alpha, double d_x) {
    Deployment dep;
    dep.alpha = alpha;
    dep.d_x = d_x;
    dep.p_t = p_t_for_gamma_t_db(gamma_t_db, dep.sigma2);
    return dep;
}

void BM_outage_closed_form(benchmark::State& state) {
    const Deployment dep = reference_deployment(95.0, 0.01, 10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(outage_lossy(dep, 100.0).probability);
    }
}
BENCHMARK(BM_outage_closed_form);

void BM_rate_closed_form(benchmark::State& state) {
    const Deployment dep = reference_deployment(100.0, 0.01, 10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avg_rate_lossy(dep).rate);
    }
}
BENCHMARK(BM_rate_closed_form);

void BM_outage_quadrature(benchmark::State& state) {
    const Deployment dep = reference_deployment(95.0, 0.01, 10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(outage_quadrature(dep, 100.0).probability);
    }
}
BENCHMARK(BM_outage_quadrature);

void BM_placement_solver(benchmark::State& state) {
    const Deployment dep = reference_deployment(95.0, 0.1, 30.0);
    const UserPosition user{25.0, 4.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_position(dep, user).x_star);
    }
}
BENCHMARK(BM_placement_solver);

void BM_dilog(benchmark::State& state) {
    // Arguments straddle the series, Landen and inversion regions.
    const double xs[4] = {0.3, 0.72, -3.7, -40.0};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dilog(xs[i & 3]));
        ++i;
    }
}
BENCHMARK(BM_dilog);

void BM_im_dilog(benchmark::State& state) {
    const std::complex<double> zs[2] = {{-0.3, 0.7}, {-23.5, -39.2}};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(im_dilog(zs[i & 1]));
        ++i;
    }
}
BENCHMARK(BM_im_dilog);

void BM_philox_uniform_pair(benchmark::State& state) {
    std::uint64_t index = 0;
    double u = 0.0;
    double v = 0.0;
    for (auto _ : state) {
        uniform_pair(2024, 0, index++, u, v);
        benchmark::DoNotOptimize(u);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 2);
}
BENCHMARK(BM_philox_uniform_pair);

void BM_mc_outage(benchmark::State& state) {
    const Deployment dep = reference_deployment(95.0, 0.01, 10.0);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            simulate_outage(dep, 100.0, Strategy::pinch_at_user, n, 17, 1).value);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            state.range(0));
}
BENCHMARK(BM_mc_outage)->Arg(1 << 14)->Arg(1 << 18);

}  // namespace

BENCHMARK_MAIN();
