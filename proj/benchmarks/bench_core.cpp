#include <benchmark/benchmark.h>

#include <cmath>

#include "rqmf/bessel.hpp"
#include "rqmf/geometry.hpp"
#include "rqmf/mathieu.hpp"
#include "rqmf/rqm.hpp"

using namespace rqmf;
using mathieu::Family;

namespace {

void BM_BesselJ_Series(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel::j(5, 7.3));
    }
}
BENCHMARK(BM_BesselJ_Series);

void BM_BesselJ_Miller(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel::j(5, 42.0));
    }
}
BENCHMARK(BM_BesselJ_Miller);

void BM_SolveMode(benchmark::State& state) {
    const double q0 = static_cast<double>(state.range(0));
    double bump = 0.0;
    for (auto _ : state) {
        // perturb q so the cache never hits; measures the full eigensolve
        bump += 1e-13;
        benchmark::DoNotOptimize(mathieu::solve_mode(Family::Plus, 4, q0 + bump));
    }
}
BENCHMARK(BM_SolveMode)->Arg(1)->Arg(10)->Arg(100);

void BM_AngularEval(benchmark::State& state) {
    const auto mode = mathieu::solve_mode(Family::Plus, 4, 10.0);
    double eta = 0.0;
    for (auto _ : state) {
        eta += 1e-4;
        benchmark::DoNotOptimize(mode.angular(eta));
    }
}
BENCHMARK(BM_AngularEval);

void BM_RadialFourier(benchmark::State& state) {
    const auto mode = mathieu::solve_mode(Family::Plus, 4, 10.0);
    double xi = 0.0;
    for (auto _ : state) {
        xi = std::fmod(xi + 1e-4, 1.5);
        benchmark::DoNotOptimize(mode.radial_fourier(xi));
    }
}
BENCHMARK(BM_RadialFourier);

void BM_RadialBessel(benchmark::State& state) {
    const auto mode = mathieu::solve_mode(Family::Plus, 4, 10.0);
    double xi = 0.0;
    for (auto _ : state) {
        xi = std::fmod(xi + 1e-4, 1.5);
        benchmark::DoNotOptimize(mode.radial_bessel(xi));
    }
}
BENCHMARK(BM_RadialBessel);

void BM_RqmEval(benchmark::State& state) {
    const auto M = rqm::RqmFunction::make(Family::Plus, 3, 2.0);
    double xi = 0.1;
    for (auto _ : state) {
        xi = 0.1 + std::fmod(xi, 1.0);
        benchmark::DoNotOptimize(M.eval({xi, 2.0 * xi}));
    }
}
BENCHMARK(BM_RqmEval);

void BM_FindQZeroColdScan(benchmark::State& state) {
    const double xi0 = geometry::xi_for_mu(0.7);
    double bump = 0.0;
    for (auto _ : state) {
        bump += 1e-12;  // fresh cache key each round
        benchmark::DoNotOptimize(mathieu::find_q_zero(Family::Plus, 1, 1, xi0 + bump));
    }
}
BENCHMARK(BM_FindQZeroColdScan)->Unit(benchmark::kMillisecond);

void BM_GramSmall(benchmark::State& state) {
    const auto modes = rqm::enumerate_modes(0.5, 1, 1);
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(0.5), 32, 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rqm::gram_matrix(modes, grid));
    }
}
BENCHMARK(BM_GramSmall)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
