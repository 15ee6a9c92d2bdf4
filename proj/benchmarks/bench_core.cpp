#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include <lemwedge/farfield.hpp>

using namespace lemwedge;

namespace {

WedgeConfig bench_cfg() {
    WedgeConfig cfg;
    cfg.theta_i = 1.9;
    cfg.eps = 0.1;
    return cfg;
}

}  // namespace

static void WpEvaluation(benchmark::State& state) {
    const cplx u(0.83, 1.21);
    for (auto _ : state) benchmark::DoNotOptimize(wp(u));
}
BENCHMARK(WpEvaluation);

static void ZetaEvaluation(benchmark::State& state) {
    const cplx u(0.83, 1.21);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_w(u));
}
BENCHMARK(ZetaEvaluation);

static void InvertWp(benchmark::State& state) {
    const cplx x(1.7, 0.4);
    const cplx y_half = std::sqrt(x * x * x - x);
    for (auto _ : state) benchmark::DoNotOptimize(invert_wp(x, y_half));
}
BENCHMARK(InvertWp);

static void SpectralLift(benchmark::State& state) {
    const SpectralPoint z{cplx(0.77, 0.4)};
    for (auto _ : state) benchmark::DoNotOptimize(u_of_zeta(z));
}
BENCHMARK(SpectralLift);

static void Assemble(benchmark::State& state) {
    const WedgeConfig cfg = bench_cfg();
    for (auto _ : state) benchmark::DoNotOptimize(assemble(cfg));
}
BENCHMARK(Assemble);

static void ScatteredDensity(benchmark::State& state) {
    const SpectralSolution sol = assemble(bench_cfg());
    const cplx u(0.83, 1.21);
    for (auto _ : state) benchmark::DoNotOptimize(Q_scat_u(u, sol));
}
BENCHMARK(ScatteredDensity);

static void ScatteredDensityZeta(benchmark::State& state) {
    const SpectralSolution sol = assemble(bench_cfg());
    const cplx zeta(0.77, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(Q_scat_zeta(zeta, sol));
}
BENCHMARK(ScatteredDensityZeta);

static void DiffractionCoefficient(benchmark::State& state) {
    WedgeConfig cfg;
    cfg.theta_i = 1.9;
    for (auto _ : state) benchmark::DoNotOptimize(D_coefficient(2.027, cfg));
}
BENCHMARK(DiffractionCoefficient);

static void FarFieldSweep(benchmark::State& state) {
    WedgeConfig cfg;
    cfg.theta_i = 1.9;
    std::vector<double> grid;
    for (int k = 0; k < state.range(0); ++k)
        grid.push_back(0.3 + 1.2 * k / (double)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(farfield_sweep(grid, cfg));
}
BENCHMARK(FarFieldSweep)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
