#include <benchmark/benchmark.h>

#include "offswitch/offswitch.hpp"

using namespace offswitch;

static void BM_RationalClosedForm(benchmark::State& state) {
    double mu = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_rational_gaussian(mu, 0.7).delta);
        mu = mu > 2.0 ? -2.0 : mu + 1e-3;
    }
}
BENCHMARK(BM_RationalClosedForm);

static void BM_Decomposition(benchmark::State& state) {
    const HumanPolicy policy = HumanPolicy::boltzmann(static_cast<double>(state.range(0)) / 100.0);
    for (auto _ : state) benchmark::DoNotOptimize(delta_decomposition(1.0, 0.5, policy).delta);
}
// beta = 0.05 takes the split Legendre path, beta = 1 the Hermite one.
BENCHMARK(BM_Decomposition)->Arg(5)->Arg(100);

static void BM_QuadratureDelta(benchmark::State& state) {
    const Belief belief = Belief::gaussian(0.3, 1.2);
    const HumanPolicy policy = HumanPolicy::rational();
    for (auto _ : state) benchmark::DoNotOptimize(delta(belief, policy).delta);
}
BENCHMARK(BM_QuadratureDelta);

static void BM_MonteCarlo(benchmark::State& state) {
    const Belief belief = Belief::gaussian(0.0, 1.0);
    const HumanPolicy policy = HumanPolicy::boltzmann(0.5);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(delta_monte_carlo(belief, policy, n, 1, 1).delta);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_BoltzmannSweep(benchmark::State& state) {
    const SweepGrid grid = default_boltzmann_grid(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(grid, 1).size());
    state.SetItemsProcessed(state.iterations() * 3600);
}
BENCHMARK(BM_BoltzmannSweep)->Unit(benchmark::kMillisecond);

static void BM_DesignerTrials(benchmark::State& state) {
    DesignerScenario s;
    s.assumed_noise_grid = {0.5, 1.0, 2.0};
    s.n_actions = static_cast<std::size_t>(state.range(0));
    s.n_trials = 20000;
    s.human = HumanPolicy::boltzmann(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(simulate(s, 1).rows.size());
    state.SetItemsProcessed(state.iterations() * 20000 * 3);
}
BENCHMARK(BM_DesignerTrials)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
