#include <benchmark/benchmark.h>

#include "chronoscale/harness.hpp"

using namespace chronoscale;

namespace {

TimeScale scattered(std::size_t n) {
    SplitMix64 rng(17);
    std::vector<double> pts;
    pts.reserve(n);
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(t);
        t += rng.uniform(1e-3, 1.0);
    }
    return TimeScale::from_points(std::move(pts));
}

void BM_delta_integral(benchmark::State& state) {
    TimeScale ts = scattered(static_cast<std::size_t>(state.range(0)));
    GridFunction f = tabulate(ts, [](double x) { return x * x; });
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_integral(f, ts.min(), ts.max()));
}
BENCHMARK(BM_delta_integral)->Arg(100)->Arg(1000)->Arg(10000);

void BM_check_hypothesis(benchmark::State& state) {
    TimeScale ts = scattered(static_cast<std::size_t>(state.range(0)));
    TheoremCase c{TheoremId::Qi3_1, 3.5, ts.min(), ts.max()};
    WitnessSpec w;
    auto f = gen_witness(c, ts, w, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_hypothesis(c, *f));
}
BENCHMARK(BM_check_hypothesis)->Arg(100)->Arg(1000);

void BM_sweep_trial(benchmark::State& state) {
    ScaleSpec ss;
    ss.family = ScaleFamily::Mixed;
    WitnessSpec ws;
    SweepConfig cfg;
    cfg.trials = 1;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(sweep(TheoremId::Qi3_2, ss, ws, cfg));
    }
}
BENCHMARK(BM_sweep_trial);

}  // namespace

BENCHMARK_MAIN();
