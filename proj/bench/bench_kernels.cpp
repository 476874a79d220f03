// Serial against OpenMP execution of the three parallel kernels.

#include <benchmark/benchmark.h>

#include "chowq/tropres.hpp"

using namespace chowq;

namespace {

const VectorConfig& config() {
    static const VectorConfig cfg =
        VectorConfig::from_q(IntMat{{-3, 3, -3, 3, -2, 2, -1, 1}, {1, 1, 1, 1, 1, 1, 1, 1}});
    return cfg;
}

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_ChamberSearch(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(gkz_fan_bruteforce(config(), {true, mode(s)}));
}

void BM_CommonRefinement(benchmark::State& s) {
    static const Fan sigma = gkz_fan_bruteforce(config(), {true, Exec::Serial});
    static const TropicalSetup setup = [] {
        NewtonOptions o;
        o.compute_sigma = false;
        return newton_setup(quadric_normal_form(7), config().p, o);
    }();
    static const Fan lifted = lifted_tropical_fan(setup);
    for (auto _ : s) benchmark::DoNotOptimize(common_refinement(sigma, lifted, mode(s)));
}

void BM_FanValidation(benchmark::State& s) {
    static const Fan sigma = gkz_fan_bruteforce(config(), {true, Exec::Serial});
    for (auto _ : s) benchmark::DoNotOptimize(sigma.is_valid(mode(s)));
}

}  // namespace

BENCHMARK(BM_ChamberSearch)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommonRefinement)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FanValidation)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
