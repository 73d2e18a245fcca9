#include <benchmark/benchmark.h>

#include "fuzzhyper/chains.hpp"
#include "fuzzhyper/dynamics.hpp"
#include "fuzzhyper/instances.hpp"
#include "fuzzhyper/shadowing.hpp"

using namespace fuzzhyper;

namespace {

System line_system(int n) {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> dist(static_cast<size_t>(n),
                                            std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dist[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            Rational(std::abs(i - j), 2);
    auto space = std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(dist));
    std::vector<int> image;
    for (int i = 0; i < n; ++i) image.push_back(i / 2);
    return System(std::move(space), std::move(image));
}

void BM_hausdorff(benchmark::State& state) {
    System sys = line_system(static_cast<int>(state.range(0)));
    Mask full = sys.space->full_mask();
    Mask a = full & 0x5555555555555555ULL;
    Mask b = full & 0x3333333333333333ULL;
    for (auto _ : state) benchmark::DoNotOptimize(hausdorff(*sys.space, a, b));
}
BENCHMARK(BM_hausdorff)->Arg(8)->Arg(16);

void BM_skorokhod(benchmark::State& state) {
    System sys = line_system(6);
    StepFuzzySet u = StepFuzzySet::from_memberships(
        sys.space, {Rational(1), Rational(3, 4), Rational(1, 2), Rational(1, 4), Rational(1, 8),
                    Rational(0)});
    StepFuzzySet v = StepFuzzySet::from_memberships(
        sys.space, {Rational(1, 3), Rational(1), Rational(2, 3), Rational(0), Rational(1, 2),
                    Rational(1, 6)});
    for (auto _ : state) benchmark::DoNotOptimize(d_skorokhod(u, v));
}
BENCHMARK(BM_skorokhod);

void BM_endograph(benchmark::State& state) {
    System sys = line_system(12);
    std::vector<Rational> mu, mv;
    for (int i = 0; i < 12; ++i) {
        mu.emplace_back(i % 4, 4);
        mv.emplace_back((i + 2) % 5, 5);
    }
    mu[0] = Rational(1);
    mv[0] = Rational(1);
    StepFuzzySet u = StepFuzzySet::from_memberships(sys.space, mu);
    StepFuzzySet v = StepFuzzySet::from_memberships(sys.space, mv);
    for (auto _ : state) benchmark::DoNotOptimize(d_end(u, v));
}
BENCHMARK(BM_endograph);

void BM_hyper_extend(benchmark::State& state) {
    System sys = line_system(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hyper_extend(sys).sys.size());
}
BENCHMARK(BM_hyper_extend)->Arg(6)->Arg(8);

void BM_fuzzy_grid(benchmark::State& state) {
    System tail = make_triadic_tail(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(fuzzy_grid(tail, static_cast<int>(state.range(0)),
                                            MetricKind::Endograph)
                                     .sys.size());
}
BENCHMARK(BM_fuzzy_grid)->Arg(2)->Arg(3);

void BM_tracker(benchmark::State& state) {
    FuzzyGridSystem grid = fuzzy_grid(make_triadic_tail(3), 2, MetricKind::Endograph);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            all_chains_shadowed(grid.sys, Rational(1, 12), Rational(1, 3)).shadowed);
}
BENCHMARK(BM_tracker);

void BM_endograph_chain(benchmark::State& state) {
    System cycle = make_cycle(6);
    StepFuzzySet u = StepFuzzySet::chi(cycle.space, 0b000001);
    StepFuzzySet v = StepFuzzySet::chi(cycle.space, 0b001000);
    for (auto _ : state)
        benchmark::DoNotOptimize(endograph_chain(cycle, u, v, Rational(1, 5), 12).length());
}
BENCHMARK(BM_endograph_chain);

}  // namespace

BENCHMARK_MAIN();
