// Parallel kernels against their serial references.
//
//   ./ptcurves_bench --benchmark_filter=FiberRoots

#include <map>

#include <benchmark/benchmark.h>

#include "ptcurves/distribution_stats.hpp"
#include "ptcurves/moment_model.hpp"
#include "ptcurves/random_inputs.hpp"

using namespace ptcurves;

namespace {

const PlaneCurve& elliptic(u64 p) {
    static std::map<u64, PlaneCurve> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, PlaneCurve::parse(PrimeModulus(p), "y^2 - x^3 - x")).first;
    return it->second;
}

void BM_FiberRoots(benchmark::State& state) {
    const auto& c = elliptic(static_cast<u64>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(compute_fiber_roots(c, threads));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FiberRoots)->ArgsProduct({{1009, 10007, 100003}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_FiberRootsSerial(benchmark::State& state) {
    const auto& c = elliptic(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_fiber_roots_serial(c));
}
BENCHMARK(BM_FiberRootsSerial)->Arg(1009)->Arg(4001)->Unit(benchmark::kMillisecond);

void BM_MomentSweep(benchmark::State& state) {
    const u64 p = 100003;
    static const CurveIndex idx(PlaneCurve::parse(PrimeModulus(p), "x*y - 1"));
    const MomentSpec spec{4, static_cast<u64>(state.range(0)), CyclicInterval(p, 0, (p + 1) / 2)};
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(empirical_moment(idx, spec, threads));
}
BENCHMARK(BM_MomentSweep)->ArgsProduct({{11, 200}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_MomentNaive(benchmark::State& state) {
    const u64 p = 10007;
    static const CurveIndex idx(PlaneCurve::parse(PrimeModulus(p), "x*y - 1"));
    const MomentSpec spec{4, static_cast<u64>(state.range(0)), CyclicInterval(p, 0, (p + 1) / 2)};
    for (auto _ : state) benchmark::DoNotOptimize(empirical_moment_naive(idx, spec));
}
BENCHMARK(BM_MomentNaive)->Arg(11)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Histogram(benchmark::State& state) {
    const u64 p = 100003;
    static const CurveIndex idx(PlaneCurve::parse(PrimeModulus(p), "x*y - 1"));
    const CyclicInterval j(p, 0, (p + 1) / 2);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(box_count_histogram(idx, 11, j, threads));
}
BENCHMARK(BM_Histogram)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Patterns(benchmark::State& state) {
    const u64 p = 10007;
    PrimeModulus m(p);
    static const CurveIndex idx(PlaneCurve::parse(PrimeModulus(10007), "y^2 - x^3 - x"));
    SeededRng rng(1);
    const auto spec = random_pattern_spec(rng, m, 3);
    const auto full = CyclicInterval::full(p);
    const CyclicInterval j(p, 0, (p + 1) / 2);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(idx.count_patterns(spec, full, j, threads));
}
BENCHMARK(BM_Patterns)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_ShiftedCurvePoints(benchmark::State& state) {
    const u64 p = 1009;
    PrimeModulus m(p);
    const auto& c = elliptic(p);
    SeededRng rng(1);
    const auto sc = build_shifted_curve(c, random_pattern_spec(rng, m, 2));
    const auto full = CyclicInterval::full(p);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_shifted_points(sc, full, full, threads));
}
BENCHMARK(BM_ShiftedCurvePoints)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
