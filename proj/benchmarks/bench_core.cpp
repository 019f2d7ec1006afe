#include <ldist/experiments.hpp>

#include <benchmark/benchmark.h>

using namespace ldist;

namespace {

void BM_MoebiusApply(benchmark::State& state) {
    const MoebiusMap g = MoebiusMap::disk_to_half_plane();
    const ExtendedComplex z(Complex(0.3, 0.4));
    for (auto _ : state) benchmark::DoNotOptimize(g(z));
}
BENCHMARK(BM_MoebiusApply);

void BM_MoebiusComposeChain(benchmark::State& state) {
    const MoebiusMap g = MoebiusMap::disk_to_half_plane();
    const MoebiusMap g1 = MoebiusMap::disk_to_half_plane(std::polar(1.0, 0.8));
    for (auto _ : state) {
        MoebiusMap t = MoebiusMap::identity();
        for (int i = 0; i < state.range(0); ++i) t = compose(t, i % 2 ? g : g1.inverse());
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_MoebiusComposeChain)->Arg(8)->Arg(64);

void BM_ImageCircle(benchmark::State& state) {
    const MoebiusMap g = MoebiusMap::disk_to_half_plane();
    const GeneralizedCircle carrier = symmetric_geodesic_disk(0.8).carrier;
    for (auto _ : state) benchmark::DoNotOptimize(image_circle(g, carrier));
}
BENCHMARK(BM_ImageCircle);

void BM_ArcLengthDiameter(benchmark::State& state) {
    const AnalyticMap k = AnalyticMap::kp(0.5);
    const ParamCurve curve = diameter_I();
    const double rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(arc_length(k, curve, rel_tol));
}
BENCHMARK(BM_ArcLengthDiameter)->Arg(6)->Arg(10)->Arg(12);

void BM_ArcLengthF0Semicircle(benchmark::State& state) {
    const AnalyticMap f = AnalyticMap::f0();
    const ParamCurve curve = upper_semicircle();
    for (auto _ : state) benchmark::DoNotOptimize(arc_length(f, curve));
}
BENCHMARK(BM_ArcLengthF0Semicircle);

void BM_HarmonicMeasure(benchmark::State& state) {
    const HalfPlaneSeg seg{1.0, 3.7};
    const Complex z(0.4, 1.3);
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_measure_segment(z, seg));
}
BENCHMARK(BM_HarmonicMeasure);

void BM_MinimizeDistortionBound(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(minimize_distortion_bound(0.9));
}
BENCHMARK(BM_MinimizeDistortionBound);

void BM_Table1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reproduce_table1());
}
BENCHMARK(BM_Table1);

} // namespace

BENCHMARK_MAIN();
