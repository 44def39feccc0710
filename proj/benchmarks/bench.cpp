#include <benchmark/benchmark.h>

#include "flatpants/development.hpp"
#include "flatpants/metric_graph.hpp"
#include "flatpants/params.hpp"
#include "flatpants/teich.hpp"

using namespace flatpants;

namespace {

const LengthRadiusParams kPants = {{1.2, 1.0, 0.9}, {0.7, 1.1, 0.5}};

void BM_validate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(validate_lr(kPants));
}
BENCHMARK(BM_validate);

void BM_convert_round_trip(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(la_to_lr(lr_to_la(kPants)));
}
BENCHMARK(BM_convert_round_trip);

void BM_classify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify(kPants));
}
BENCHMARK(BM_classify);

void BM_build(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build(kPants));
}
BENCHMARK(BM_build);

void BM_cone_angle(benchmark::State& state) {
    const Development d = build(kPants);
    for (auto _ : state) benchmark::DoNotOptimize(cone_angle(d));
}
BENCHMARK(BM_cone_angle);

void BM_build_graph(benchmark::State& state) {
    const Development d = build(kPants);
    const double h = default_resolution(kPants) * static_cast<double>(state.range(0));
    for (auto _ : state) {
        const MetricGraph g = build_graph(d, h);
        benchmark::DoNotOptimize(g.nodes.size());
        state.counters["nodes"] = static_cast<double>(g.nodes.size());
    }
}
BENCHMARK(BM_build_graph)->Arg(1)->Arg(2)->Arg(4);

void BM_shortest_paths(benchmark::State& state) {
    const Development d = build(kPants);
    const MetricGraph g = build_graph(d, default_resolution(kPants));
    for (auto _ : state) benchmark::DoNotOptimize(shortest_paths(g, g.singularity));
}
BENCHMARK(BM_shortest_paths);

void BM_membership(benchmark::State& state) {
    const TeichPoint x = TeichPoint::of(lr_to_la(kPants));
    for (auto _ : state) benchmark::DoNotOptimize(membership(x));
}
BENCHMARK(BM_membership);

}  // namespace

BENCHMARK_MAIN();
