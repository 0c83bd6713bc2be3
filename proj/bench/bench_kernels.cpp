// Serial reference vs OpenMP for the hot kernels. Arg 0 = serial, 1 = parallel.
#include "mvcrys/acceptance.hpp"
#include "mvcrys/looplab.hpp"
#include "mvcrys/trails.hpp"

#include <benchmark/benchmark.h>

using namespace mvcrys;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_expand_frontier(benchmark::State& st) {
    auto d = RootDatum::build(Series::A, 3);
    auto cr = enumerate_LS(make_type(d, {Rational(2), Rational(2), Rational(2)}));
    for (auto _ : st) benchmark::DoNotOptimize(expand_frontier(cr.galleries, exec_of(st)));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(cr.galleries.size()));
}

void BM_enumerate_LS(benchmark::State& st) {
    auto d = RootDatum::build(Series::B, 2);
    auto t = make_type(d, {Rational(4), Rational(3)});
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_LS(t, 1000000, exec_of(st)));
}

void BM_compare_cones(benchmark::State& st) {
    auto rows = string_cone_inequalities(4, {2, 1, 3, 2, 1, 3}).rows;
    auto listed = listed_a3_relations();
    for (auto _ : st) benchmark::DoNotOptimize(compare_cones(rows, listed, 6, -4, 4, exec_of(st)));
}

void BM_string_cone(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(string_cone_inequalities(5, {1, 2, 1, 3, 2, 1, 4, 3, 2, 1}, exec_of(st)));
}

void BM_sample_ytilde(benchmark::State& st) {
    auto d = RootDatum::build(Series::A, 3);
    for (auto _ : st) benchmark::DoNotOptimize(sample_ytilde(d, {2, 1, 3, 2, 1, 3}, {1, 2, 1, 1, 0, 1}, 16, 7, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_expand_frontier)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_LS)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compare_cones)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_string_cone)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_ytilde)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
