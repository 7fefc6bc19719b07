#include <benchmark/benchmark.h>

#include "nicholson/analysis.hpp"
#include "nicholson/sampling.hpp"

namespace {

using nicholson::Curve;
using nicholson::Exec;
using nicholson::Family;

void run(benchmark::State& state, Family family, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  const auto ts = nicholson::principal_grid(n, 0.1).points();
  const auto f = nicholson::curve_fn(family, Curve::exact, n);
  for (auto _ : state) {
    auto v = nicholson::sample(f, ts, exec);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ts.size()));
}

void BM_BesselSerial(benchmark::State& s) { run(s, Family::bessel, Exec::serial); }
void BM_BesselParallel(benchmark::State& s) { run(s, Family::bessel, Exec::parallel); }
void BM_LommelSerial(benchmark::State& s) { run(s, Family::lommel, Exec::serial); }
void BM_LommelParallel(benchmark::State& s) { run(s, Family::lommel, Exec::parallel); }

}  // namespace

BENCHMARK(BM_BesselSerial)->Arg(20)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BesselParallel)->Arg(20)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LommelSerial)->Arg(20)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LommelParallel)->Arg(20)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
