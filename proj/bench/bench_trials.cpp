#include <benchmark/benchmark.h>

#include "cdm/axioms.hpp"
#include "cdm/theory.hpp"

using namespace cdm;

namespace {

template <class Theory>
void run_all(benchmark::State& state, const Theory& t, Execution exec) {
  DiffCategory<Theory> cat(t);
  auto bounds = default_bounds(t);
  auto threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto reports = run_suite(cat, all_axioms(), 42, 200, bounds, exec, threads);
    benchmark::DoNotOptimize(reports);
  }
  state.SetItemsProcessed(state.iterations() * 200 * all_axioms().size());
}

void BM_PowerSerial(benchmark::State& s) {
  run_all(s, PowerSeriesTheory::series(FieldSpec::rationals(), 4), Execution::Serial);
}
void BM_PowerParallel(benchmark::State& s) {
  run_all(s, PowerSeriesTheory::series(FieldSpec::rationals(), 4), Execution::Parallel);
}
void BM_DividedSerial(benchmark::State& s) {
  run_all(s, DividedPowerTheory(FieldSpec::prime(3)), Execution::Serial);
}
void BM_DividedParallel(benchmark::State& s) {
  run_all(s, DividedPowerTheory(FieldSpec::prime(3)), Execution::Parallel);
}
void BM_ZinbielSerial(benchmark::State& s) {
  run_all(s, ZinbielTheory(FieldSpec::rationals()), Execution::Serial);
}
void BM_ZinbielParallel(benchmark::State& s) {
  run_all(s, ZinbielTheory(FieldSpec::rationals()), Execution::Parallel);
}

}  // namespace

BENCHMARK(BM_PowerSerial)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PowerParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DividedSerial)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DividedParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ZinbielSerial)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ZinbielParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
