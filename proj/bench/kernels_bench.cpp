// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare
// thread counts; on a single core the two should be close.

#include <benchmark/benchmark.h>

#include "hat/families.hpp"
#include "hat/group_table.hpp"
#include "hat/perm_group.hpp"

namespace {

hat::PermGroup full_group(int r) { return hat::build_pair({hat::Family::X, r, hat::Orientation::Full}).group; }

void BM_TableSerial(benchmark::State& state) {
  const auto g = full_group(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(hat::GroupTable::build_serial(g));
  state.SetLabel("|G| = " + std::to_string(g.order()));
}

void BM_TableParallel(benchmark::State& state) {
  const auto g = full_group(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(hat::GroupTable(g));
  state.SetLabel("|G| = " + std::to_string(g.order()));
}

void BM_SubgroupsSerial(benchmark::State& state) {
  const auto g = full_group(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(hat::all_subgroups_serial(g));
}

void BM_SubgroupsParallel(benchmark::State& state) {
  const auto g = full_group(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(hat::all_subgroups(g));
}

}  // namespace

BENCHMARK(BM_TableSerial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubgroupsSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubgroupsParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
