#include <benchmark/benchmark.h>

#include "fpd/bricks.hpp"
#include "fpd/fpd.hpp"

namespace {

void BM_FamilyA(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fpd::FamilySpec f{fpd::FamilyKind::A, n, std::vector<std::size_t>(n, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(fpd::compute_family_fpd(f));
}
BENCHMARK(BM_FamilyA)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FamilyE(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fpd::FamilySpec f{fpd::FamilyKind::E, n, std::vector<std::size_t>(n, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(fpd::compute_family_fpd(f));
}
BENCHMARK(BM_FamilyE)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Qnm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fpd::FamilySpec f{fpd::FamilyKind::Qnm, 0, {n, n + 1}};
  for (auto _ : state) benchmark::DoNotOptimize(fpd::compute_family_fpd(f));
}
BENCHMARK(BM_Qnm)->Arg(1)->Arg(4)->Arg(8);

void BM_OracleD4(benchmark::State& state) {
  const auto spec = fpd::generate_family({fpd::FamilyKind::D, 4, {0, 0, 0, 0}});
  const auto q = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpd::enumerate_bricks_oracle(spec, 6, q));
}
BENCHMARK(BM_OracleD4)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
