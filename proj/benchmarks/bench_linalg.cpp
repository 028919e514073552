#include <benchmark/benchmark.h>

#include <random>

#include "fpd/bricks.hpp"
#include "fpd/family.hpp"
#include "fpd/matrix.hpp"

namespace {

void BM_RationalRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> entry(-9, 9);
  fpd::RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = fpd::Rational(entry(rng));
  for (auto _ : state) benchmark::DoNotOptimize(fpd::rank(m));
}
BENCHMARK(BM_RationalRank)->Arg(8)->Arg(16)->Arg(32);

void BM_HomMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = fpd::generate_family({fpd::FamilyKind::D, n, std::vector<std::size_t>(n, 1)});
  const auto bricks = fpd::enumerate_bricks_thin(spec).bricks;
  for (auto _ : state) benchmark::DoNotOptimize(fpd::hom_matrix(spec, bricks));
}
BENCHMARK(BM_HomMatrix)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExtMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = fpd::generate_family({fpd::FamilyKind::A, n, std::vector<std::size_t>(n, 2)});
  const auto bricks = fpd::enumerate_bricks_thin(spec).bricks;
  for (auto _ : state) benchmark::DoNotOptimize(fpd::ext_matrix(spec, bricks));
}
BENCHMARK(BM_ExtMatrix)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
