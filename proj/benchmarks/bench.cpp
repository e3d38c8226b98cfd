#include <benchmark/benchmark.h>

#include <random>

#include "cyclominus/dirichlet.hpp"
#include "cyclominus/hminus.hpp"
#include "cyclominus/rayclass.hpp"

using namespace cyclominus;

static void BM_HMinusPrime23(benchmark::State& state) {
  const FieldSpec spec = FieldSpec::cyclotomic(23);
  for (auto _ : state) benchmark::DoNotOptimize(h_minus(spec).value);
}
BENCHMARK(BM_HMinusPrime23);

static void BM_HMinusComposite155(benchmark::State& state) {
  const FieldSpec spec = FieldSpec::cyclotomic(155);
  for (auto _ : state) benchmark::DoNotOptimize(h_minus(spec).value);
}
BENCHMARK(BM_HMinusComposite155);

static void BM_MailletDeterminant43(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maillet_h_minus(43));
}
BENCHMARK(BM_MailletDeterminant43);

static void BM_SmithNormalForm8x8(benchmark::State& state) {
  std::mt19937 rng(20260818);
  std::uniform_int_distribution<int> entry(-99, 99);
  IntMatrix m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m.at(i, j) = entry(rng);
  for (auto _ : state) {
    auto s = smith_normal_form(m, true, true);
    benchmark::DoNotOptimize(s.rank);
  }
}
BENCHMARK(BM_SmithNormalForm8x8);

static void BM_RayClassGroup197sq(benchmark::State& state) {
  const auto& base = quadratic_base("gaussian");
  for (auto _ : state) {
    RayClassGroup rcg(split_ring(base, 197, 2));
    benchmark::DoNotOptimize(rcg.order());
  }
}
BENCHMARK(BM_RayClassGroup197sq);

static void BM_CharacterGroup155(benchmark::State& state) {
  const FieldSpec spec = FieldSpec::cyclotomic(155);
  for (auto _ : state) benchmark::DoNotOptimize(characters_of(spec).size());
}
BENCHMARK(BM_CharacterGroup155);

BENCHMARK_MAIN();
