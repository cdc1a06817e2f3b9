#include <benchmark/benchmark.h>

#include <random>

#include "hullforge/families.hpp"
#include "hullforge/falinalg.hpp"
#include "hullforge/hull.hpp"
#include "hullforge/tables.hpp"

using namespace hullforge;

namespace {

std::vector<Element> random_elements(const Field& F, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(F.from_code(rng() % F.q()));
  return out;
}

void BM_FieldMul(benchmark::State& state) {
  auto F = Field::create(state.range(0), static_cast<unsigned>(state.range(1)));
  const auto xs = random_elements(*F, 1024, 1);
  Element acc = F->one();
  for (auto _ : state) {
    for (const auto& x : xs) acc = F->mul(acc, x.code == 0 ? F->one() : x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Args({2, 6})->Args({3, 4})->Args({5, 8})->Args({2, 24});

void BM_FieldAdd(benchmark::State& state) {
  auto F = Field::create(state.range(0), static_cast<unsigned>(state.range(1)));
  const auto xs = random_elements(*F, 1024, 2);
  Element acc = F->zero();
  for (auto _ : state) {
    for (const auto& x : xs) acc = F->add(acc, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldAdd)->Args({2, 6})->Args({3, 4})->Args({5, 8});

void BM_Rref(benchmark::State& state) {
  auto F = Field::create(3, 4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto xs = random_elements(*F, n * n, 3);
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, xs[i * n + j]);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(64)->Arg(128);

void BM_HullCompute(benchmark::State& state) {
  auto F = Field::create(2, 6);
  const auto c = construct(F, FamilyRequest{Family::T1a, 2, 6, 2, 63, static_cast<std::size_t>(state.range(0)), 1});
  const auto code = grs_generator(c.spec);
  for (auto _ : state) benchmark::DoNotOptimize(hull_compute(code, F->level(2)));
}
BENCHMARK(BM_HullCompute)->Arg(4)->Arg(10);

void BM_Construct(benchmark::State& state) {
  auto F = Field::create(3, 4);
  const FamilyRequest req{Family::T3n1, 3, 4, 1, std::nullopt, 20, 6, 160, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(construct(F, req));
}
BENCHMARK(BM_Construct);

void BM_ReproduceTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_table(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_ReproduceTable)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
