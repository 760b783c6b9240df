#include <benchmark/benchmark.h>

#include "peaklab/idempotents.hpp"
#include "peaklab/param_series.hpp"
#include "peaklab/subspace.hpp"

using namespace peaklab;

namespace {

void BM_GroupAlgebraProductB(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  EulerianFamily fam = eulerian_B(n);
  const auto& a = fam.elements[0];
  const auto& b = fam.elements[1];
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(a.term_count()) *
                          static_cast<int64_t>(b.term_count()));
}
BENCHMARK(BM_GroupAlgebraProductB)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EulerianConstructionB(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_B(n));
}
BENCHMARK(BM_EulerianConstructionB)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_NormalFormProducts(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RingSpec spec{RingSpecKind::BVW, n};
  auto basis = standard_basis(spec);
  for (auto _ : state) {
    Polynomial p(Rat(1));
    for (size_t i = 0; i < basis.size(); i += basis.size() / 6 + 1)
      p = p * Polynomial::from_monomial(basis[i]);
    benchmark::DoNotOptimize(normal_form(p, spec));
  }
}
BENCHMARK(BM_NormalFormProducts)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_PairingBasis(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_basis(n));
}
BENCHMARK(BM_PairingBasis)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SchurExpansion(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto parts = partitions_of(n);
  for (auto _ : state)
    for (const auto& lam : parts)
      benchmark::DoNotOptimize(to_schur(L_lambda(lam)));
}
BENCHMARK(BM_SchurExpansion)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FixedPartCharacter(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RingSpec bu{RingSpecKind::BU, n};
  auto basis = flat_orbit_component(bu, Partition(std::vector<int>(n, 1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(fixed_part_character(basis, bu));
}
BENCHMARK(BM_FixedPartCharacter)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
