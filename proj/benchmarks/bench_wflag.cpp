// Benchmarks for the three expensive engines: Weyl group closure, the
// alternating-sum Hilbert series evaluation, and the Groebner pipeline.

#include <benchmark/benchmark.h>

#include <wflag/catalog.hpp>
#include <wflag/ideals.hpp>
#include <wflag/lattice.hpp>
#include <wflag/series.hpp>

using namespace wflag;

namespace {

void BM_WeylClosure_C3(benchmark::State& state) {
  RootSystem rs = build_root_system(LieType::C, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl_group(rs));
  }
}
BENCHMARK(BM_WeylClosure_C3);

void BM_WeylClosure_D5(benchmark::State& state) {
  RootSystem rs = build_root_system(LieType::D, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl_group(rs));
  }
}
BENCHMARK(BM_WeylClosure_D5);

void BM_WeightSystem_E6(benchmark::State& state) {
  RootSystem rs = build_root_system(LieType::E6, 6);
  const RationalVector& lambda = catalog_entry("e6").lambda;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weight_system(rs, lambda));
  }
}
BENCHMARK(BM_WeightSystem_E6);

void BM_Hilbert_LGr36_Weighted(benchmark::State& state) {
  const CatalogEntry& entry = catalog_entry("lgr36");
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_weighted(entry, {1, 0, 0}, 2));
  }
}
BENCHMARK(BM_Hilbert_LGr36_Weighted);

void BM_Hilbert_FL13_Weighted(benchmark::State& state) {
  const CatalogEntry& entry = catalog_entry("fl13");
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_weighted(entry, {0, 1, 1, 1}, -1));
  }
}
BENCHMARK(BM_Hilbert_FL13_Weighted);

void BM_Hilbert_E6_Straight(benchmark::State& state) {
  const CatalogEntry& entry = catalog_entry("e6");
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_weighted(entry, {0, 0, 0, 0, 0, 0}, 1));
  }
}
BENCHMARK(BM_Hilbert_E6_Straight);

void BM_Groebner_LGr36(benchmark::State& state) {
  const IdealData& ideal = defining_ideal("lgr36");
  MonomialOrder order{ideal.gradings.at("straight"), OrderKind::WGrevlex};
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(ideal.generators, order));
  }
}
BENCHMARK(BM_Groebner_LGr36);

void BM_QuotientSeries_FL13(benchmark::State& state) {
  const IdealData& ideal = defining_ideal("fl13");
  const std::vector<long>& w = ideal.gradings.at("mu0011_u0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_hilbert_series(ideal.generators, w));
  }
}
BENCHMARK(BM_QuotientSeries_FL13);

}  // namespace

BENCHMARK_MAIN();
