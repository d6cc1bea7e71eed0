#include <benchmark/benchmark.h>

#include "qfact/criteria.hpp"
#include "qfact/kernels.hpp"

using namespace qfact;

static void grid_serial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::classify_grid_serial(n, default_tolerances()));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(n * n * n));
}
static void grid_parallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::classify_grid_parallel(n, default_tolerances()));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(n * n * n));
}
BENCHMARK(grid_serial)->Arg(41)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(grid_parallel)->Arg(41)->Arg(101)->Unit(benchmark::kMillisecond);

static ComplexMatrix witness_matrix() {
  Rng rng(1);
  return random_hermitian(6, rng);
}

static void product_min_serial(benchmark::State& st) {
  const ComplexMatrix e = witness_matrix();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::min_product_expectation_serial(e, {2, 3}, 10000, 0));
}
static void product_min_parallel(benchmark::State& st) {
  const ComplexMatrix e = witness_matrix();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::min_product_expectation_parallel(e, {2, 3}, 10000, 0));
}
BENCHMARK(product_min_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(product_min_parallel)->Unit(benchmark::kMillisecond);

static void survival_serial(benchmark::State& st) {
  const DensityMatrix rho = paper_state(PaperMatrix::RhoV);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::ppt_survival_serial(rho, 1000, 0));
}
static void survival_parallel(benchmark::State& st) {
  const DensityMatrix rho = paper_state(PaperMatrix::RhoV);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::ppt_survival_parallel(rho, 1000, 0));
}
BENCHMARK(survival_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(survival_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
