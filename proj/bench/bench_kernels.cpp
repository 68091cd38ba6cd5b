#include <benchmark/benchmark.h>

#include <omp.h>

#include "drivencp/constants.hpp"
#include "drivencp/figures.hpp"
#include "drivencp/kernels.hpp"
#include "drivencp/potentials.hpp"
#include "drivencp/verify.hpp"

using namespace dcp;

namespace {

const AtomParams kNa(3.71e-29, 3.24e15);
constexpr double kOmegaL = 3.24e15 + 2.0 * constants::pi * 1e8;

PointFn u0_curve() {
  return [](double z) { return u0_u1(kNa, kOmegaL, z).u0; };
}

void BM_U0Curve_Serial(benchmark::State& st) {
  const auto zs = log_space(3e-8, 3e-6, static_cast<std::size_t>(st.range(0)));
  const auto f = u0_curve();
  for (auto _ : st) benchmark::DoNotOptimize(map_grid_serial(zs, f));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_U0Curve_Parallel(benchmark::State& st) {
  const auto zs = log_space(3e-8, 3e-6, static_cast<std::size_t>(st.range(0)));
  const auto f = u0_curve();
  for (auto _ : st) benchmark::DoNotOptimize(map_grid_parallel(zs, f));
  st.SetItemsProcessed(st.iterations() * st.range(0));
  st.counters["threads"] = max_threads();
}

void BM_Riemann_Serial(benchmark::State& st) {
  const auto w = DipoleWeights::x_third(kNa.d);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        oracle_nonresonant_riemann(1e-7, kOmegaL, w, static_cast<std::size_t>(st.range(0)), false));
}

void BM_Riemann_Parallel(benchmark::State& st) {
  const auto w = DipoleWeights::x_third(kNa.d);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        oracle_nonresonant_riemann(1e-7, kOmegaL, w, static_cast<std::size_t>(st.range(0)), true));
  st.counters["threads"] = max_threads();
}

void BM_Figure(benchmark::State& st) {
  FigureParams p;
  p.parallel = st.range(1) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(figure_curves(static_cast<int>(st.range(0)), p));
}

} // namespace

BENCHMARK(BM_U0Curve_Serial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_U0Curve_Parallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Riemann_Serial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Riemann_Parallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Figure)->ArgsProduct({{1, 3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  apply_thread_cap();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
