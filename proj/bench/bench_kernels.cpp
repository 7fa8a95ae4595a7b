// Serial reference kernels against the OpenMP ones.
//   ./bench_kernels --benchmark_counters_tabular=true
// Set OMP_NUM_THREADS to vary the thread count of the parallel runs.

#include <vector>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "rosette/derived_curves.hpp"
#include "rosette/kernels.hpp"

using namespace rosette;

namespace {

// m = 3 with twelve harmonics: enough work per sample to show the split.
FourierSupport bench_curve() {
  std::vector<HarmonicTerm> terms;
  for (int n = 1; n <= 12; ++n) terms.push_back({n, 0.5 / n, -0.25 / n});
  return make_support(3, 10.0, terms);
}

template <auto Kernel>
void BM_sample(benchmark::State& state) {
  const FrontSupport h = base_front(bench_curve());
  std::vector<PlanePoint> out(static_cast<std::size_t>(state.range(0)));
  const double step = 2 * kPi * h.M / out.size();
  for (auto _ : state) {
    Kernel(h.view(), 0.0, step, out);
    benchmark::DoNotOptimize(out.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

template <auto Kernel>
void BM_polyline(benchmark::State& state) {
  const FrontSupport h = base_front(bench_curve());
  std::vector<PlanePoint> pts(static_cast<std::size_t>(state.range(0)) + 1);
  kernels::serial::sample_points(h.view(), 0.0, 2 * kPi * h.M / state.range(0), pts);
  pts.back() = pts.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(pts));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

constexpr auto serial_sample = [](SeriesView s, double t0, double step, std::span<PlanePoint> out) {
  kernels::serial::sample_points(s, t0, step, out);
};
constexpr auto omp_sample = [](SeriesView s, double t0, double step, std::span<PlanePoint> out) {
  kernels::sample_points(s, t0, step, out);
};
constexpr auto serial_sums = [](std::span<const PlanePoint> v) { return kernels::serial::polyline_sums(v); };
constexpr auto omp_sums = [](std::span<const PlanePoint> v) { return kernels::polyline_sums(v); };

}  // namespace

BENCHMARK(BM_sample<serial_sample>)->Name("sample_points/serial")->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_sample<omp_sample>)->Name("sample_points/openmp")->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->UseRealTime();
BENCHMARK(BM_polyline<serial_sums>)->Name("polyline_sums/serial")->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_polyline<omp_sums>)->Name("polyline_sums/openmp")->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->UseRealTime();

BENCHMARK_MAIN();
