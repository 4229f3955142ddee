#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "nfftlab/error_analysis.hpp"
#include "nfftlab/fft.hpp"
#include "nfftlab/nfft.hpp"
#include "nfftlab/window.hpp"

using namespace nfftlab;

// Full transform at fixed N; the spreading stage should scale linearly in M.
static void BM_NfftTransform(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  const auto p = WindowParams::make(4, 2.0, 256);
  const NfftPlan plan(Window(WindowKind::Sinh, p), random_nodes(M, 1));
  const auto c = random_coefficients(p.N, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nfft_transform(plan, c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(M));
}
BENCHMARK(BM_NfftTransform)->RangeMultiplier(2)->Range(1 << 10, 1 << 16);

static void BM_NdftDirect(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  const auto nodes = random_nodes(M, 1);
  const auto c = random_coefficients(256, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ndft_direct(c, nodes));
}
BENCHMARK(BM_NdftDirect)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

static void BM_Fft(benchmark::State& state) {
  std::vector<Complex> x(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = {double(i % 7), double(i % 3)};
  for (auto _ : state) {
    auto y = x;
    fft_inplace(y, false);
    benchmark::DoNotOptimize(y.data());
  }
}
// Powers of two take the radix-2 path, the others Bluestein.
BENCHMARK(BM_Fft)->Arg(1024)->Arg(4096)->Arg(65536)->Arg(1000)->Arg(5120)->Arg(80000);

static void BM_WindowTransform(benchmark::State& state) {
  const auto kind = static_cast<WindowKind>(state.range(0));
  const auto p = WindowParams::make(4, 2.0, 128);
  const Window w(kind, p);
  double v = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.ft(v));
    v = v < 300.0 ? v + 1.37 : 0.0;
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_WindowTransform)->DenseRange(0, 6);

static void BM_ErrorConstant(benchmark::State& state) {
  const auto kind = static_cast<WindowKind>(state.range(0));
  const Window w(kind, WindowParams::make(4, 2.0, 128));
  for (auto _ : state) benchmark::DoNotOptimize(error_constant(w).value);
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_ErrorConstant)->Arg(1)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
