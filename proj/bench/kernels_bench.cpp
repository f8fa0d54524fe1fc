// Serial reference against OpenMP variant for each parallel kernel.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "minuscule/families.hpp"
#include "minuscule/kernels.hpp"
#include "minuscule/oracles.hpp"
#include "minuscule/totalpos.hpp"

namespace {

using namespace minuscule;

std::vector<Rat> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000), den(1, 9999);
  std::vector<Rat> v(n);
  for (auto& x : v) {
    x = Rat(num(gen), den(gen));
    x.canonicalize();
  }
  return v;
}

template <std::vector<Rat> (*Kernel)(std::span<const Rat>, std::span<const Rat>)>
void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}
BENCHMARK(BM_Convolve<kernels::convolve_reference>)->Name("convolve/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_Convolve<kernels::convolve_parallel>)->Name("convolve/openmp")->RangeMultiplier(2)->Range(16, 256);

template <Certificate (*Check)(const ExactMatrix&, std::size_t)>
void BM_Minors(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto m = families::coeffN_matrix(size);
  for (auto _ : state) benchmark::DoNotOptimize(Check(m, size));
}
BENCHMARK(BM_Minors<totalpos::minors_all_TP_reference>)->Name("minors/serial")->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Minors<totalpos::minors_all_TP>)->Name("minors/openmp")->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

template <Rat (*Enumerate)(long, const Rat&, const Rat&, const Rat&, const Rat&)>
void BM_Powerset(benchmark::State& state) {
  const Rat a(1), b(2), c(3), d(5);
  for (auto _ : state) benchmark::DoNotOptimize(Enumerate(state.range(0), a, b, c, d));
}
BENCHMARK(BM_Powerset<oracles::powerset_refined_gf_reference>)->Name("powerset/serial")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Powerset<oracles::powerset_refined_gf>)->Name("powerset/openmp")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
