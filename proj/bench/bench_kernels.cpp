// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "conductor_lab/generators.hpp"
#include "conductor_lab/kernels.hpp"

using namespace conductor_lab;

namespace {

std::vector<Complex> random_vector(std::size_t n, std::uint64_t seed) {
  TestRng rng(seed);
  std::vector<Complex> v(n);
  for (auto& x : v) x = rng.complex();
  return v;
}

template <bool Parallel>
void BM_CyclicConvolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto v = random_vector(n, 1), w = random_vector(n, 2);
  for (auto _ : state) {
    auto out = Parallel ? kernels::cyclic_convolve<Complex>(w, v) : kernels::cyclic_convolve_serial<Complex>(w, v);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_RadialConvolve(benchmark::State& state) {
  const int p = 3;
  const int depth = static_cast<int>(state.range(0));
  const auto v = random_vector(static_cast<std::size_t>(ipow(p, depth)), 3);
  const auto w = random_vector(static_cast<std::size_t>(depth), 4);
  for (auto _ : state) {
    auto out = Parallel ? kernels::radial_convolve<Complex>(p, Complex(0.5), w, v)
                        : kernels::radial_convolve_serial<Complex>(p, Complex(0.5), w, v);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_Dft(benchmark::State& state) {
  const auto v = random_vector(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    auto out = Parallel ? kernels::dft(v, -1, 1.0) : kernels::dft_serial(v, -1, 1.0);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_PhaseSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> tau(n), theta(64);
  for (std::size_t i = 0; i < n; ++i) tau[i] = -3.0 + 6.0 * double(i) / double(n);
  for (std::size_t j = 0; j < theta.size(); ++j) theta[j] = 0.1 * double(j);
  const auto coeff = random_vector(n, 6);
  for (auto _ : state) {
    auto out = Parallel ? kernels::phase_sum(tau, coeff, theta) : kernels::phase_sum_serial(tau, coeff, theta);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_CyclicConvolve<false>)->Arg(243)->Arg(729);
BENCHMARK(BM_CyclicConvolve<true>)->Arg(243)->Arg(729);
BENCHMARK(BM_RadialConvolve<false>)->Arg(6)->Arg(8);
BENCHMARK(BM_RadialConvolve<true>)->Arg(6)->Arg(8);
BENCHMARK(BM_Dft<false>)->Arg(625)->Arg(3125);
BENCHMARK(BM_Dft<true>)->Arg(625)->Arg(3125);
BENCHMARK(BM_PhaseSum<false>)->Arg(1024)->Arg(4096);
BENCHMARK(BM_PhaseSum<true>)->Arg(1024)->Arg(4096);

BENCHMARK_MAIN();
