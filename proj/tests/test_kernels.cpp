#include <cmath>
#include <cstdlib>

#include "conductor_lab/generators.hpp"
#include "conductor_lab/kernels.hpp"
#include "doctest.h"

using namespace conductor_lab;

namespace {

std::vector<Complex> random_vector(TestRng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& x : v) x = rng.complex();
  return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("parallel kernels reproduce the serial references") {
    TestRng rng(1);
    const auto v = random_vector(rng, 243);
    const auto w = random_vector(rng, 243);
    CHECK(max_diff(kernels::cyclic_convolve<Complex>(w, v), kernels::cyclic_convolve_serial<Complex>(w, v)) == 0.0);
    const auto shells = random_vector(rng, 5);
    CHECK(max_diff(kernels::radial_convolve<Complex>(3, Complex(0.5), shells, v),
                   kernels::radial_convolve_serial<Complex>(3, Complex(0.5), shells, v)) == 0.0);
    CHECK(max_diff(kernels::dft(v, -1, 1.0), kernels::dft_serial(v, -1, 1.0)) < 1e-12);
    std::vector<double> tau(64), theta(17);
    for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = 0.1 * double(i);
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = -1.0 + 0.3 * double(i);
    const auto coeff = random_vector(rng, tau.size());
    CHECK(max_diff(kernels::phase_sum(tau, coeff, theta), kernels::phase_sum_serial(tau, coeff, theta)) == 0.0);
  }

  TEST_CASE("DFT of a delta") {
    std::vector<Complex> d(8);
    d[1] = 1.0;
    const auto out = kernels::dft(d, 1, 0.5);
    for (std::size_t m = 0; m < 8; ++m)
      CHECK(std::abs(out[m] - 0.5 * std::polar(1.0, 2.0 * M_PI * double(m) / 8.0)) < 1e-15);
  }

  TEST_CASE("thread cap from the environment") {
    setenv("CONDUCTOR_LAB_THREADS", "2", 1);
    CHECK(kernels::threads_from_env() == 2);
    setenv("CONDUCTOR_LAB_THREADS", "zero", 1);
    CHECK(kernels::threads_from_env() == 0);
    unsetenv("CONDUCTOR_LAB_THREADS");
    CHECK(kernels::threads_from_env() == 0);
  }
}
