#include "conductor_lab/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include <omp.h>

namespace conductor_lab::kernels {

namespace {

std::vector<Complex> roots_of_unity(std::int64_t n, int sign) {
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    roots[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
  }
  return roots;
}

}  // namespace

std::vector<Complex> dft_serial(std::span<const Complex> in, int sign, double scale) {
  const auto n = static_cast<std::int64_t>(in.size());
  const auto roots = roots_of_unity(n, sign);
  std::vector<Complex> out(in.size());
  for (std::int64_t m = 0; m < n; ++m) {
    Complex acc{};
    std::int64_t idx = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      acc += in[static_cast<std::size_t>(k)] * roots[static_cast<std::size_t>(idx)];
      idx += m;
      if (idx >= n) idx -= n;
    }
    out[static_cast<std::size_t>(m)] = acc * scale;
  }
  return out;
}

std::vector<Complex> dft(std::span<const Complex> in, int sign, double scale) {
  const auto n = static_cast<std::int64_t>(in.size());
  const auto roots = roots_of_unity(n, sign);
  std::vector<Complex> out(in.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < n; ++m) {
    Complex acc{};
    std::int64_t idx = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      acc += in[static_cast<std::size_t>(k)] * roots[static_cast<std::size_t>(idx)];
      idx += m;
      if (idx >= n) idx -= n;
    }
    out[static_cast<std::size_t>(m)] = acc * scale;
  }
  return out;
}

std::vector<Complex> phase_sum_serial(std::span<const double> tau, std::span<const Complex> coeff,
                                      std::span<const double> theta) {
  std::vector<Complex> out(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    Complex acc{};
    for (std::size_t k = 0; k < tau.size(); ++k) {
      const double a = -tau[k] * theta[j];
      acc += coeff[k] * Complex{std::cos(a), std::sin(a)};
    }
    out[j] = acc;
  }
  return out;
}

std::vector<Complex> phase_sum(std::span<const double> tau, std::span<const Complex> coeff,
                               std::span<const double> theta) {
  std::vector<Complex> out(theta.size());
  const auto nj = static_cast<std::int64_t>(theta.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < nj; ++j) {
    Complex acc{};
    const double th = theta[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < tau.size(); ++k) {
      const double a = -tau[k] * th;
      acc += coeff[k] * Complex{std::cos(a), std::sin(a)};
    }
    out[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

int threads_from_env() {
  const char* env = std::getenv("CONDUCTOR_LAB_THREADS");
  if (env == nullptr) return 0;
  try {
    const int n = std::stoi(env);
    return n > 0 ? n : 0;
  } catch (...) {
    return 0;
  }
}

void configure_threads() {
  if (const int n = threads_from_env(); n > 0) omp_set_num_threads(n);
}

}  // namespace conductor_lab::kernels
