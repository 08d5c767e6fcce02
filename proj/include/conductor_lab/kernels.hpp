#pragma once

// Data-parallel inner loops. Each kernel has a plain serial version kept as
// the reference for tests and benchmarks; the unsuffixed version is the
// OpenMP one. Both accumulate every output in the same order, so results are
// bitwise identical regardless of thread count.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "conductor_lab/scalar.hpp"

namespace conductor_lab::kernels {

/// out[m] = sum_n w[n] * v[(m - n) mod N]
template <class S>
std::vector<S> cyclic_convolve_serial(std::span<const S> w, std::span<const S> v) {
  const auto n = static_cast<std::int64_t>(v.size());
  std::vector<S> out(v.size(), ScalarTraits<S>::zero());
  for (std::int64_t m = 0; m < n; ++m) {
    S acc = ScalarTraits<S>::zero();
    for (std::int64_t k = 0; k < n; ++k) {
      const S& vk = v[static_cast<std::size_t>(k)];
      if (ScalarTraits<S>::is_zero(vk)) continue;
      std::int64_t idx = m - k;
      if (idx < 0) idx += n;
      acc += w[static_cast<std::size_t>(idx)] * vk;
    }
    out[static_cast<std::size_t>(m)] = acc;
  }
  return out;
}

template <class S>
std::vector<S> cyclic_convolve(std::span<const S> w, std::span<const S> v) {
  const auto n = static_cast<std::int64_t>(v.size());
  std::vector<S> out(v.size(), ScalarTraits<S>::zero());
  // sparse inputs (shell indicators) only touch a few columns
  std::vector<std::int64_t> support;
  for (std::int64_t k = 0; k < n; ++k)
    if (!ScalarTraits<S>::is_zero(v[static_cast<std::size_t>(k)])) support.push_back(k);
  const auto ns = static_cast<std::int64_t>(support.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < n; ++m) {
    S acc = ScalarTraits<S>::zero();
    for (std::int64_t j = 0; j < ns; ++j) {
      const std::int64_t k = support[static_cast<std::size_t>(j)];
      std::int64_t idx = m - k;
      if (idx < 0) idx += n;
      acc += w[static_cast<std::size_t>(idx)] * v[static_cast<std::size_t>(k)];
    }
    out[static_cast<std::size_t>(m)] = acc;
  }
  return out;
}

/// Convolution with a kernel that depends only on v_p of the index:
///   out[m] = w0 * v[m] + sum_{n != 0} W[v_p(n)] * v[(m - n) mod p^D].
/// Indices with v_p(n) = j are the class 0 mod p^j minus the class 0 mod
/// p^{j+1}, so partial sums over residue classes give O(N D) work.
template <class S>
std::vector<std::vector<S>> residue_class_sums(int p, int depth, std::span<const S> v) {
  std::vector<std::vector<S>> sums(static_cast<std::size_t>(depth) + 1);
  sums[static_cast<std::size_t>(depth)].assign(v.begin(), v.end());
  std::int64_t width = static_cast<std::int64_t>(v.size());
  for (int j = depth - 1; j >= 0; --j) {
    width /= p;
    const auto& finer = sums[static_cast<std::size_t>(j) + 1];
    std::vector<S> coarse(static_cast<std::size_t>(width), ScalarTraits<S>::zero());
    for (std::int64_t r = 0; r < width; ++r)
      for (int i = 0; i < p; ++i) coarse[static_cast<std::size_t>(r)] += finer[static_cast<std::size_t>(r + i * width)];
    sums[static_cast<std::size_t>(j)] = std::move(coarse);
  }
  return sums;
}

template <class S>
S radial_convolve_at(const std::vector<std::vector<S>>& sums, const S& w0, std::span<const S> w,
                     std::int64_t m, int p) {
  const int depth = static_cast<int>(w.size());
  S acc = w0 * sums[static_cast<std::size_t>(depth)][static_cast<std::size_t>(m)];
  std::int64_t mod_j = 1;
  for (int j = 0; j < depth; ++j) {
    const std::int64_t mod_next = mod_j * p;
    const S shell = sums[static_cast<std::size_t>(j)][static_cast<std::size_t>(m % mod_j)] -
                    sums[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(m % mod_next)];
    if (!ScalarTraits<S>::is_zero(shell)) acc += w[static_cast<std::size_t>(j)] * shell;
    mod_j = mod_next;
  }
  return acc;
}

template <class S>
std::vector<S> radial_convolve_serial(int p, const S& w0, std::span<const S> w, std::span<const S> v) {
  const int depth = static_cast<int>(w.size());
  const auto sums = residue_class_sums(p, depth, v);
  std::vector<S> out(v.size());
  for (std::int64_t m = 0; m < static_cast<std::int64_t>(v.size()); ++m)
    out[static_cast<std::size_t>(m)] = radial_convolve_at(sums, w0, w, m, p);
  return out;
}

template <class S>
std::vector<S> radial_convolve(int p, const S& w0, std::span<const S> w, std::span<const S> v) {
  const int depth = static_cast<int>(w.size());
  const auto sums = residue_class_sums(p, depth, v);
  std::vector<S> out(v.size());
  const auto n = static_cast<std::int64_t>(v.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < n; ++m) out[static_cast<std::size_t>(m)] = radial_convolve_at(sums, w0, w, m, p);
  return out;
}

/// out[m] = scale * sum_n in[n] * exp(sign * 2 pi i n m / N)
std::vector<Complex> dft_serial(std::span<const Complex> in, int sign, double scale);
std::vector<Complex> dft(std::span<const Complex> in, int sign, double scale);

/// out[j] = sum_k coeff[k] * exp(-i * tau[k] * theta[j])
std::vector<Complex> phase_sum_serial(std::span<const double> tau, std::span<const Complex> coeff,
                                      std::span<const double> theta);
std::vector<Complex> phase_sum(std::span<const double> tau, std::span<const Complex> coeff,
                               std::span<const double> theta);

/// Thread cap from CONDUCTOR_LAB_THREADS (0 when unset or invalid).
int threads_from_env();
/// Apply the environment cap, if any, to the OpenMP runtime.
void configure_threads();

}  // namespace conductor_lab::kernels
