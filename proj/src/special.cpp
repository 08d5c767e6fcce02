#include "conductor_lab/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conductor_lab::special {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;
// B_2 .. B_16
constexpr std::array<double, 8> kBernoulli = {1.0 / 6,  -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                               5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};
constexpr double kShift = 16.0;

}  // namespace

double distance_to_pole(C z) {
  const double n = std::min(0.0, std::round(z.real()));
  return std::abs(z - C(n, 0.0));
}

C lgamma(C z) {
  if (distance_to_pole(z) == 0.0) throw std::domain_error("lgamma: pole");
  if (z.real() < 0.5 && std::abs(z.imag()) < kShift) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - lgamma(1.0 - z);
  }
  C shift_sum{};
  while (std::abs(z) < kShift || z.real() < 0.5) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  const C inv = 1.0 / z;
  const C inv2 = inv * inv;
  C series{};
  C power = inv;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double n = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / (n * (n - 1.0)) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift_sum;
}

C digamma(C z) {
  if (distance_to_pole(z) == 0.0) throw std::domain_error("digamma: pole");
  if (z.real() < 0.5 && std::abs(z.imag()) < kShift) {
    // psi(1 - z) - psi(z) = pi cot(pi z)
    return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  }
  C shift_sum{};
  while (std::abs(z) < kShift || z.real() < 0.5) {
    shift_sum += 1.0 / z;
    z += 1.0;
  }
  const C inv = 1.0 / z;
  const C inv2 = inv * inv;
  C series{};
  C power = inv2;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double n = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / n * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 * inv - series - shift_sum;
}

C log_gamma_r(C s) { return -0.5 * s * std::log(kPi) + lgamma(0.5 * s); }

}  // namespace conductor_lab::special
