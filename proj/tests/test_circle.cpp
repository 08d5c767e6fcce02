#include <cmath>
#include <numbers>

#include "conductor_lab/circle.hpp"
#include "conductor_lab/gamma_lambda.hpp"
#include "doctest.h"

using namespace conductor_lab;

TEST_SUITE("circle-model") {
  TEST_CASE("multiplier at z = 1 and z = -1") {
    for (int p : {2, 3, 5}) {
      const double lp = std::log(double(p)), r = std::sqrt(double(p));
      CHECK(std::abs(multiplier_m(p, 0.0) + 2 * lp / (r - 1)) < 1e-13);
      CHECK(std::abs(multiplier_m(p, std::numbers::pi) - 2 * lp / (r + 1)) < 1e-13);
    }
  }

  TEST_CASE("bridge to Lambda at s = 1/2 + i tau") {
    for (int p : {2, 3, 5})
      for (double tau : {-2.3, 0.0, 0.4, 1.9}) {
        const double m = multiplier_m(p, tau * std::log(double(p)));
        CHECK(std::abs(m + lambda_finite(FiniteCharacter::unramified(p), {0.5, tau}).real()) < 1e-12);
      }
  }

  TEST_CASE("support interval endpoints") {
    for (int p : {2, 3, 5}) {
      const SupportInterval s = spectrum_support(p);
      const double lp = std::log(double(p)), r = std::sqrt(double(p));
      CHECK(std::abs(s.lo + 2 * lp * (1 + r) / (p - 1)) < 1e-12);
      CHECK(std::abs(s.hi + 2 * lp * (1 - r) / (p - 1)) < 1e-12);
    }
  }

  TEST_CASE("eta_i maps to z^i and H matches the Toeplitz symbol") {
    const int p = 3;
    const ExactFunction theta = make_theta(p, 2);
    const LaurentVector v = radial_to_laurent(theta);
    for (int i = v.lo(); i <= v.hi(); ++i) CHECK(std::abs(v[i] - (i == 2 ? std::sqrt(6.0) : 0.0)) < 1e-14);
    CHECK(std::abs(v.norm() - norm(theta)) < 1e-14);
    const LaurentVector e0(p, 0, {1.0});
    const LaurentVector h = apply_H_circle(e0);
    CHECK(std::abs(h[0]) < 1e-15);
    CHECK(std::abs(h[1] + std::log(3.0) / std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(h[-2] + std::log(3.0) / 3.0) < 1e-15);
  }

  TEST_CASE("small Toeplitz truncations stay in the support") {
    for (int p : {2, 3, 5}) {
      const SpectrumReport r = toeplitz_spectrum(p, 16);
      CHECK(r.eigenvalues.size() == 33);
      CHECK(r.max_outside <= 1e-12);
      CHECK(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end()));
    }
    CHECK_THROWS_AS(toeplitz_spectrum(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz_spectrum(2, kMaxToeplitzN + 1), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz_spectrum(6, 8), std::invalid_argument);
  }

  TEST_CASE("Laurent cutoff") {
    for (int p : {2, 3, 5}) {
      const int K = toeplitz_tail_cutoff(p);
      const double r = 1.0 / std::sqrt(double(p));
      const double dropped = std::log(double(p)) * std::pow(r, K + 1) / (1.0 - r);
      CHECK(dropped < kLaurentTailCutoff);
      CHECK(dropped * std::pow(r, -1.0) >= kLaurentTailCutoff);
    }
  }
}
