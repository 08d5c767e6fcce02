#include <cmath>
#include <numbers>

#include "conductor_lab/gamma_lambda.hpp"
#include "conductor_lab/oracles.hpp"
#include "conductor_lab/special.hpp"
#include "doctest.h"

using namespace conductor_lab;
using C = std::complex<double>;

namespace {

// Reference values from a 30-digit evaluation of
//   Gamma(even, s) = pi^{1/2 - s} Gamma(s/2) / Gamma((1 - s)/2)
//   Gamma(odd, s)  = -i pi^{1/2 - s} Gamma((s + 1)/2) / Gamma((2 - s)/2)
// at s = 0.3 + 1.2i, and Lambda at s = 1/2: psi(1/4) - log pi, psi(3/4) - log pi.
const C kGammaEven(-0.995990889265490615825569652095, 1.01145135703220797082976913198);
const C kGammaOdd(-0.931978460733475090595438774055, 1.01988388383404276070319532345);
constexpr double kLambdaEvenHalf = 5.37218341922566558223295749745;
constexpr double kLambdaOddHalf = 2.23059076563587234377031411417;

// Oracle output at s = 0.3 + 0.7i, y = 1, frozen.
const C kOracle5c1(-0.72044799663068526, -0.07912171024178917);
const C kOracle3c2(-0.4301447957428261, -0.47981152678303646);
const C kOracle2c3(0.075827301573723985, 0.65538195121937093);

}  // namespace

TEST_SUITE("gamma-lambda") {
  TEST_CASE("real place against frozen references") {
    const C s(0.3, 1.2);
    CHECK(std::abs(gamma_real(RealCharacter(false), s) - kGammaEven) < 1e-12);
    CHECK(std::abs(gamma_real(RealCharacter(true), s) - kGammaOdd) < 1e-12);
    CHECK(std::abs(lambda_real(RealCharacter(false), 0.5) - kLambdaEvenHalf) < 1e-12);
    CHECK(std::abs(lambda_real(RealCharacter(true), 0.5) - kLambdaOddHalf) < 1e-12);
  }

  TEST_CASE("real oracle against frozen references") {
    const C s(0.3, 1.2);
    CHECK(std::abs(oracle::gamma_real(RealCharacter(false), s) - kGammaEven) < 1e-10);
    CHECK(std::abs(oracle::gamma_real(RealCharacter(true), s) - kGammaOdd) < 1e-10);
    CHECK(std::abs(oracle::lambda_real(RealCharacter(false), 0.5) - kLambdaEvenHalf) < 1e-6);
    CHECK_THROWS_AS(oracle::gamma_real(RealCharacter(false), C(1.2, 0.0)), std::invalid_argument);
  }

  TEST_CASE("finite place against the frozen oracle") {
    const C s(0.3, 0.7);
    CHECK(std::abs(gamma_finite(FiniteCharacter::with_conductor(5, 1)[0], s) - kOracle5c1) < 1e-12);
    CHECK(std::abs(gamma_finite(FiniteCharacter::with_conductor(3, 2)[0], s) - kOracle3c2) < 1e-12);
    CHECK(std::abs(gamma_finite(FiniteCharacter::with_conductor(2, 3)[0], s) - kOracle2c3) < 1e-12);
  }

  TEST_CASE("trivial character at s = 1/2") {
    for (int p : {2, 3, 5}) CHECK(std::abs(gamma_finite(FiniteCharacter::unramified(p), 0.5) - 1.0) < 1e-14);
    CHECK(std::abs(gamma_real(RealCharacter(false), 0.5) - 1.0) < 1e-14);
  }

  TEST_CASE("ramified Lambda is the constant -c log p") {
    for (const auto& chi : FiniteCharacter::with_conductor(2, 3))
      for (C s : {C(0.5), C(0.1, 3.0), C(2.0, -1.0)}) CHECK(std::abs(lambda_finite(chi, s) + 3.0 * std::log(2.0)) < 1e-13);
    CHECK(lambda_ramified_parametric(2, 0, 3) == ExactScalar::log_p(2, -3));
    CHECK(lambda_ramified_parametric(9, 2, 1) == ExactScalar::log_p(9, -3));
  }

  TEST_CASE("Gauss sums have modulus p^{c/2}") {
    for (int p : {3, 5})
      for (int c = 1; c <= 2; ++c)
        for (const auto& chi : FiniteCharacter::with_conductor(p, c))
          CHECK(std::abs(std::abs(gauss_sum(chi)) - std::pow(p, c / 2.0)) < 1e-12);
  }

  TEST_CASE("poles raise PoleError") {
    const auto one = FiniteCharacter::unramified(3);
    CHECK_THROWS_AS(gamma_finite(one, 0.0), PoleError);
    CHECK_THROWS_AS(gamma_finite(one, C(0.0, 2.0 * std::numbers::pi / std::log(3.0))), PoleError);
    CHECK_THROWS_AS(lambda_finite(one, 1.0), PoleError);
    CHECK_THROWS_AS(gamma_real(RealCharacter(false), 0.0), PoleError);
    CHECK_THROWS_AS(gamma_real(RealCharacter(true), -1.0), PoleError);
    CHECK_NOTHROW(gamma_finite(one, 1e-6));
  }

  TEST_CASE("special functions") {
    CHECK(std::abs(special::lgamma(C(5.0)) - std::log(24.0)) < 1e-13);
    CHECK(std::abs(special::digamma(C(1.0)) + 0.57721566490153286) < 1e-13);
    CHECK(std::abs(special::digamma(C(0.25)) - (-4.2274535333762654)) < 1e-12);
    CHECK(special::distance_to_pole(C(-2.0 + 1e-9)) < 1e-8);
  }
}
