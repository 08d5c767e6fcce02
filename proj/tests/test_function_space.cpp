#include <cmath>

#include "conductor_lab/function_space.hpp"
#include "conductor_lab/generators.hpp"
#include "doctest.h"

using namespace conductor_lab;

TEST_SUITE("function-space") {
  TEST_CASE("coset enumeration") {
    // level (3, 1, 1): n != 0 is 3^{-1} n + 3 Z_3
    const Level lv{3, 1, 1};
    CHECK(lv.dim() == 9);
    CHECK(lv.coset_valuation(1) == -1);
    CHECK(lv.coset_valuation(3) == 0);
    CHECK(lv.coset_measure() == Rational(1, 3));
    const FloatFunction f(lv);
    CHECK(f.coset_index(PAdicPoint::from_unit(3, -1, 2, 4)) == 2);
    CHECK(f.coset_index(PAdicPoint::from_unit(3, 0, 2, 4)) == 6);
    CHECK(f.coset_index(PAdicPoint::from_unit(3, 1, 1, 4)) == 0);
    CHECK(f.coset_index(PAdicPoint::from_unit(3, -2, 1, 4)) == -1);
  }

  TEST_CASE("level validation") {
    CHECK_THROWS_AS(FloatFunction(Level{4, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FloatFunction(Level{3, -2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FloatFunction(Level{3, 0, 1}, {1.0, 2.0}), std::invalid_argument);
  }

  TEST_CASE("zero function is legal everywhere") {
    const FloatFunction z = FloatFunction::zero(5);
    CHECK(fourier(z).is_zero());
    CHECK(invert(z).is_zero());
    CHECK(norm(z) == 0.0);
    CHECK(unit_average(z).is_zero());
  }

  TEST_CASE("Fourier of theta and of the unit ball") {
    for (int p : {2, 3, 5}) {
      const ExactFunction ball = indicator_ball(p, PAdicPoint::zero(p), 0);
      CHECK(same_function(fourier(ball), ball));
      const ExactFunction ft = fourier(make_theta(p, 0));
      CHECK(ft(PAdicPoint::zero(p)) == ExactScalar(1 - Rational(1, p)));
      CHECK(ft(PAdicPoint::from_unit(p, -1, 1, 3)) == ExactScalar(Rational(-1, p)));
      CHECK(ft(PAdicPoint::from_unit(p, -2, 1, 3)).is_zero());
    }
  }

  TEST_CASE("inversion and dilation of theta_i") {
    for (int p : {2, 3, 5})
      for (int i = -2; i <= 2; ++i) {
        CHECK(same_function(invert(make_theta(p, i)), make_theta(p, -i) * ExactScalar(pow_p(p, i))));
        const ExactFunction d = dilate(make_theta(p, 0), PAdicPoint::from_integer(p, p, 4));
        CHECK(same_function(d, make_theta(p, -1) * ExactScalar::sqrt_p_power(p, 1)));
      }
  }

  TEST_CASE("refinement round trip") {
    TestRng rng(11);
    for (int i = 0; i < 20; ++i) {
      const FloatFunction f = random_s0(rng, 3);
      const FloatFunction r = f.refined(f.level().a + 2, f.level().b + 1);
      CHECK(max_abs_diff(r, f) == 0.0);
      CHECK(r.canonical().level() == f.canonical().level());
    }
    CHECK_THROWS(random_s0(rng, 3).refined(-5, 0));
  }

  TEST_CASE("random S_0: Plancherel and F^2 = reflection") {
    TestRng rng(3);
    for (int p : {2, 3, 5})
      for (int i = 0; i < 10; ++i) {
        const FloatFunction f = random_s0(rng, p);
        CHECK(std::abs(norm(fourier(f)) - norm(f)) < 1e-12);
        CHECK(max_abs_diff(fourier(fourier(f)), reflect(f)) < 1e-12);
        CHECK(max_abs_diff(inverse_fourier(fourier(f)), f) < 1e-12);
      }
  }

  TEST_CASE("radial detection") {
    CHECK(is_radial(make_theta(3, 1)));
    const ExactFunction half = indicator_ball(3, PAdicPoint::from_integer(3, 1, 3), 1);
    CHECK_FALSE(is_radial(half));
    CHECK(is_radial(unit_average(half)));
  }
}
