#include <cmath>

#include "conductor_lab/conductor.hpp"
#include "conductor_lab/generators.hpp"
#include "doctest.h"

using namespace conductor_lab;

TEST_SUITE("conductor-operator") {
  TEST_CASE("H(theta): -log p inside, 0 on the units, -log p / |t| outside") {
    for (int p : {2, 3, 5}) {
      const ExactHImage h = apply_H(make_theta(p, 0));
      const ExactScalar lp = ExactScalar::log_p(p);
      CHECK(h(PAdicPoint::zero(p)) == -lp);
      CHECK(h(PAdicPoint::from_unit(p, 3, 1, 4)) == -lp);
      CHECK(h(PAdicPoint::from_unit(p, 0, 1, 4)).is_zero());
      CHECK(h(PAdicPoint::from_unit(p, -1, 1, 4)) == -lp * Rational(1, p));
      CHECK(h(PAdicPoint::from_unit(p, -5, 1, 4)) == -lp * pow_p(p, -5));
      CHECK(h.kappa == -lp);
      CHECK(h.cut == 0);
    }
  }

  TEST_CASE("Vladimirov functional") {
    CHECK(vladimirov_G(make_theta(3, 0)) == ExactScalar::log_p(3));
    CHECK(vladimirov_G(indicator_ball(3, PAdicPoint::zero(3), 0)) == ExactScalar::log_p(3, Rational(1, 2)));
    CHECK(vladimirov_G(ExactFunction::zero(3)).is_zero());
  }

  TEST_CASE("matrix elements") {
    for (int p : {2, 3, 5})
      for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) CHECK(matrix_element_H(p, i, j) == matrix_element_closed_form(p, i, j));
    CHECK(matrix_element_closed_form(3, 0, 0).is_zero());
    CHECK(matrix_element_closed_form(3, 1, 3) == ExactScalar::log_p(3, Rational(-1, 3)));
  }

  TEST_CASE("ramified sections are eigenvectors") {
    for (int p : {3, 5})
      for (int c = 1; c <= 2; ++c)
        for (const auto& chi : FiniteCharacter::with_conductor(p, c)) {
          const FloatFunction phi = homogeneous_section(chi, {{0, 1.0}, {2, -0.5}});
          CHECK(image_distance(apply_H(phi), as_image(phi * Complex(c * std::log(double(p))))) < 1e-12);
        }
  }

  TEST_CASE("definition and Fourier routes agree") {
    TestRng rng(5);
    for (int p : {2, 3, 5})
      for (int i = 0; i < 5; ++i) {
        const FloatFunction f = random_s0(rng, p);
        CHECK(image_distance(apply_H(f), apply_H_oracle(f)) < 1e-12);
        const ExactFunction e = random_radial_exact(rng, p);
        CHECK(same_image(apply_H(e), apply_H_oracle(e)));
      }
  }

  TEST_CASE("the tail carries -L times the integral") {
    const ExactFunction e = make_theta(5, 2) * ExactScalar(Rational(3));
    const ExactHImage h = apply_H(e);
    const Rational L = Rational(5, 4);  // p / (p - 1), times log p
    CHECK(h.kappa == ExactScalar::log_p(5, -L) * integrate(e));
  }

  TEST_CASE("domain errors") {
    const ExactFunction ball = indicator_ball(3, PAdicPoint::zero(3), 0);
    CHECK_THROWS_AS(apply_H(ball), std::domain_error);
    CHECK(apply_H(ExactFunction::zero(3)).core.is_zero());
  }
}
