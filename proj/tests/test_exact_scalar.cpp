#include <cmath>

#include "conductor_lab/exact_scalar.hpp"
#include "conductor_lab/padic_point.hpp"
#include "doctest.h"

using namespace conductor_lab;

TEST_SUITE("exact-scalar") {
  TEST_CASE("arithmetic in Q(sqrt p) + Q(sqrt p) log p") {
    const ExactScalar r = ExactScalar::sqrt_p_power(3, 1);
    CHECK(r * r == ExactScalar(3));
    CHECK(ExactScalar::sqrt_p_power(3, -2) == ExactScalar(Rational(1, 3)));
    const ExactScalar l = ExactScalar::log_p(3, Rational(2, 5));
    CHECK((l * r).v1() == Rational(2, 5));
    CHECK((l - l).is_zero());
    CHECK(std::abs((l + r).to_double(3) - (0.4 * std::log(3.0) + std::sqrt(3.0))) < 1e-15);
  }

  TEST_CASE("products of two logs are rejected") {
    const ExactScalar l = ExactScalar::log_p(2);
    CHECK_THROWS(l * l);
  }

  TEST_CASE("sqrt parts of different primes do not mix") {
    CHECK_THROWS(ExactScalar::sqrt_p_power(2, 1) + ExactScalar::sqrt_p_power(3, 1));
    // rationals are unbound and combine with either
    CHECK((ExactScalar(1) + ExactScalar::sqrt_p_power(5, 1)).prime() == 5);
  }

  TEST_CASE("file and symbolic forms") {
    const ExactScalar x = ExactScalar::parse(5, "1/2,-3,0,7/4");
    CHECK(x.to_fields() == "1/2,-3,0,7/4");
    CHECK(x.to_symbolic() == "1/2+-3*sqrt(p)+(0+7/4*sqrt(p))*log(p)");
    CHECK(ExactScalar::parse(5, "2/4,0,0,0") == ExactScalar(Rational(1, 2)));
    CHECK_THROWS_AS(ExactScalar::parse(5, "1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(ExactScalar::parse(5, "1,x,0,0"), std::invalid_argument);
  }

  TEST_CASE("pow_p") {
    CHECK(pow_p(2, 10) == 1024);
    CHECK(pow_p(3, -2) == Rational(1, 9));
    CHECK(pow_p(7, 0) == 1);
  }
}
