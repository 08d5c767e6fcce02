#include "conductor_lab/padic_point.hpp"
#include "doctest.h"

using namespace conductor_lab;

TEST_SUITE("padic") {
  TEST_CASE("integer helpers") {
    CHECK(ipow(3, 4) == 81);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(require_prime(4), std::invalid_argument);
    CHECK(mod(-1, 5) == 4);
    CHECK(valuation(48, 2) == 4);
    CHECK(mul_mod(inverse_mod(7, 125), 7, 125) == 1);
  }

  TEST_CASE("points carry valuation and unit digits") {
    const PAdicPoint x = PAdicPoint::from_integer(5, 50, 6);
    CHECK(x.valuation() == 2);
    CHECK(x.unit_residue(2) == 2);
    CHECK(x.norm() == Rational(1, 25));
    const PAdicPoint y = x.inverse();
    CHECK(y.valuation() == -2);
    CHECK((x * y).unit_residue(4) == 1);
    CHECK((-PAdicPoint::from_integer(3, 1, 4)).unit_residue(4) == 80);
    CHECK(PAdicPoint::zero(3).is_zero());
    CHECK_THROWS(PAdicPoint::zero(3).inverse());
  }

  TEST_CASE("from_unit rejects non-units") {
    CHECK_THROWS(PAdicPoint::from_unit(3, 0, 6, 4));
    CHECK(PAdicPoint::from_unit(3, -2, 2, 4).norm() == 9);
  }
}
