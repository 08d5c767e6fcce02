#include <cmath>

#include "conductor_lab/characters.hpp"
#include "doctest.h"

using namespace conductor_lab;

TEST_SUITE("characters") {
  TEST_CASE("counts of characters with exact conductor") {
    // p^c (1 - 1/p) units mod p^c, minus those already trivial mod p^{c-1}
    CHECK(FiniteCharacter::with_conductor(5, 1).size() == 3);
    CHECK(FiniteCharacter::with_conductor(5, 2).size() == 16);
    CHECK(FiniteCharacter::with_conductor(3, 3).size() == 12);
    CHECK(FiniteCharacter::with_conductor(2, 1).empty());
    CHECK(FiniteCharacter::with_conductor(2, 2).size() == 1);
    CHECK(FiniteCharacter::with_conductor(2, 3).size() == 2);
    for (int p : {2, 3, 5})
      for (int c = 1; c <= 3; ++c)
        for (const auto& chi : FiniteCharacter::with_conductor(p, c)) CHECK(chi.conductor_exponent() == c);
  }

  TEST_CASE("multiplicativity on units") {
    for (const auto& chi : FiniteCharacter::with_conductor(5, 2, 0.3)) {
      for (std::int64_t u : {2, 7, 13})
        for (std::int64_t v : {3, 11}) {
          const auto lhs = chi.eval_unit(mul_mod(u, v, 25));
          CHECK(std::abs(lhs - chi.eval_unit(u) * chi.eval_unit(v)) < 1e-14);
        }
      CHECK(std::abs(chi.eval(PAdicPoint::from_integer(5, 5, 4)) - chi.value_at_p()) < 1e-14);
    }
  }

  TEST_CASE("sign, inverse and twist") {
    for (const auto& chi : FiniteCharacter::with_conductor(3, 2, 0.1)) {
      const PAdicPoint m1 = -PAdicPoint::from_integer(3, 1, 6);
      CHECK(std::abs(chi.eval(m1) - double(chi.sign())) < 1e-14);
      const PAdicPoint x = PAdicPoint::from_unit(3, 2, 5, 6);
      CHECK(std::abs(chi.eval(x) * chi.inverse().eval(x) - 1.0) < 1e-14);
      const auto tw = chi.twist(0.7);
      CHECK(std::abs(tw.eval(x) - chi.eval(x) * std::polar(1.0, -2 * 0.7 * std::log(3.0))) < 1e-13);
    }
  }

  TEST_CASE("spec strings round trip") {
    const auto chi = parse_finite_character("5:2:gen=3/20:chi_p=0.25");
    CHECK(chi.prime() == 5);
    CHECK(chi.c() == 2);
    CHECK(parse_finite_character(chi.to_spec()).to_spec() == chi.to_spec());
    const auto r = parse_real_character("R:odd:tau=1.5");
    CHECK(r.odd());
    CHECK(r.tau() == 1.5);
    CHECK(parse_real_character(r.to_spec()).tau() == 1.5);
  }

  TEST_CASE("malformed specs") {
    CHECK_THROWS_AS(parse_finite_character("5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_finite_character("x:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_finite_character("5:1:foo=1"), std::invalid_argument);
    CHECK_THROWS(parse_finite_character("5:1:gen=1/3"));  // order does not divide 4
    CHECK_THROWS_AS(parse_real_character("R:weird"), std::invalid_argument);
    CHECK_THROWS_AS(parse_real_character("even"), std::invalid_argument);
  }

  TEST_CASE("homogeneous sections") {
    const auto chi = FiniteCharacter::with_conductor(5, 1)[0];
    const FloatFunction phi = homogeneous_section(chi, {{0, 1.0}, {1, 2.0}});
    const PAdicPoint t = PAdicPoint::from_unit(5, -1, 2, 4);
    // phi(t) = g(|t|) chi^{-1}(t), |t| = 5
    CHECK(std::abs(phi(t) - 2.0 * chi.inverse().eval(t)) < 1e-14);
    CHECK(phi.vanishes_near_zero());
    CHECK_THROWS(homogeneous_section_exact(chi, {{0, Rational(1)}}));
  }
}
