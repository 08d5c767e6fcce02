#include <cmath>
#include <numbers>

#include "conductor_lab/conductor.hpp"
#include "conductor_lab/gamma_lambda.hpp"
#include "conductor_lab/mellin.hpp"
#include "conductor_lab/special.hpp"
#include "doctest.h"

using namespace conductor_lab;
using C = std::complex<double>;

TEST_SUITE("mellin-explicit") {
  TEST_CASE("measure constants") {
    CHECK(alpha_squared_finite(2) == 0.5);
    CHECK(std::abs(alpha_squared_finite(5) - 0.8) < 1e-16);
    CHECK(kAlphaSquaredReal == 2.0);
  }

  TEST_CASE("finite Mellin is a Laurent polynomial in p^s") {
    const FiniteProfile g{3, {{-1, 2.0}, {2, C(0, 1)}}};
    const C s(0.5, 0.8);
    CHECK(std::abs(mellin(g, s) - (2.0 * std::pow(3.0, -s) + C(0, 1) * std::pow(3.0, 2.0 * s))) < 1e-13);
    CHECK(mellin(FiniteProfile{3, {}}, s) == C{});
  }

  TEST_CASE("Mellin of the Gaussian") {
    const ArchimedeanProfile g = gaussian_profile();
    for (C s : {C(0.5, 0.0), C(0.5, 3.0), C(1.7, -2.0)}) {
      const C want = 0.5 * std::exp(-0.5 * s * std::log(std::numbers::pi) + special::lgamma(0.5 * s));
      CHECK(std::abs(mellin(g, s) - want) < 1e-10);
    }
  }

  TEST_CASE("profile interpolation and validation") {
    const ArchimedeanProfile g = ArchimedeanProfile::sample([](double u) { return u * u; }, -1.0, 1.0, 201);
    CHECK(std::abs(g.at(1.3) - 1.69) < 1e-7);
    CHECK(g.at(10.0) == 0.0);
    CHECK(g.at(0.0) == 0.0);
    CHECK_THROWS(g.at(-1.0));
    CHECK_THROWS(ArchimedeanProfile::sample([](double) { return 1.0; }, 0.0, 1.0, 3));
  }

  TEST_CASE("lambda_x") {
    const double x = 3.0;
    const C s(0.4, 1.1);
    CHECK(std::abs(lambda_x(x, s) - std::log(x) * std::pow(x, -s) / (1.0 - std::pow(x, -s))) < 1e-14);
    // Lambda of the trivial character at p is lambda_p(s) + lambda_p(1 - s)
    const C lam = lambda_finite(FiniteCharacter::unramified(3), s);
    CHECK(std::abs(lam - lambda_x(3.0, s) - lambda_x(3.0, 1.0 - s)) < 1e-13);
  }

  TEST_CASE("Poisson summation with a compact bump") {
    const PoissonResult r = poisson_check(bump_profile(), 2.0, 200, 200);
    CHECK(r.diff < 1e-8);
    CHECK(r.K == 200);
    CHECK(std::abs(r.lhs.imag()) < 1e-12);
  }

  TEST_CASE("finite explicit formula for a delta profile") {
    const int p = 3;
    const FiniteCharacter one = FiniteCharacter::unramified(p);
    const std::vector<PAdicPoint> pts{PAdicPoint::from_unit(p, 0, 1, 6), PAdicPoint::from_unit(p, -2, 2, 6),
                                      PAdicPoint::from_unit(p, 3, 1, 6)};
    for (int k = -1; k <= 1; ++k) {
      const ExplicitResult ex = explicit_formula_rhs(one, FiniteProfile::delta(p, k), pts);
      const FloatHImage h = apply_H(homogeneous_section(one, {{k, 1.0}}));
      for (std::size_t i = 0; i < pts.size(); ++i) CHECK(std::abs(ex.values[i] - h(pts[i])) < 1e-8);
      CHECK(ex.error_estimate < 1e-8);
    }
  }

  TEST_CASE("character transform and synthesis") {
    const FiniteCharacter chi = FiniteCharacter::with_conductor(5, 1)[1];
    const FiniteProfile g{5, {{0, 1.0}, {1, -0.5}}};
    const FiniteSpectralFunction f = char_transform(chi, g, 512);
    CHECK(f.tau.size() == 512);
    const PAdicPoint x = PAdicPoint::from_unit(5, -1, 3, 6);
    const C back = synthesis(f, {x})[0];
    const C phi = homogeneous_section(chi, g.g)(x);
    CHECK(std::abs(back - std::sqrt(x.norm_double()) * phi) < 1e-12);
  }

  TEST_CASE("real synthesis inverts the character transform") {
    const ArchimedeanProfile g = gaussian_profile();
    const RealSpectralFunction f = char_transform(RealCharacter(false), g);
    const std::vector<double> xs{-0.6, 0.9};
    const auto back = synthesis(f, xs);
    for (std::size_t i = 0; i < xs.size(); ++i)
      CHECK(std::abs(back[i] - std::sqrt(std::abs(xs[i])) * g.at(std::abs(xs[i]))) < 1e-6);
  }
}
