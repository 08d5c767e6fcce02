#include <algorithm>

#include "conductor_lab/generators.hpp"
#include "conductor_lab/io.hpp"
#include "conductor_lab/verify.hpp"
#include "doctest.h"

using namespace conductor_lab;

TEST_SUITE("verify") {
  TEST_CASE("suite names") {
    const auto& names = suite_names();
    CHECK(names.size() == 7);
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  }

  TEST_CASE("reports are deterministic and record the seed") {
    const VerificationReport a = run_suite("poisson", {3, {}});
    const VerificationReport b = run_suite("poisson", {3, {}});
    CHECK(a.seed == 3);
    CHECK(io::dump(io::report_to_json(a, false)) == io::dump(io::report_to_json(b, false)));
    CHECK(a.overall());
  }

  TEST_CASE("tolerance override reaches floating-point rows only") {
    const VerificationReport r = run_suite("circle", {7, 1e-9});
    bool saw_float = false;
    for (const auto& c : r.checks) {
      if (c.exact) {
        CHECK(c.tolerance == 0.0);
      } else {
        saw_float = true;
        CHECK(c.tolerance == 1e-9);
        CHECK(c.pass == (c.error <= 1e-9));
      }
    }
    CHECK(saw_float);
  }

  TEST_CASE("overall pass needs every check") {
    VerificationReport r{"x", 1, {{"a", "", 0.0, 1.0, false, true}}, 0.0};
    CHECK(r.overall());
    r.checks.push_back({"b", "", 2.0, 1.0, false, false});
    CHECK_FALSE(r.overall());
    CHECK_FALSE(VerificationReport{}.overall());
  }

  TEST_CASE("generators") {
    TestRng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.uniform() == b.uniform());
    TestRng rng(9);
    for (int i = 0; i < 50; ++i) {
      const Level lv = random_level(rng, 3);
      CHECK(lv.a + lv.b >= 1);
      CHECK(lv.a + lv.b <= 4);
      const FloatFunction f = random_s0(rng, 2);
      CHECK(f.vanishes_near_zero());
      const std::int64_t k = rng.integer(-3, 3);
      CHECK(k >= -3);
      CHECK(k <= 3);
    }
  }
}
