#include "conductor_lab/generators.hpp"

namespace conductor_lab {

Level random_level(TestRng& rng, int p, const LevelRange& range) {
  for (;;) {
    const int a = static_cast<int>(rng.integer(range.a_min, range.a_max));
    const int b = static_cast<int>(rng.integer(range.b_min, range.b_max));
    if (a + b >= 1 && a + b <= range.max_depth) return {p, a, b};
  }
}

FloatFunction random_s0(TestRng& rng, int p, const LevelRange& range) {
  const Level lv = random_level(rng, p, range);
  std::vector<Complex> v(static_cast<std::size_t>(lv.dim()));
  for (std::size_t n = 1; n < v.size(); ++n) v[n] = rng.complex();
  return FloatFunction(lv, std::move(v));
}

FloatFunction random_s0_balanced(TestRng& rng, int p, const LevelRange& range) {
  const FloatFunction f = random_s0(rng, p, range);
  std::vector<Complex> v(f.values().begin(), f.values().end());
  Complex mean{};
  for (std::size_t n = 1; n < v.size(); ++n) mean += v[n];
  mean /= static_cast<double>(v.size() - 1);
  for (std::size_t n = 1; n < v.size(); ++n) v[n] -= mean;
  return FloatFunction(f.level(), std::move(v));
}

FloatFunction random_radial_s0(TestRng& rng, int p, const LevelRange& range) {
  return unit_average(random_s0(rng, p, range));
}

ExactFunction random_radial_exact(TestRng& rng, int p, const LevelRange& range) {
  const Level lv = random_level(rng, p, range);
  std::vector<ExactScalar> shell(static_cast<std::size_t>(lv.a + lv.b));
  for (auto& s : shell) {
    Rational r(rng.integer(-4, 4), 3);
    r.canonicalize();
    s = ExactScalar(r);
  }
  std::vector<ExactScalar> v(static_cast<std::size_t>(lv.dim()));
  for (std::int64_t n = 1; n < lv.dim(); ++n) v[static_cast<std::size_t>(n)] = shell[static_cast<std::size_t>(valuation(n, p))];
  return ExactFunction(lv, std::move(v));
}

PAdicPoint random_point(TestRng& rng, int p, int v_min, int v_max, int precision) {
  const int v = static_cast<int>(rng.integer(v_min, v_max));
  const std::int64_t m = ipow(p, precision);
  std::int64_t u = 0;
  do u = rng.integer(1, m - 1);
  while (u % p == 0);
  return PAdicPoint::from_unit(p, v, u, precision);
}

FiniteCharacter random_character(TestRng& rng, int p, int c) {
  const double turns = rng.uniform();
  if (c == 0) return FiniteCharacter::unramified(p, turns);
  const auto all = FiniteCharacter::with_conductor(p, c, turns);
  return all[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(all.size()) - 1))];
}

}  // namespace conductor_lab
