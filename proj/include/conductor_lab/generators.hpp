#pragma once

// Seeded random test data for property checks.
//
// Doubles are drawn from the top 53 bits of mt19937_64 rather than through
// <random> distributions, whose output is implementation-defined; this keeps
// reports byte-identical across standard libraries.

#include <complex>
#include <cstdint>
#include <random>

#include "conductor_lab/characters.hpp"
#include "conductor_lab/function_space.hpp"
#include "conductor_lab/padic_point.hpp"

namespace conductor_lab {

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : eng_(seed) {}

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// uniform integer in [lo, hi]
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }
  Complex complex() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 eng_;
};

struct LevelRange {
  int a_min = -1, a_max = 2;
  int b_min = 1, b_max = 2;
  int max_depth = 4;  // a + b
};

/// Inversion needs constancy p^{b + 2a} on its innermost shell, so repeated
/// inversions are tested on shallow levels.
inline constexpr LevelRange kShallowLevels{-1, 1, 1, 2, 2};

/// A random level with 1 <= a + b <= max_depth, so there is room off the origin ball.
Level random_level(TestRng& rng, int p, const LevelRange& range = {});

/// Random complex values, zero on the origin ball.
FloatFunction random_s0(TestRng& rng, int p, const LevelRange& range = {});
/// As random_s0, shifted so the integral vanishes; F of it again lies in S_0.
FloatFunction random_s0_balanced(TestRng& rng, int p, const LevelRange& range = {});
/// Random shell values, zero on the origin ball.
FloatFunction random_radial_s0(TestRng& rng, int p, const LevelRange& range = {});
/// Radial with shell values in {-4, ..., 4} / 3.
ExactFunction random_radial_exact(TestRng& rng, int p, const LevelRange& range = {});

PAdicPoint random_point(TestRng& rng, int p, int v_min, int v_max, int precision = 12);

/// A uniformly chosen character of conductor exponent c, chi(p) at a random angle.
FiniteCharacter random_character(TestRng& rng, int p, int c);

}  // namespace conductor_lab
