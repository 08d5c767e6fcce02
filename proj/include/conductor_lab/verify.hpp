#pragma once

// Invariant suites behind `conductor-lab verify`.
//
// Every randomized check draws from a TestRng seeded with the report seed, and
// the suites run their checks in a fixed order, so a report depends only on
// (suite, seed, tolerance override).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conductor_lab {

struct CheckResult {
  std::string id;
  std::string anchor;  // the identity being checked, in words
  double error = 0.0;
  double tolerance = 0.0;
  bool exact = false;  // exact-arithmetic checks ignore the tolerance override
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool overall() const;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  /// Replaces the tolerance of every floating-point check.
  std::optional<double> tolerance;
};

/// function-space, gamma, conductor, circle, explicit, poisson, all
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options = {});

}  // namespace conductor_lab
