// Acceptance suite: one PASS/FAIL line per criterion, with the achieved error,
// the tolerance and the runtime against its budget.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <sys/wait.h>

#include "conductor_lab/characters.hpp"
#include "conductor_lab/circle.hpp"
#include "conductor_lab/conductor.hpp"
#include "conductor_lab/function_space.hpp"
#include "conductor_lab/gamma_lambda.hpp"
#include "conductor_lab/generators.hpp"
#include "conductor_lab/mellin.hpp"
#include "conductor_lab/verify.hpp"

#ifndef CONDUCTOR_LAB_CLI
#error "CONDUCTOR_LAB_CLI must name the conductor-lab executable"
#endif

using namespace conductor_lab;
using C = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPrimes[] = {2, 3, 5};

struct Outcome {
  bool ok = false;
  double error = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct MaxErr {
  double value = 0.0;
  void operator()(double e) {
    if (!(e <= value)) value = e;
  }
};

Outcome within(double error, double tol, std::string note = {}) { return {error <= tol, error, tol, std::move(note)}; }

// 1 -------------------------------------------------------------------------

Outcome h_theta_table() {
  for (int p : kPrimes) {
    const ExactHImage h = apply_H(make_theta(p, 0));
    const ExactScalar lp = ExactScalar::log_p(p);
    for (int v = -6; v <= 6; ++v) {
      const ExactScalar want = v > 0 ? -lp : v == 0 ? ExactScalar() : -lp * pow_p(p, v);
      if (h(PAdicPoint::from_unit(p, v, 1, 4)) != want) return {false, 1.0, 0.0, "mismatch at p = " + std::to_string(p)};
    }
    if (h(PAdicPoint::zero(p)) != -lp || h.kappa != -lp) return {false, 1.0, 0.0, "ball or tail at p = " + std::to_string(p)};
  }
  return {true, 0.0, 0.0, "exact, p = 2, 3, 5"};
}

// 2 -------------------------------------------------------------------------

Outcome discrete_spectrum() {
  MaxErr err;
  int count = 0;
  bool exact_ok = true;
  for (int p : kPrimes) {
    const double lp = std::log(double(p));
    for (int c = (p == 2 ? 2 : 1); c <= 4; ++c)
      for (const auto& chi : FiniteCharacter::with_conductor(p, c, 0.137)) {
        const FloatFunction phi = homogeneous_section(chi, {{0, 1.0}, {-1, C(0.5, -0.25)}, {1, -0.75}});
        err(image_distance(apply_H(phi), as_image(phi * C(c * lp))));
        ++count;
      }
    for (int c = (p == 2 ? 2 : 1); c <= 4; ++c)
      for (const auto& chi : FiniteCharacter::with_conductor(p, c)) {
        if (!chi.is_real_valued()) continue;
        const ExactFunction e = homogeneous_section_exact(chi, {{0, Rational(1)}, {2, Rational(-2, 3)}});
        exact_ok = exact_ok && same_image(apply_H(e), as_image(e * ExactScalar::log_p(p, c)));
      }
  }
  // no character of conductor exponent 1 exists at p = 2
  const bool none_at_2 = FiniteCharacter::with_conductor(2, 1).empty();
  Outcome o = within(err.value, 1e-12, std::to_string(count) + " characters");
  o.ok = o.ok && exact_ok && none_at_2;
  if (!exact_ok) o.note += ", exact route failed";
  if (!none_at_2) o.note += ", found c = 1 at p = 2";
  return o;
}

// 3 -------------------------------------------------------------------------

Outcome matrix_elements() {
  for (int p : kPrimes)
    for (int i = -8; i <= 8; ++i)
      for (int j = -8; j <= 8; ++j) {
        const ExactScalar want =
            i == j ? ExactScalar() : ExactScalar::log_p(p, -1) * ExactScalar::sqrt_p_power(p, -std::abs(i - j));
        if (matrix_element_H(p, i, j) != want)
          return {false, 1.0, 0.0, "p = " + std::to_string(p) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j)};
      }
  return {true, 0.0, 0.0, "exact, |i|, |j| <= 8"};
}

// 4 -------------------------------------------------------------------------

Outcome continuous_spectrum() {
  const SpectrumReport r = toeplitz_spectrum(2, 512);
  const double l2 = std::log(2.0), r2 = std::sqrt(2.0);
  const double lo = -2 * l2 / (r2 - 1), hi = 2 * l2 / (r2 + 1);
  bool inside = true;
  for (double e : r.eigenvalues) inside = inside && e >= lo - 1e-9 && e <= hi + 1e-9;
  const double extreme = std::max(std::abs(r.eigenvalues.front() - lo), std::abs(r.eigenvalues.back() - hi));
  MaxErr endpoints;
  for (int p : kPrimes) {
    const SupportInterval s = spectrum_support(p);
    const double lp = std::log(double(p)), sp = std::sqrt(double(p));
    endpoints(std::abs(s.lo + 2 * lp * (1.0 / (p - 1) + sp / (p - 1))));
    endpoints(std::abs(s.hi + 2 * lp * (1.0 / (p - 1) - sp / (p - 1))));
  }
  endpoints(std::abs(r.support_lo - lo));
  endpoints(std::abs(r.support_hi - hi));
  char buf[160];
  std::snprintf(buf, sizeof buf, "containment %s, extreme gap %.3g (tol 1e-2), endpoint error %.3g (tol 1e-12)",
                inside ? "ok" : "violated", extreme, endpoints.value);
  return {inside && extreme <= 1e-2 && endpoints.value <= 1e-12, extreme, 1e-2, buf};
}

// 5 -------------------------------------------------------------------------

Outcome unitaries_and_commutation() {
  constexpr int kPerPrime = 100;
  TestRng rng(2024);
  MaxErr planch, f2, ops;
  for (int p : kPrimes) {
    for (int i = 0; i < kPerPrime; ++i) {
      const FloatFunction phi = random_s0(rng, p);
      const FloatFunction psi = random_s0(rng, p);
      planch(std::abs(inner_product(fourier(phi), fourier(psi)) - inner_product(phi, psi)));
      planch(std::abs(norm(fourier(phi)) - norm(phi)));
      f2(max_abs_diff(fourier(fourier(phi)), reflect(phi)));

      const FloatHImage h = apply_H(phi);
      const PAdicPoint x = random_point(rng, p, -2, 2);
      ops(image_distance(apply_H(dilate(phi, x)), dilate(h, x)));
      ops(std::abs(inner_product(h, psi) - std::conj(inner_product(apply_H(psi), phi))));

      // F maps S_0 into S_0 exactly when the integral vanishes
      const FloatFunction bal = random_s0_balanced(rng, p);
      FloatHImage hb = apply_H(bal);
      const FloatFunction fbal = fourier(bal);
      std::vector<C> fv(fbal.values().begin(), fbal.values().end());
      ops(std::max(std::abs(hb.kappa), std::abs(fv[0])));
      hb.kappa = 0.0;
      fv[0] = 0.0;
      ops(image_distance(apply_H(FloatFunction(fbal.level(), std::move(fv))), fourier(hb)));

      const FloatFunction rad = random_radial_s0(rng, p, kShallowLevels);
      ops(image_distance(apply_H(invert(rad)), invert(apply_H(rad))));
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%d functions per prime; Plancherel %.3g, F^2 %.3g (tol 1e-12); H F, H R_x, H I, "
                "Hermitian %.3g (tol 1e-10)", kPerPrime, planch.value, f2.value, ops.value);
  const bool ok = planch.value <= 1e-12 && f2.value <= 1e-12 && ops.value <= 1e-10;
  return {ok, std::max({planch.value, f2.value, ops.value}), 1e-10, buf};
}

// 6 -------------------------------------------------------------------------

Outcome gamma_identities() {
  const VerificationReport r = run_suite("gamma", {7, {}});
  double worst_ratio = 0.0;
  int failures = 0;
  std::string first_failure;
  for (const auto& c : r.checks) {
    if (!c.pass) {
      if (failures++ == 0) first_failure = c.id;
    }
    if (!c.exact && c.tolerance > 0) worst_ratio = std::max(worst_ratio, c.error / c.tolerance);
  }
  std::string note = std::to_string(r.checks.size()) + " checks, worst error/tolerance " + std::to_string(worst_ratio);
  if (failures) note += ", first failure " + first_failure;
  return {r.overall(), worst_ratio, 1.0, note};
}

// 7 -------------------------------------------------------------------------

Outcome bridge_identity() {
  MaxErr e;
  for (int p : kPrimes) {
    const double lp = std::log(double(p));
    const double half = kPi / lp;
    const FiniteCharacter one = FiniteCharacter::unramified(p);
    for (int j = 0; j <= 1000; ++j) {
      const double tau = -half + 2.0 * half * j / 1000.0;
      e(std::abs(multiplier_m(p, tau * lp) + lambda_finite(one, {0.5, tau})));
    }
  }
  return within(e.value, 1e-12, "1001 points per prime");
}

// 8 -------------------------------------------------------------------------

Outcome poisson() {
  const PoissonResult r = poisson_check(bump_profile(), 2.0, 200, 200);
  return within(r.diff, 1e-8, "x = 2, K = J = 200");
}

// 9 -------------------------------------------------------------------------

std::vector<PAdicPoint> sample_points(int p, int vmin, int vmax) {
  std::vector<PAdicPoint> pts;
  for (int v = vmin; v <= vmax; ++v)
    for (std::int64_t u : {std::int64_t{1}, std::int64_t{p == 2 ? 3 : 2}, std::int64_t{p == 2 ? 7 : p + 1}})
      pts.push_back(PAdicPoint::from_unit(p, v, u, 8));
  return pts;
}

Outcome finite_explicit() {
  MaxErr diff;
  for (int p : kPrimes) {
    const FiniteCharacter one = FiniteCharacter::unramified(p);
    const auto pts = sample_points(p, -4, 4);
    for (int k = -2; k <= 2; ++k) {
      const ExplicitResult ex = explicit_formula_rhs(one, FiniteProfile::delta(p, k), pts);
      const FloatHImage h = apply_H(homogeneous_section(one, {{k, 1.0}}));
      for (std::size_t i = 0; i < pts.size(); ++i) diff(std::abs(ex.values[i] - h(pts[i])));
    }
  }
  int ramified = 0;
  for (auto [p, c] : {std::pair{5, 1}, {5, 2}, {2, 2}, {2, 3}}) {
    const auto pts = sample_points(p, -3, 3);
    const FiniteProfile g{p, {{0, 1.0}, {1, C(0.5, 0.25)}, {-1, -0.3}}};
    for (const auto& chi : FiniteCharacter::with_conductor(p, c, 0.29)) {
      const ExplicitResult ex = explicit_formula_rhs(chi, g, pts);
      const FloatHImage h = apply_H(homogeneous_section(chi, g.g));
      for (std::size_t i = 0; i < pts.size(); ++i) diff(std::abs(ex.values[i] - h(pts[i])));
      ++ramified;
    }
  }
  return within(diff.value, 1e-8, "trivial chi with delta_k, k = -2..2, and " + std::to_string(ramified) + " ramified characters");
}

// 10 ------------------------------------------------------------------------

Outcome real_explicit() {
  const std::vector<double> xs = {-2.0, -1.3, -0.7, -0.2, 0.1, 0.35, 0.8, 1.5, 2.2};
  MaxErr route, roundtrip;
  for (bool odd : {false, true}) {
    const ArchimedeanProfile g = odd ? odd_gaussian_profile() : gaussian_profile();
    route(apply_H_real(g, odd, xs).discrepancy);
    const RealSpectralFunction f = char_transform(RealCharacter(odd), g);
    const auto back = synthesis(f, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double ax = std::abs(xs[i]);
      const double sign = odd && xs[i] < 0 ? -1.0 : 1.0;
      roundtrip(std::abs(back[i] - sign * std::sqrt(ax) * g.at(ax)));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "two-route %.3g (tol 1e-4), character transform round trip %.3g (tol 1e-6)",
                route.value, roundtrip.value);
  return {route.value <= 1e-4 && roundtrip.value <= 1e-6, route.value, 1e-4, buf};
}

// 11 ------------------------------------------------------------------------

struct Run {
  int status = -1;
  std::string output;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string("\"") + CONDUCTOR_LAB_CLI + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome end_to_end() {
  const Run a = run_cli("verify --suite all --seed 7");
  const Run b = run_cli("verify --suite all --seed 7");
  const bool same = !a.output.empty() && a.output == b.output;
  std::string note = "exit " + std::to_string(a.status) + ", " + std::to_string(a.output.size()) + " bytes, repeat " +
                     (same ? "identical" : "differs");
  return {a.status == 0 && b.status == 0 && same, same ? 0.0 : 1.0, 0.0, note};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "H(theta) table, exact", 1.0, h_theta_table},
      {2, "discrete spectrum c log p", 10.0, discrete_spectrum},
      {3, "matrix elements, exact", 10.0, matrix_elements},
      {4, "continuous spectrum, p = 2, N = 512", 30.0, continuous_spectrum},
      {5, "unitaries and commutation", 60.0, unitaries_and_commutation},
      {6, "Gamma / Lambda identities", 60.0, gamma_identities},
      {7, "bridge m(p, tau log p) = -Lambda", 5.0, bridge_identity},
      {8, "Poisson summation, x = 2", 10.0, poisson},
      {9, "explicit formula, finite place", 60.0, finite_explicit},
      {10, "explicit formula, real place", 120.0, real_explicit},
      {11, "verify --suite all --seed 7, byte-stable", 300.0, end_to_end},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, INFINITY, 0.0, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %2d: %-42s error %.3g tol %.3g  %.2fs (budget %.0fs)%s  [%s]\n", pass ? "PASS" : "FAIL",
                c.id, c.name, o.error, o.tolerance, secs, c.budget_seconds, in_time ? "" : " OVER BUDGET",
                o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 11 criteria passed\n", 11 - failed);
  return failed == 0 ? 0 : 1;
}
