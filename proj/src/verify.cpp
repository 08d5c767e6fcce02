#include "conductor_lab/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "conductor_lab/characters.hpp"
#include "conductor_lab/circle.hpp"
#include "conductor_lab/conductor.hpp"
#include "conductor_lab/function_space.hpp"
#include "conductor_lab/gamma_lambda.hpp"
#include "conductor_lab/generators.hpp"
#include "conductor_lab/mellin.hpp"
#include "conductor_lab/oracles.hpp"
#include "conductor_lab/special.hpp"

namespace conductor_lab {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr int kPrimes[] = {2, 3, 5};
constexpr int kRandomPerPrime = 100;

/// Running maximum that remembers a NaN once it has seen one.
struct MaxErr {
  double value = 0.0;
  void operator()(double e) {
    if (!(e <= value)) value = e;
  }
};

class Recorder {
 public:
  Recorder(VerificationReport& report, const VerifyOptions& options) : report_(report), options_(options) {}

  void close(const std::string& id, const std::string& anchor, double error, double tolerance) {
    CheckResult r{id, anchor, error, options_.tolerance.value_or(tolerance), false, false};
    r.pass = error <= r.tolerance;
    report_.checks.push_back(std::move(r));
  }

  void exact(const std::string& id, const std::string& anchor, bool ok, double numeric_gap = 0.0) {
    CheckResult r{id, anchor, ok ? 0.0 : std::max(numeric_gap, std::numeric_limits<double>::min()), 0.0, true, ok};
    report_.checks.push_back(std::move(r));
  }

  /// Runs `body`, which returns the achieved error; an exception fails the check.
  void guarded(const std::string& id, const std::string& anchor, double tolerance,
               const std::function<double()>& body) {
    double error = std::numeric_limits<double>::infinity();
    try {
      error = body();
    } catch (const std::exception&) {
    }
    close(id, anchor, error, tolerance);
  }

  void guarded_exact(const std::string& id, const std::string& anchor, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception&) {
    }
    exact(id, anchor, ok);
  }

 private:
  VerificationReport& report_;
  const VerifyOptions& options_;
};

std::string tag(const std::string& base, int p) { return base + ".p" + std::to_string(p); }

C critical(double tau) { return {0.5, tau}; }

C random_strip_point(TestRng& rng) { return {rng.uniform(0.05, 0.95), rng.uniform(-6.0, 6.0)}; }

/// All characters used by the gamma suite at one prime: unramified plus c <= 3.
std::vector<FiniteCharacter> gamma_characters(TestRng& rng, int p) {
  std::vector<FiniteCharacter> out{FiniteCharacter::unramified(p), FiniteCharacter::unramified(p, rng.uniform())};
  for (int c = 1; c <= 3; ++c)
    for (auto& chi : FiniteCharacter::with_conductor(p, c, rng.uniform())) out.push_back(chi);
  return out;
}

// ---------------------------------------------------------------------------

void suite_function_space(Recorder& rec, TestRng& rng) {
  for (int p : kPrimes) {
    MaxErr planch, f2, fdil, favg, inv2, inv_iso, dil_iso;
    bool canon = true;
    for (int i = 0; i < kRandomPerPrime; ++i) {
      const FloatFunction phi = random_s0(rng, p);
      const FloatFunction psi = random_s0(rng, p);
      const FloatFunction fphi = fourier(phi);
      planch(std::abs(inner_product(fphi, fourier(psi)) - inner_product(phi, psi)));
      f2(max_abs_diff(fourier(fphi), reflect(phi)));
      const PAdicPoint x = random_point(rng, p, -2, 2);
      fdil(max_abs_diff(fourier(dilate(phi, x)), dilate(fphi, x.inverse())));
      favg(max_abs_diff(fourier(unit_average(phi)), unit_average(fphi)));
      const FloatFunction shallow = random_s0(rng, p, kShallowLevels);
      inv2(max_abs_diff(invert(invert(shallow)), shallow));
      inv_iso(std::abs(norm(invert(shallow)) - norm(shallow)));
      dil_iso(std::abs(norm(dilate(phi, x)) - norm(phi)));
      const FloatFunction back = phi.refined(phi.level().a + 1, phi.level().b + 2).canonical();
      const FloatFunction ref = phi.canonical();
      canon = canon && back.level() == ref.level() && max_abs_diff(back, ref) == 0.0;
    }
    rec.close(tag("function-space.plancherel", p), "<F phi, F psi> = <phi, psi>", planch.value, 1e-12);
    rec.close(tag("function-space.fourier_squared", p), "F F phi = phi(-t)", f2.value, 1e-12);
    rec.close(tag("function-space.fourier_dilation", p), "F R_x = R_{1/x} F", fdil.value, 1e-12);
    rec.close(tag("function-space.fourier_unit_average", p), "F commutes with unit averaging", favg.value, 1e-12);
    rec.close(tag("function-space.inversion_involution", p), "I I phi = phi", inv2.value, 1e-12);
    rec.close(tag("function-space.inversion_isometry", p), "|I phi| = |phi|", inv_iso.value, 1e-12);
    rec.close(tag("function-space.dilation_isometry", p), "|R_x phi| = |phi|", dil_iso.value, 1e-12);
    rec.exact(tag("function-space.refine_canonical", p), "refine then coarsen gives the canonical form", canon);
  }

  for (int p : kPrimes) {
    rec.guarded_exact(tag("function-space.fourier_theta", p), "F(theta) = 1 - 1/p on Z_p, -1/p on |t| = p", [&] {
      std::vector<ExactScalar> v(static_cast<std::size_t>(p), ExactScalar(Rational(-1, p)));
      v[0] = ExactScalar(1 - Rational(1, p));
      const ExactFunction expected(Level{p, 1, 0}, std::move(v));
      const ExactFunction ft = fourier(make_theta(p, 0));
      return same_function(ft, expected) && same_function(fourier(ft), make_theta(p, 0));
    });
    rec.guarded_exact(tag("function-space.fourier_unit_ball", p), "F(1_{Z_p}) = 1_{Z_p}", [&] {
      const ExactFunction ball = indicator_ball(p, PAdicPoint::zero(p), 0);
      return same_function(fourier(ball), ball);
    });
    rec.guarded_exact(tag("function-space.inversion_theta", p), "I(theta_i) = p^{i} theta_{-i}", [&] {
      for (int i = -3; i <= 3; ++i)
        if (!same_function(invert(make_theta(p, i)), make_theta(p, -i) * ExactScalar(pow_p(p, i)))) return false;
      return true;
    });
    rec.guarded_exact(tag("function-space.dilation_theta", p), "R_p(theta) = sqrt(p) theta_{-1}", [&] {
      const ExactFunction d = dilate(make_theta(p, 0), PAdicPoint::from_integer(p, p, 4));
      return same_function(d, make_theta(p, -1) * ExactScalar::sqrt_p_power(p, 1));
    });
    rec.guarded_exact(tag("function-space.log_norm_theta", p), "log|t| theta_i = i log p theta_i", [&] {
      for (int i = -3; i <= 3; ++i)
        if (!same_function(mul_log_norm(make_theta(p, i)), make_theta(p, i) * ExactScalar::log_p(p, i))) return false;
      return true;
    });
    rec.guarded_exact(tag("function-space.shell_measures", p), "<theta_i, theta_j> = delta_ij p^i (1 - 1/p)", [&] {
      for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) {
          const ExactScalar want = i == j ? ExactScalar(pow_p(p, i) * (1 - Rational(1, p))) : ExactScalar();
          if (inner_product(make_theta(p, i), make_theta(p, j)) != want) return false;
        }
      return integrate(indicator_ball(p, PAdicPoint::zero(p), 1)) == ExactScalar(Rational(1, p));
    });
  }
  rec.guarded_exact("function-space.ball_disjoint", "1 + 3Z_3 and 2 + 3Z_3 are disjoint", [] {
    const ExactFunction u = indicator_ball(3, PAdicPoint::from_integer(3, 1, 4), 1);
    const ExactFunction v = indicator_ball(3, PAdicPoint::from_integer(3, 2, 4), 1);
    return inner_product(u, v).is_zero() && integrate(u) == ExactScalar(Rational(1, 3));
  });
  rec.guarded_exact("function-space.unit_average_ramified", "unit averaging kills a ramified section", [] {
    for (const auto& chi : FiniteCharacter::with_conductor(5, 1))
      if (chi.is_real_valued() && unit_average(homogeneous_section_exact(chi, {{0, Rational(1)}})).is_zero()) return true;
    return false;
  });
}

// ---------------------------------------------------------------------------

void suite_gamma(Recorder& rec, TestRng& rng) {
  for (int p : kPrimes) {
    const auto chars = gamma_characters(rng, p);
    const double period = 2.0 * kPi / std::log(double(p));
    MaxErr refl, conj, unimod, lam_real, lam_sym, lam_conj, periodic, ramified;
    for (const auto& chi : chars) {
      for (int i = 0; i < 20; ++i) {
        const C s = random_strip_point(rng);
        const C g = gamma_finite(chi, s);
        refl(std::abs(g * gamma_finite(chi.inverse(), 1.0 - s) - double(chi.sign())));
        conj(std::abs(std::conj(g) - double(chi.sign()) * gamma_finite(chi.conj(), std::conj(s))));
        periodic(std::abs(gamma_finite(chi, s + C(0.0, period)) - g));
        const C l = lambda_finite(chi, s);
        lam_sym(std::abs(l - lambda_finite(chi.inverse(), 1.0 - s)));
        lam_conj(std::abs(std::conj(l) - lambda_finite(chi.conj(), std::conj(s))));
        if (chi.is_ramified()) ramified(std::abs(l + chi.c() * std::log(double(p))));
      }
      for (int j = 0; j <= 200; ++j) {
        const double tau = -10.0 + 0.1 * j;
        unimod(std::abs(std::abs(gamma_finite(chi, critical(tau))) - 1.0));
        lam_real(std::abs(lambda_finite(chi, critical(tau)).imag()));
      }
    }
    rec.close(tag("gamma.finite.reflection", p), "Gamma(chi, s) Gamma(chi^{-1}, 1 - s) = chi(-1)", refl.value, 1e-10);
    rec.close(tag("gamma.finite.conjugation", p), "conj Gamma(chi, s) = chi(-1) Gamma(conj chi, conj s)", conj.value,
              1e-10);
    rec.close(tag("gamma.finite.unimodular", p), "|Gamma| = 1 on the critical line (201 points)", unimod.value, 1e-10);
    rec.close(tag("gamma.finite.periodicity", p), "Gamma(chi, s + 2 pi i / log p) = Gamma(chi, s)", periodic.value,
              1e-10);
    rec.close(tag("gamma.finite.lambda_real", p), "Lambda real on the critical line", lam_real.value, 1e-10);
    rec.close(tag("gamma.finite.lambda_reflection", p), "Lambda(chi, s) = Lambda(chi^{-1}, 1 - s)", lam_sym.value,
              1e-10);
    rec.close(tag("gamma.finite.lambda_conjugation", p), "conj Lambda(chi, s) = Lambda(conj chi, conj s)",
              lam_conj.value, 1e-10);
    rec.close(tag("gamma.finite.lambda_ramified", p), "Lambda = -c log p for ramified chi", ramified.value, 1e-12);

    // oracle and strip scan on a few characters per conductor
    MaxErr oracle, y_spread;
    int bad_points = 0;
    for (int c = 0; c <= 3; ++c) {
      if (p == 2 && c == 1) continue;
      for (int k = 0; k < 3; ++k) {
        const FiniteCharacter chi = random_character(rng, p, c);
        for (int i = 0; i < 3; ++i) {
          const C s = random_strip_point(rng);
          const C g = gamma_finite(chi, s);
          C first{};
          for (int y = 0; y < 3; ++y) {
            const C o = oracle::gamma_finite(chi, s, random_point(rng, p, -2, 2, 8));
            oracle(std::abs(o - g));
            if (y == 0) first = o;
            y_spread(std::abs(o - first));
          }
        }
        for (int a = 1; a <= 19; ++a)
          for (int b = 0; b <= 80; ++b) {
            try {
              const double m = std::abs(gamma_finite(chi, C(0.05 * a, -10.0 + 0.25 * b)));
              if (!(m > 1e-6 && m < 1e6)) ++bad_points;
            } catch (const PoleError&) {
              ++bad_points;
            }
          }
      }
    }
    rec.close(tag("gamma.finite.oracle", p), "shell-by-shell Fourier integral of chi(t)|t|^{s-1}", oracle.value, 1e-8);
    rec.close(tag("gamma.finite.oracle_y_independence", p), "oracle ratio independent of y", y_spread.value, 1e-8);
    rec.exact(tag("gamma.finite.strip_analytic", p), "no poles or zeros in 0 < Re s < 1", bad_points == 0,
              double(bad_points));
    rec.guarded(tag("gamma.finite.trivial_half", p), "Gamma(1, 1/2) = 1, Lambda(1, 1/2) = 2 log p / (sqrt p - 1)",
                1e-14, [&] {
                  const FiniteCharacter one = FiniteCharacter::unramified(p);
                  const double want = 2.0 * std::log(double(p)) / (std::sqrt(double(p)) - 1.0);
                  return std::max(std::abs(gamma_finite(one, 0.5) - 1.0), std::abs(lambda_finite(one, 0.5) - want));
                });
  }
  rec.exact("gamma.finite.no_conductor_one_at_2", "p = 2 has no characters of conductor 1",
            FiniteCharacter::with_conductor(2, 1).empty());
  rec.guarded_exact("gamma.ramified_parametric", "Lambda = -(c + delta) log q", [] {
    return lambda_ramified_parametric(2, 0, 3) == ExactScalar::log_p(2, -3) &&
           lambda_ramified_parametric(4, 0, 1) == ExactScalar::log_p(4, -1) &&
           lambda_ramified_parametric(5, 1, 2) == ExactScalar::log_p(5, -3);
  });

  for (bool odd : {false, true}) {
    const std::string par = odd ? "odd" : "even";
    MaxErr refl, conj, unimod, lam_real, lam_sym, oracle, lam_oracle;
    for (int k = 0; k < 4; ++k) {
      const RealCharacter chi(odd, k == 0 ? 0.0 : rng.uniform(-3.0, 3.0));
      for (int i = 0; i < 20; ++i) {
        const C s = random_strip_point(rng);
        const C g = gamma_real(chi, s);
        refl(std::abs(g * gamma_real(chi.inverse(), 1.0 - s) - double(chi.sign())));
        conj(std::abs(std::conj(g) - double(chi.sign()) * gamma_real(chi.conj(), std::conj(s))));
        lam_sym(std::abs(lambda_real(chi, s) - lambda_real(chi.inverse(), 1.0 - s)));
      }
      for (int j = 0; j <= 200; ++j) {
        const double tau = -10.0 + 0.1 * j;
        unimod(std::abs(std::abs(gamma_real(chi, critical(tau))) - 1.0));
        lam_real(std::abs(lambda_real(chi, critical(tau)).imag()));
      }
      for (int i = 0; i < 2; ++i) {
        const C s = i == 0 && k == 0 ? C(0.5) : C(rng.uniform(0.2, 0.8), rng.uniform(-3.0, 3.0));
        oracle(std::abs(oracle::gamma_real(chi, s) - gamma_real(chi, s)));
        lam_oracle(std::abs(oracle::lambda_real(chi, s) - lambda_real(chi, s)));
      }
    }
    rec.close("gamma.real." + par + ".reflection", "Gamma(chi, s) Gamma(chi^{-1}, 1 - s) = chi(-1)", refl.value, 1e-10);
    rec.close("gamma.real." + par + ".conjugation", "conj Gamma(chi, s) = chi(-1) Gamma(conj chi, conj s)", conj.value,
              1e-10);
    rec.close("gamma.real." + par + ".unimodular", "|Gamma| = 1 on the critical line (201 points)", unimod.value,
              1e-10);
    rec.close("gamma.real." + par + ".lambda_real", "Lambda real on the critical line", lam_real.value, 1e-10);
    rec.close("gamma.real." + par + ".lambda_reflection", "Lambda(chi, s) = Lambda(chi^{-1}, 1 - s)", lam_sym.value,
              1e-10);
    rec.close("gamma.real." + par + ".oracle", "Gaussian pairing against chi(x)|x|^{s-1}", oracle.value, 1e-8);
    rec.close("gamma.real." + par + ".lambda_oracle", "Lambda from the oracle by differencing", lam_oracle.value, 1e-6);
  }
}

// ---------------------------------------------------------------------------

ExactHImage theta_table(int p) {
  std::vector<ExactScalar> v(static_cast<std::size_t>(p));
  v[0] = ExactScalar::log_p(p, -1);
  return {ExactFunction(Level{p, 0, 1}, std::move(v)), ExactScalar::log_p(p, -1), 0};
}

/// H(phi)(t) straight from log|t| phi(t) - G(u -> phi(t - u)).
template <class S>
S direct_H_at(const LcFunction<S>& phi, const PAdicPoint& t) {
  S out = -vladimirov_G(shifted_reflection(phi, t));
  if (!t.is_zero()) out += ScalarTraits<S>::log_p(phi.prime(), Rational(-t.valuation())) * phi(t);
  return out;
}

void suite_conductor(Recorder& rec, TestRng& rng) {
  for (int p : kPrimes) {
    rec.guarded_exact(tag("conductor.h_theta", p), "H(theta) = -log p, 0, -log p / |t|", [&] {
      const ExactHImage h = apply_H(make_theta(p, 0));
      if (!same_image(h, theta_table(p))) return false;
      const ExactScalar lp = ExactScalar::log_p(p, 1);
      for (int v = -4; v <= 4; ++v) {
        const ExactScalar got = h(PAdicPoint::from_unit(p, v, 1, 4));
        const ExactScalar want = v > 0 ? -lp : v == 0 ? ExactScalar() : -lp * pow_p(p, v);
        if (got != want) return false;
      }
      return true;
    });
    rec.guarded_exact(tag("conductor.h_theta_dilates", p), "H(theta_i)(t) = H(theta)(p^i t)", [&] {
      const ExactHImage h0 = apply_H(make_theta(p, 0));
      for (int i = -3; i <= 3; ++i) {
        const ExactHImage hi = apply_H(make_theta(p, i));
        for (int v = -6; v <= 6; ++v) {
          const PAdicPoint t = PAdicPoint::from_unit(p, v, p == 2 ? 3 : 2, 6);
          if (hi(t) != h0(PAdicPoint::from_unit(p, v + i, p == 2 ? 3 : 2, 6))) return false;
        }
      }
      return true;
    });
    rec.guarded_exact(tag("conductor.vladimirov_examples", p), "G(theta) = log p, G(1_{Z_p}) = log p / (p - 1)", [&] {
      return vladimirov_G(make_theta(p, 0)) == ExactScalar::log_p(p, 1) &&
             vladimirov_G(indicator_ball(p, PAdicPoint::zero(p), 0)) == ExactScalar::log_p(p, Rational(1, p - 1)) &&
             vladimirov_G(ExactFunction::zero(p)).is_zero();
    });
    rec.guarded_exact(tag("conductor.matrix_elements", p), "<H eta_i, eta_j> = -log p p^{-|i-j|/2}, |i|, |j| <= 8",
                      [&] {
                        for (int i = -8; i <= 8; ++i)
                          for (int j = -8; j <= 8; ++j)
                            if (matrix_element_H(p, i, j) != matrix_element_closed_form(p, i, j)) return false;
                        return true;
                      });

    // discrete spectrum
    MaxErr eig;
    bool eig_exact = true;
    for (int c = 1; c <= 4; ++c) {
      const double lp = std::log(double(p));
      for (const auto& chi : FiniteCharacter::with_conductor(p, c, rng.uniform())) {
        const std::map<int, Complex> g{{0, 1.0}, {-1, C(0.5, -0.25)}, {1, -0.75}};
        const FloatFunction phi = homogeneous_section(chi, g);
        const FloatHImage h = apply_H(phi);
        eig(image_distance(h, as_image(phi * C(c * lp))));
      }
      // the real-valued characters need a real chi(p)
      for (const auto& chi : FiniteCharacter::with_conductor(p, c)) {
        if (!chi.is_real_valued()) continue;
        const ExactFunction e = homogeneous_section_exact(chi, {{0, Rational(1)}, {1, Rational(-2, 3)}});
        eig_exact = eig_exact && same_image(apply_H(e), as_image(e * ExactScalar::log_p(p, c)));
      }
    }
    rec.close(tag("conductor.discrete_spectrum", p), "H phi = c log p phi for ramified sections, c <= 4", eig.value,
              1e-12);
    rec.exact(tag("conductor.discrete_spectrum_exact", p), "same, exactly, for real-valued characters", eig_exact);

    // two routes and the pointwise definition
    bool oracle_exact = true;
    MaxErr oracle_float, tail, pointwise;
    for (int i = 0; i < 20; ++i) {
      const ExactFunction e = random_radial_exact(rng, p);
      oracle_exact = oracle_exact && same_image(apply_H(e), apply_H_oracle(e));
      const FloatFunction f = random_s0(rng, p);
      const FloatHImage h = apply_H(f);
      oracle_float(image_distance(h, apply_H_oracle(f)));
      for (int k = 0; k < 3; ++k) {
        const PAdicPoint far = random_point(rng, p, -f.level().a - 3, -f.level().a - 1);
        tail(std::abs(direct_H_at(f, far) - h(far)));
        const PAdicPoint near = random_point(rng, p, -f.level().a, f.level().b + 1);
        pointwise(std::abs(direct_H_at(f, near) - h(near)));
      }
    }
    rec.exact(tag("conductor.oracle_exact", p), "apply_H = Fourier-route oracle on radial exact input", oracle_exact);
    rec.close(tag("conductor.oracle_float", p), "apply_H = Fourier-route oracle on random input", oracle_float.value,
              1e-10);
    rec.close(tag("conductor.tail", p), "kappa / |t| matches G * phi far out", tail.value, 1e-12);
    rec.close(tag("conductor.pointwise", p), "core matches log|t| phi - G(phi(t - .))", pointwise.value, 1e-12);

    // commutation and symmetry
    MaxErr fcomm, dcomm, icomm, acomm, herm;
    bool icomm_exact = true;
    for (int i = 0; i < kRandomPerPrime; ++i) {
      const FloatFunction bal = random_s0_balanced(rng, p);
      {
        // both sides are tail-free up to rounding; the residues count towards the error
        FloatHImage h = apply_H(bal);
        const FloatFunction fbal = fourier(bal);
        std::vector<C> fv(fbal.values().begin(), fbal.values().end());
        const double residue = std::max(std::abs(h.kappa), std::abs(fv[0]));
        h.kappa = 0.0;
        fv[0] = 0.0;
        const FloatFunction fb(fbal.level(), std::move(fv));
        fcomm(std::max(residue, image_distance(apply_H(fb), fourier(h))));
      }
      const FloatFunction phi = random_s0(rng, p);
      const FloatFunction psi = random_s0(rng, p);
      const PAdicPoint x = random_point(rng, p, -2, 2);
      const FloatHImage h = apply_H(phi);
      dcomm(image_distance(apply_H(dilate(phi, x)), dilate(h, x)));
      acomm(image_distance(apply_H(unit_average(phi)), unit_average(h)));
      herm(std::abs(inner_product(h, psi) - std::conj(inner_product(apply_H(psi), phi))));
      const FloatFunction rad = random_radial_s0(rng, p, kShallowLevels);
      icomm(image_distance(apply_H(invert(rad)), invert(apply_H(rad))));
      if (i < 20) {
        const ExactFunction e = random_radial_exact(rng, p, kShallowLevels);
        icomm_exact = icomm_exact && same_image(apply_H(invert(e)), invert(apply_H(e)));
      }
    }
    rec.close(tag("conductor.fourier_commutation", p), "H F = F H on S_0 functions with zero integral", fcomm.value,
              1e-10);
    rec.close(tag("conductor.dilation_commutation", p), "H R_x = R_x H", dcomm.value, 1e-10);
    rec.close(tag("conductor.inversion_commutation", p), "H I = I H on radial functions", icomm.value, 1e-10);
    rec.exact(tag("conductor.inversion_commutation_exact", p), "H I = I H, exact radial input", icomm_exact);
    rec.close(tag("conductor.unit_average_commutation", p), "H commutes with unit averaging", acomm.value, 1e-10);
    rec.close(tag("conductor.hermitian", p), "<H phi, psi> = <phi, H psi>", herm.value, 1e-10);
  }
}

// ---------------------------------------------------------------------------

double laurent_gap_on(const LaurentVector& u, const LaurentVector& v) { return max_abs_diff(u, v); }

void suite_circle(Recorder& rec, TestRng& rng) {
  for (int p : kPrimes) {
    const double lp = std::log(double(p));
    const double sp = std::sqrt(double(p));
    rec.guarded(tag("circle.bridge", p), "m(p, tau log p) = -Lambda(1, 1/2 + i tau), 1001 points", 1e-12, [&] {
      MaxErr e;
      const double half = kPi / lp;
      const FiniteCharacter one = FiniteCharacter::unramified(p);
      for (int j = 0; j <= 1000; ++j) {
        const double tau = -half + 2.0 * half * j / 1000.0;
        e(std::abs(multiplier_m(p, tau * lp) + lambda_finite(one, critical(tau))));
      }
      return e.value;
    });
    rec.guarded(tag("circle.multiplier_points", p), "m at z = 1, -1, i", 1e-13, [&] {
      return std::max({std::abs(multiplier_m(p, 0.0) + 2.0 * lp / (sp - 1.0)),
                       std::abs(multiplier_m(p, kPi) - 2.0 * lp / (sp + 1.0)),
                       std::abs(multiplier_m(p, kPi / 2) - 2.0 * lp / (p + 1.0))});
    });
    rec.guarded(tag("circle.support_circle", p), "endpoints = -2 log p (center -/+ radius)", 1e-12, [&] {
      const SupportInterval s = spectrum_support(p);
      return std::max(std::abs(s.lo + 2.0 * lp * (s.center + s.radius)),
                      std::abs(s.hi + 2.0 * lp * (s.center - s.radius)));
    });
    rec.guarded(tag("circle.apply_e0", p), "H e_0 = -log p sum_{j != 0} p^{-|j|/2} e_j", 1e-14, [&] {
      const LaurentVector h = apply_H_circle(LaurentVector(p, 0, {1.0}));
      MaxErr e;
      for (int j = h.lo(); j <= h.hi(); ++j)
        e(std::abs(h[j] - (j == 0 ? 0.0 : -lp * std::pow(double(p), -0.5 * std::abs(j)))));
      return e.value;
    });

    MaxErr two_route, unitary, comm, f2, inv_route;
    for (int i = 0; i < kRandomPerPrime; ++i) {
      const FloatFunction phi = random_radial_s0(rng, p);
      const LaurentVector v = radial_to_laurent(phi);
      const LaurentVector hv = apply_H_circle(v);
      two_route(laurent_gap_on(radial_to_laurent(apply_H(phi), hv.lo(), hv.hi()), hv));
      const LaurentVector fv = fourier_circle(v);
      unitary(std::abs(fv.norm() - v.norm()));
      unitary(std::abs(inversion_circle(v).norm() - v.norm()));
      comm(max_abs_diff(apply_H_circle(fv), fourier_circle(hv)));
      comm(max_abs_diff(apply_H_circle(inversion_circle(v)), inversion_circle(hv)));
      f2(max_abs_diff(fourier_circle(fv), v));
      const FloatFunction shallow = random_radial_s0(rng, p, kShallowLevels);
      inv_route(max_abs_diff(radial_to_laurent(invert(shallow)), inversion_circle(radial_to_laurent(shallow))));
    }
    rec.close(tag("circle.h_two_route", p), "eta coordinates of H phi = Toeplitz action", two_route.value, 1e-10);
    rec.close(tag("circle.unitarity", p), "Fourier and inversion are unitary on the circle", unitary.value, 1e-10);
    rec.close(tag("circle.commutation", p), "H commutes with both circle unitaries", comm.value, 1e-10);
    rec.close(tag("circle.fourier_squared", p), "Fourier twice is the identity on radial data", f2.value, 1e-10);
    rec.close(tag("circle.inversion_route", p), "inversion reverses the eta coordinates", inv_route.value, 1e-12);
    rec.guarded(tag("circle.fourier_theta", p), "circle Fourier of theta = coordinates of F(theta)", 1e-13, [&] {
      const LaurentVector fv = fourier_circle(radial_to_laurent(make_theta(p, 0)));
      const FloatHImage ft = as_image(to_complex(fourier(make_theta(p, 0))));
      return max_abs_diff(fv, radial_to_laurent(ft, fv.lo(), fv.hi()));
    });
  }

  struct Case {
    int p, N;
  };
  double lo_gap = 0.0, hi_gap = 0.0;
  MaxErr outside, nesting;
  for (const Case& k : {Case{2, 2}, Case{2, 512}, Case{3, 2}, Case{3, 128}, Case{5, 2}, Case{5, 128}}) {
    const SpectrumReport r = toeplitz_spectrum(k.p, k.N);
    outside(r.max_outside);
    if (k.p == 2 && k.N == 512) lo_gap = r.gap_lo, hi_gap = r.gap_hi;
    if (k.N == 2) {
      const SpectrumReport big = toeplitz_spectrum(k.p, k.p == 2 ? 512 : 128);
      nesting(std::max({0.0, big.eigenvalues.front() - r.eigenvalues.front(),
                        r.eigenvalues.back() - big.eigenvalues.back()}));
    }
  }
  rec.close("circle.toeplitz_containment", "Toeplitz eigenvalues inside the support interval", outside.value, 1e-9);
  rec.close("circle.toeplitz_endpoints.p2.N512", "extreme eigenvalues near the endpoints", std::max(lo_gap, hi_gap),
            1e-2);
  rec.exact("circle.toeplitz_nesting", "small truncations sit inside large ones", nesting.value == 0.0, nesting.value);
}

// ---------------------------------------------------------------------------

std::vector<PAdicPoint> sample_points(int p, int v_lo, int v_hi) {
  std::vector<PAdicPoint> out;
  for (int v = v_lo; v <= v_hi; ++v)
    for (int u : {1, 2, 3, 7, 9})
      if (u % p != 0) out.push_back(PAdicPoint::from_unit(p, v, u, 20));
  return out;
}

void suite_explicit(Recorder& rec, TestRng& rng) {
  for (int p : kPrimes) {
    MaxErr diff, est;
    for (int k = -2; k <= 2; ++k) {
      const auto pts = sample_points(p, -4, 4);
      const FiniteCharacter one = FiniteCharacter::unramified(p);
      const ExplicitResult ex = explicit_formula_rhs(one, FiniteProfile::delta(p, k), pts);
      const FloatHImage h = apply_H(homogeneous_section(one, {{k, 1.0}}));
      for (std::size_t i = 0; i < pts.size(); ++i) diff(std::abs(ex.values[i] - h(pts[i])));
      est(ex.error_estimate);
    }
    rec.close(tag("explicit.finite_unramified", p), "critical-line integral = apply_H, trivial chi, g = delta_k",
              diff.value, 1e-8);
    rec.close(tag("explicit.finite_unramified_quadrature", p), "tau quadrature error estimate", est.value, 1e-8);
  }
  for (auto [p, c] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {2, 2}, {2, 3}}) {
    MaxErr diff;
    const auto pts = sample_points(p, -3, 3);
    const FiniteProfile g{p, {{0, 1.0}, {1, C(0.5, 0.25)}, {-1, -0.3}}};
    for (const auto& chi : FiniteCharacter::with_conductor(p, c, rng.uniform())) {
      const ExplicitResult ex = explicit_formula_rhs(chi, g, pts);
      const FloatHImage h = apply_H(homogeneous_section(chi, g.g));
      for (std::size_t i = 0; i < pts.size(); ++i) diff(std::abs(ex.values[i] - h(pts[i])));
    }
    rec.close("explicit.finite_ramified.p" + std::to_string(p) + ".c" + std::to_string(c),
              "critical-line integral = c log p phi", diff.value, 1e-8);
  }

  for (int p : kPrimes) {
    MaxErr roundtrip, parseval, ftwist, iconj, lconj;
    for (int c = 0; c <= 2; ++c) {
      if (p == 2 && c == 1) continue;
      const FiniteCharacter chi = random_character(rng, p, c);
      FiniteProfile g{p, {}};
      for (int k = -2; k <= 2; ++k) g.g[k] = rng.complex();
      const FiniteSpectralFunction f = char_transform(chi, g);
      const auto pts = sample_points(p, -3, 3);
      const auto back = synthesis(f, pts);
      const FloatFunction phi = homogeneous_section(chi, g.g);
      double spectral = 0.0;
      for (const auto& v : f.values) spectral += std::norm(v);
      spectral *= std::log(double(p)) / (2.0 * kPi) * (2.0 * kPi / std::log(double(p))) / f.values.size();
      parseval(std::abs(spectral - std::pow(norm(phi), 2) / alpha_squared_finite(p)));
      for (std::size_t i = 0; i < pts.size(); ++i)
        roundtrip(std::abs(back[i] - std::sqrt(pts[i].norm_double()) * phi(pts[i])));
      lconj(std::abs(lambda_finite(chi, 0.5) - lambda_finite(chi.conj(), 0.5)));
      for (int i = 0; i < 5; ++i) {
        const FloatFunction r = random_s0(rng, p);
        const double tau = rng.uniform(-3.0, 3.0);
        const C lhs = char_transform(fourier(r), chi, tau);
        ftwist(std::abs(lhs - gamma_finite(chi.twist(tau), 0.5) * char_transform(r, chi.inverse(), -tau)));
        iconj(std::abs(char_transform(invert(r), chi, tau) - char_transform(r, chi.inverse(), -tau)));
      }
    }
    rec.close(tag("explicit.finite_synthesis", p), "synthesis inverts the character transform", roundtrip.value, 1e-10);
    rec.close(tag("explicit.finite_parseval", p), "Plancherel on one component", parseval.value, 1e-8);
    rec.close(tag("explicit.fourier_gamma_twist", p), "F becomes Gamma(chi, 1/2) times f(conj chi)", ftwist.value,
              1e-8);
    rec.close(tag("explicit.inversion_conjugation", p), "I becomes f -> f(conj chi)", iconj.value, 1e-8);
    rec.close(tag("explicit.lambda_conjugate", p), "Lambda(chi, 1/2) = Lambda(conj chi, 1/2)", lconj.value, 1e-12);
  }

  // Poisson bridge: log p f(chi w_tau) from p-power samples of g
  for (int p : {2, 3}) {
    rec.guarded(tag("explicit.poisson_bridge", p), "sum_j g^(1/2 + i tau + 2 pi i j / log p) = log p f(w_tau)", 1e-8,
                [&] {
                  const ArchimedeanProfile g = bump_profile();
                  FiniteProfile samples{p, {}};
                  for (int k = -3; k <= 3; ++k) {
                    const double val = g.at(std::pow(double(p), k));
                    if (val != 0.0) samples.g[k] = val;
                  }
                  MaxErr e;
                  for (double tau : {0.0, 0.4, -1.1, 2.5}) {
                    const C s(0.5, tau);
                    e(std::abs(poisson_dual_sum(g, double(p), s, 200) - std::log(double(p)) * mellin(samples, s)));
                  }
                  return e.value;
                });
  }

  for (bool odd : {false, true}) {
    const std::string par = odd ? "odd" : "even";
    const ArchimedeanProfile g = odd ? odd_gaussian_profile() : gaussian_profile();
    const std::vector<double> xs = {-2.0, -1.3, -0.7, -0.2, 0.1, 0.35, 0.8, 1.5, 2.2};
    rec.guarded("explicit.real." + par + ".two_route", "direct H = critical-line integral of Lambda", 1e-4, [&] {
      return apply_H_real(g, odd, xs).discrepancy;
    });
    const RealCharacter chi(odd);
    const RealSpectralFunction f = char_transform(chi, g);
    rec.guarded("explicit.real." + par + ".synthesis", "synthesis inverts the character transform", 1e-6, [&] {
      const auto back = synthesis(f, xs);
      MaxErr e;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double ax = std::abs(xs[i]);
        const double sign = odd && xs[i] < 0 ? -1.0 : 1.0;
        e(std::abs(back[i] - sign * std::sqrt(ax) * g.at(ax)));
      }
      return e.value;
    });
    rec.guarded("explicit.real." + par + ".parseval", "Plancherel on one component", 1e-8, [&] {
      double spectral = 0.0;
      for (std::size_t i = 0; i < f.values.size(); ++i) spectral += f.weights[i] * std::norm(f.values[i]);
      spectral /= 2.0 * kPi;
      // int_0^inf g(u)^2 du for exp(-pi u^2) and u exp(-pi u^2)
      const double direct = odd ? std::sqrt(std::numbers::pi) / (4.0 * std::pow(2.0 * kPi, 1.5)) : 0.5 / std::sqrt(2.0);
      return std::abs(spectral - direct);
    });
    rec.guarded("explicit.real." + par + ".lambda_conjugate", "Lambda(chi, 1/2) = Lambda(conj chi, 1/2)", 1e-12, [&] {
      MaxErr e;
      for (double tau : {0.0, 0.7, -2.3})
        e(std::abs(lambda_real(chi.twist(tau), 0.5) - lambda_real(chi.twist(tau).conj(), 0.5)));
      return e.value;
    });
  }
}

// ---------------------------------------------------------------------------

void suite_poisson(Recorder& rec, TestRng& rng) {
  const ArchimedeanProfile bump = bump_profile();
  rec.guarded("poisson.bump.x2", "log x sum_k g(x^k) = sum_j g^(2 pi i j / log x), 200 terms", 1e-8,
              [&] { return poisson_check(bump, 2.0, 200, 200).diff; });
  rec.guarded("poisson.single_term.x20", "support inside (1/x, x) leaves log x g(1)", 1e-14, [&] {
    return std::abs(poisson_direct_sum(bump, 20.0, 0.0, 200) - std::log(20.0) * bump.at(1.0));
  });
  rec.guarded("poisson.symmetric_profile", "g(u) = g(1/u) pairs the terms k and -k", 1e-12, [&] {
    MaxErr e;
    for (int k = 1; k <= 3; ++k) e(std::abs(bump.at(std::pow(2.0, k)) - bump.at(std::pow(2.0, -k))));
    for (double u : {0.5, 0.8, 1.3, 2.1}) e(std::abs(bump.at(u) - bump.at(1.0 / u)));
    return e.value;
  });
  MaxErr sym, series, conj_sym, gauss;
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(1.5, 10.0);
    const C s(rng.uniform(0.3, 2.0), rng.uniform(-5.0, 5.0));
    sym(std::abs(lambda_x(x, s) + lambda_x(x, -s) + std::log(x)));
    C acc{};
    for (int k = 1; k <= 200; ++k) acc += std::exp(-double(k) * s * std::log(x));
    series(std::abs(lambda_x(x, s) - std::log(x) * acc));
  }
  const ArchimedeanProfile gp = gaussian_profile();
  for (int i = 0; i < 10; ++i) {
    const C s(rng.uniform(0.2, 3.0), rng.uniform(-6.0, 6.0));
    conj_sym(std::abs(mellin(gp, std::conj(s)) - std::conj(mellin(gp, s))));
    // int_0^inf exp(-pi u^2) u^s du / u = pi^{-s/2} Gamma(s/2) / 2
    const C want = 0.5 * std::exp(special::lgamma(0.5 * s) - 0.5 * s * std::log(kPi));
    gauss(std::abs(mellin(gp, s) - want));
  }
  rec.close("poisson.lambda_x_symmetry", "Lambda_x(s) + Lambda_x(-s) = -log x", sym.value, 1e-12);
  rec.close("poisson.lambda_x_series", "Lambda_x(s) = log x sum_{k >= 1} x^{-ks}, 200 terms", series.value, 1e-12);
  rec.guarded("poisson.lambda_x_residue", "s Lambda_x(s) -> 1 at s = 0", 1e-5, [] {
    MaxErr e;
    for (double x : {2.0, 3.0, 10.0}) e(std::abs(1e-7 * lambda_x(x, 1e-7) - 1.0));
    return e.value;
  });
  rec.close("poisson.mellin_conjugation", "g^(conj s) = conj g^(s) for real g", conj_sym.value, 1e-14);
  rec.close("poisson.mellin_gaussian", "Mellin of exp(-pi u^2) = pi^{-s/2} Gamma(s/2) / 2", gauss.value, 1e-8);
}

using SuiteFn = void (*)(Recorder&, TestRng&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"function-space", suite_function_space}, {"gamma", suite_gamma},       {"conductor", suite_conductor},
    {"circle", suite_circle},                 {"explicit", suite_explicit}, {"poisson", suite_poisson},
};

}  // namespace

bool VerificationReport::overall() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& options) {
  VerificationReport report;
  report.suite = suite;
  report.seed = options.seed;
  Recorder rec(report, options);
  const auto t0 = std::chrono::steady_clock::now();
  bool found = false;
  for (std::size_t i = 0; i < std::size(kSuites); ++i) {
    if (suite != "all" && suite != kSuites[i].name) continue;
    found = true;
    // each suite gets its own stream, so a suite's rows do not depend on what ran before it
    TestRng rng(options.seed * 0x9E3779B97F4A7C15ULL + i);
    kSuites[i].fn(rec, rng);
  }
  if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace conductor_lab
