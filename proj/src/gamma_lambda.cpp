#include "conductor_lab/gamma_lambda.hpp"

#include <cmath>
#include <numbers>

#include "conductor_lab/special.hpp"

namespace conductor_lab {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

/// Unramified chi with chi(p) = exp(2 pi i beta) satisfies chi(x)|x|^s = |x|^{s'}.
C effective_s(const FiniteCharacter& chi, C s) {
  const double log_p = std::log(static_cast<double>(chi.prime()));
  return s - C(0.0, 2.0 * kPi * chi.chi_p_turns() / log_p);
}

C p_power(int p, C s) { return std::exp(s * std::log(static_cast<double>(p))); }

void check_real_pole(C z, const char* what) {
  // z is an argument of Gamma
  if (special::distance_to_pole(z) < kPoleTolerance) throw PoleError(what);
}

}  // namespace

C gauss_sum(const FiniteCharacter& chi) {
  const int p = chi.prime();
  const std::int64_t m = ipow(p, chi.c());
  C acc{};
  for (std::int64_t u = 1; u < m; ++u) {
    if (u % p == 0) continue;
    const double a = 2.0 * kPi * static_cast<double>(u) / static_cast<double>(m);
    acc += chi.eval_unit(u) * C(std::cos(a), std::sin(a));
  }
  return acc;
}

C gamma_finite(const FiniteCharacter& chi, C s) {
  const int p = chi.prime();
  if (chi.is_ramified()) {
    // y = 1: only the shell |t| = p^c meets the support of the Gauss sum,
    // t = p^{-c} u contributes chi(p)^{-c} chi_0(u) exp(2 pi i u / p^c).
    const int c = chi.c();
    return p_power(p, double(c) * (s - 1.0)) * std::pow(chi.value_at_p(), -c) * gauss_sum(chi);
  }
  const C se = effective_s(chi, s);
  const C den = 1.0 - p_power(p, -se);
  if (std::abs(den) < kPoleTolerance) throw PoleError("gamma_finite: pole of the unramified factor");
  return (1.0 - p_power(p, se - 1.0)) / den;
}

C lambda_finite(const FiniteCharacter& chi, C s) {
  const int p = chi.prime();
  const double lp = std::log(static_cast<double>(p));
  if (chi.is_ramified()) return {-chi.c() * lp, 0.0};
  const C se = effective_s(chi, s);
  const C a = p_power(p, se - 1.0);
  const C b = p_power(p, -se);
  if (std::abs(1.0 - a) < kPoleTolerance || std::abs(1.0 - b) < kPoleTolerance)
    throw PoleError("lambda_finite: pole");
  return lp * (a / (1.0 - a) + b / (1.0 - b));
}

C gamma_real(const RealCharacter& chi, C s) {
  const C se = s + C(0.0, chi.tau());
  if (!chi.odd()) {
    check_real_pole(0.5 * se, "gamma_real: pole");
    return std::exp(special::log_gamma_r(se) - special::log_gamma_r(1.0 - se));
  }
  check_real_pole(0.5 * (se + 1.0), "gamma_real: pole");
  return C(0.0, -1.0) * std::exp(special::log_gamma_r(se + 1.0) - special::log_gamma_r(2.0 - se));
}

C lambda_real(const RealCharacter& chi, C s) {
  const C se = s + C(0.0, chi.tau());
  const C a = chi.odd() ? 0.5 * (se + 1.0) : 0.5 * se;
  const C b = chi.odd() ? 0.5 * (2.0 - se) : 0.5 * (1.0 - se);
  check_real_pole(a, "lambda_real: pole");
  check_real_pole(b, "lambda_real: pole");
  return std::log(kPi) - 0.5 * (special::digamma(a) + special::digamma(b));
}

ExactScalar lambda_ramified_parametric(int q, int delta, int c) {
  if (c < 1) throw std::invalid_argument("lambda_ramified_parametric: c must be >= 1");
  if (delta < 0) throw std::invalid_argument("lambda_ramified_parametric: delta must be >= 0");
  if (q < 2) throw std::invalid_argument("lambda_ramified_parametric: q must be a prime power");
  return ExactScalar::log_p(q, Rational(-(c + delta)));
}

}  // namespace conductor_lab
