#include "conductor_lab/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace conductor_lab::oracle {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

/// int_{|t| = p^k} chi_0(unit of t) lambda(t y) dt, by cosets mod p^m of the unit part.
C shell_sum(const FiniteCharacter& chi, int k, const PAdicPoint& y) {
  const int p = chi.prime();
  const int w = y.valuation();
  const int m = std::max({chi.c(), k - w, 1});
  const std::int64_t mod_m = ipow(p, m);
  const std::int64_t uy = y.unit_residue(m);
  // t y = p^{w-k} u uy, and its fractional part only depends on u uy mod p^{k-w}
  const int depth = k - w;
  const std::int64_t mod_d = depth > 0 ? ipow(p, depth) : 1;
  const std::int64_t den = chi.c() > 0 ? ipow(p, chi.c()) : 1;
  C acc{};
  for (std::int64_t u = 1; u < mod_m; ++u) {
    if (u % p == 0) continue;
    const C unit = chi.c() > 0 ? chi.eval_unit(u % den) : C(1.0);
    double frac = 0.0;
    if (depth > 0) frac = static_cast<double>(mul_mod(u % mod_d, uy % mod_d, mod_d)) / static_cast<double>(mod_d);
    acc += unit * std::polar(1.0, 2.0 * kPi * frac);
  }
  // each coset p^{-k}(u + p^m Z_p) has measure p^{k - m}
  return acc * std::pow(double(p), double(k - m));
}

/// int_0^inf F(u) u^{s} du/u by the trapezoid rule in v = log u, with F ~ c0 + c2 u^2 below v0.
template <class F>
C mellin_on_line(F&& fn, C s, double c0, double c2, double v0, double v1, double h) {
  const int n = static_cast<int>(std::lround((v1 - v0) / h));
  C acc{};
  for (int i = 0; i <= n; ++i) {
    const double v = v0 + h * i;
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    acc += w * fn(std::exp(v)) * std::exp(v * s);
  }
  acc *= h;
  if (c0 != 0.0) {
    // analytic part below v0, and the Euler-Maclaurin end terms of c0 e^{v s} at v0
    const C e = c0 * std::exp(v0 * s);
    acc += e / s + h * h / 12.0 * s * e - std::pow(h, 4) / 720.0 * s * s * s * e;
  }
  if (c2 != 0.0) acc += c2 * std::exp(v0 * (s + 2.0)) / (s + 2.0);
  return acc;
}

}  // namespace

C homogeneous_fourier_at(const FiniteCharacter& chi, C s, const PAdicPoint& y) {
  if (y.is_zero()) throw std::invalid_argument("oracle: y = 0");
  if (s.real() <= 0.0) throw std::invalid_argument("oracle: needs Re s > 0");
  const int p = chi.prime();
  const int w = y.valuation();
  const C chi_p = chi.value_at_p();
  // t = p^{-k} u on the shell |t| = p^k: chi(t) |t|^{s-1} = chi(p)^{-k} p^{k(s-1)} chi_0(u)
  auto weight = [&](int k) { return std::pow(chi_p, -k) * std::exp(double(k) * (s - 1.0) * std::log(double(p))); };
  C acc{};
  if (!chi.is_ramified()) {
    // shells k <= w: lambda = 1, shell volume p^k (1 - 1/p); sum_{k <= w} q^k = q^w / (1 - 1/q)
    const C q = std::exp(s * std::log(double(p))) / chi_p;
    acc += (1.0 - 1.0 / p) * std::pow(q, w) / (1.0 - 1.0 / q);
  }
  const int last = w + chi.c() + 3;
  for (int k = w + 1; k <= last; ++k) acc += weight(k) * shell_sum(chi, k, y);
  return acc;
}

C gamma_finite(const FiniteCharacter& chi, C s, const PAdicPoint& y) {
  const int p = chi.prime();
  const C rhs = std::conj(chi.eval(y)) * std::exp(double(y.valuation()) * s * std::log(double(p)));
  return homogeneous_fourier_at(chi, s, y) / rhs;
}

C gamma_real(const RealCharacter& chi, C s) {
  if (s.real() <= 0.0 || s.real() >= 1.0) throw std::invalid_argument("oracle: needs 0 < Re s < 1");
  const C se = s + C(0.0, chi.tau());
  const double a = 2.0;
  const bool odd = chi.odd();
  auto psi = [&](double y) { return (odd ? y : 1.0) * std::exp(-kPi * a * y * y); };
  // F(psi)(x) = int psi(y) exp(-2 pi i x y) dy: cosine transform (even), -i sine transform (odd)
  const double hy = 0.02;
  const int ny = 300;
  auto fpsi = [&](double x) {
    double acc = 0.0;
    for (int i = 1; i <= ny; ++i) {
      const double y = i * hy;
      acc += psi(y) * (odd ? std::sin(2.0 * kPi * x * y) : std::cos(2.0 * kPi * x * y));
    }
    acc = 2.0 * acc + (odd ? 0.0 : psi(0.0));
    return acc * hy;
  };
  // small-x behavior, for the analytic part of the line integrals
  double f0 = 0.0, f2 = 0.0;
  if (!odd) {
    f0 = fpsi(0.0);
    f2 = -kPi * f0 / a;  // F(psi)(x) = a^{-1/2} exp(-pi x^2 / a)
  }
  const double v0 = -30.0, v1 = 3.0, hv = 0.01;
  // <chi |x|^{s-1}, F psi> = 2 int_0^inf x^{s} F(psi)(x) dx / x, then -i for the odd transform
  C numer = 2.0 * mellin_on_line(fpsi, se, f0, f2, v0, v1, hv);
  if (odd) numer *= C(0.0, -1.0);
  // <chi^{-1} |y|^{-s}, psi> = 2 int_0^inf y^{1-s} psi(y) dy / y
  const double p0 = odd ? 0.0 : 1.0;
  const double p2 = odd ? 0.0 : -kPi * a;
  const C denom = 2.0 * mellin_on_line(psi, 1.0 - se, p0, p2, v0, v1, hv);
  return numer / denom;
}

C lambda_real(const RealCharacter& chi, C s, double step) {
  const C g = gamma_real(chi, s);
  const C d = (-gamma_real(chi, s + 2.0 * step) + 8.0 * gamma_real(chi, s + step) - 8.0 * gamma_real(chi, s - step) +
               gamma_real(chi, s - 2.0 * step)) /
              (12.0 * step);
  return -d / g;
}

}  // namespace conductor_lab::oracle
