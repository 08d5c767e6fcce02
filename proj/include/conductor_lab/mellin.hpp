#pragma once

// Mellin transforms, character transforms and the explicit formula.
//
// Multiplicative measures: d*x = alpha^{-2} dx/|x| with alpha^2 = 1 - 1/p on
// Q_p^x (units get volume 1) and alpha^2 = 2 on R^x.
//
// Test data come from a radial profile g: phi(t) = g(|t|) chi^{-1}(t) and
// f(x) = sqrt|x| phi(x). Then
//
//   finite place:  f(chi w_tau) = sum_k g(p^k) p^{k (1/2 + i tau)}
//   real place:    f(chi w_tau) = g^(1/2 + i tau)
//
// and H(phi)(x) = F(x) / sqrt|x| with F the critical-line integral of
// -f(chi w_tau) Lambda(chi w_tau, 1/2) conj(chi w_tau(x)).

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "conductor_lab/characters.hpp"
#include "conductor_lab/function_space.hpp"
#include "conductor_lab/padic_point.hpp"

namespace conductor_lab {

inline constexpr int kFiniteTauNodes = 4096;

double alpha_squared_finite(int p);
inline constexpr double kAlphaSquaredReal = 2.0;

/// k -> g(p^k), finitely supported.
struct FiniteProfile {
  int p = 2;
  std::map<int, Complex> g;

  static FiniteProfile delta(int p, int k, Complex value = 1.0) { return {p, {{k, value}}}; }
  Complex at_exponent(int k) const;
};

/// g sampled uniformly in v = log u on [v0, v0 + h (n - 1)]; g = g_at_zero
/// below the grid and 0 above it. Values between samples use 4-point cubic
/// (Lagrange) interpolation in v.
struct ArchimedeanProfile {
  double v0 = 0.0;
  double h = 0.0;
  std::vector<double> samples;
  double g_at_zero = 0.0;

  static ArchimedeanProfile sample(const std::function<double(double)>& g, double v0, double v1, int n,
                                   double g_at_zero = 0.0);
  double v_end() const { return v0 + h * static_cast<double>(samples.size() - 1); }
  double at(double u) const;
  double at_log(double v) const;
};

/// exp(-pi u^2), sampled on v in [-60, 2.5]
ArchimedeanProfile gaussian_profile();
/// u exp(-pi u^2), for the odd test function t exp(-pi t^2)
ArchimedeanProfile odd_gaussian_profile();
/// exp(-1 / (1 - v^2)) with v = log u, supported in (1/e, e)
ArchimedeanProfile bump_profile(int n = 32769);

/// sum_k g(p^k) p^{k s}
Complex mellin(const FiniteProfile& g, Complex s);
/// int_0^inf g(u) u^s du/u by the trapezoid rule in v, plus the analytic
/// contribution g_at_zero e^{v0 s} / s of the region below the grid.
Complex mellin(const ArchimedeanProfile& g, Complex s);

/// log x * x^{-s} / (1 - x^{-s})
Complex lambda_x(double x, Complex s);

/// sum_{|j| <= J} g^(s + 2 pi i j / log x)
Complex poisson_dual_sum(const ArchimedeanProfile& g, double x, Complex s, int J);
/// log x * sum_{|k| <= K} g(x^k) x^{k s}
Complex poisson_direct_sum(const ArchimedeanProfile& g, double x, Complex s, int K);

struct PoissonResult {
  double x = 0.0;
  int K = 0;
  int J = 0;
  Complex lhs;
  Complex rhs;
  double diff = 0.0;
};

PoissonResult poisson_check(const ArchimedeanProfile& g, double x, int K = 200, int J = 200);

/// A tau grid on one component of S_nu with the values f(chi w_tau).
struct FiniteSpectralFunction {
  FiniteCharacter component;
  std::vector<double> tau;  // uniform over [-pi/log p, pi/log p)
  std::vector<Complex> values;
};

struct RealSpectralFunction {
  RealCharacter component;
  double half_width = 0.0;      // T
  std::vector<double> tau;      // Gauss-Legendre nodes on [-T, T]
  std::vector<double> weights;  // matching quadrature weights
  std::vector<Complex> values;
};

std::vector<double> periodic_tau_grid(int p, int nodes = kFiniteTauNodes);

/// f(chi w_tau) for f built from (chi, g).
FiniteSpectralFunction char_transform(const FiniteCharacter& chi, const FiniteProfile& g,
                                      int nodes = kFiniteTauNodes);
/// int sqrt|x| phi(x) chi(x) |x|^{i tau} d*x for an arbitrary test function.
Complex char_transform(const FloatFunction& phi, const FiniteCharacter& chi, double tau);

/// Gauss-Legendre panels on [-T, T] where T is the first multiple of the panel
/// width beyond which |g^(1/2 + i tau)| stays below `decay`.
RealSpectralFunction char_transform(const RealCharacter& chi, const ArchimedeanProfile& g, double decay = 1e-12);

/// (log p / 2 pi) int f(chi w_tau) conj(chi w_tau(x)) d tau
std::vector<Complex> synthesis(const FiniteSpectralFunction& f, const std::vector<PAdicPoint>& x);
/// (1 / 2 pi) int f(chi w_tau) conj(chi w_tau(x)) d tau
std::vector<Complex> synthesis(const RealSpectralFunction& f, const std::vector<double>& x);

struct ExplicitResult {
  std::vector<Complex> values;  // H(phi) at the points
  /// |values(nodes) - values(nodes / 2)|, the quadrature error estimate
  double error_estimate = 0.0;
};

ExplicitResult explicit_formula_rhs(const FiniteCharacter& chi, const FiniteProfile& g,
                                    const std::vector<PAdicPoint>& x, int nodes = kFiniteTauNodes);
ExplicitResult explicit_formula_rhs(const RealCharacter& chi, const ArchimedeanProfile& g,
                                    const std::vector<double>& x);

/// Grid for the direct additive route at the real place.
struct RealGrid {
  double t_half_width = 7.0;  // phi sampled on [-L, L]
  double t_step = 0.05;
  double xi_half_width = 7.0;
  double xi_step = 5e-4;
};

/// log|t| phi(t) + F(log|xi| F^{-1} phi)(t), lambda(t) = exp(-2 pi i t), with
/// phi(t) = g(|t|) sgn(t)^parity.
std::vector<Complex> apply_H_real_direct(const ArchimedeanProfile& g, bool odd, const std::vector<double>& x,
                                         const RealGrid& grid = {});

struct RealHResult {
  std::vector<double> points;
  std::vector<Complex> direct;
  std::vector<Complex> spectral;
  double discrepancy = 0.0;
  double quadrature_error = 0.0;
};

RealHResult apply_H_real(const ArchimedeanProfile& g, bool odd, const std::vector<double>& x,
                         const RealGrid& grid = {});

}  // namespace conductor_lab
