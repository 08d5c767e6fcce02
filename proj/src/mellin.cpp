#include "conductor_lab/mellin.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conductor_lab/gamma_lambda.hpp"
#include "conductor_lab/kernels.hpp"

namespace conductor_lab {

namespace {

using C = Complex;
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr int kGaussOrder = 16;
constexpr double kMaxLineHalfWidth = 400.0;

/// Gauss-Legendre nodes and weights for panels of the given width covering [-T, T].
void line_panels(double T, double width, std::vector<double>& nodes, std::vector<double>& weights) {
  using Rule = boost::math::quadrature::gauss<double, kGaussOrder>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  nodes.clear();
  weights.clear();
  const int panels = static_cast<int>(std::lround(2.0 * T / width));
  for (int k = 0; k < panels; ++k) {
    const double mid = -T + (k + 0.5) * width;
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        nodes.push_back(mid);
        weights.push_back(half * w[i]);
        continue;
      }
      nodes.push_back(mid - half * x[i]);
      weights.push_back(half * w[i]);
      nodes.push_back(mid + half * x[i]);
      weights.push_back(half * w[i]);
    }
  }
}

std::vector<C> profile_line_values(const ArchimedeanProfile& g, const std::vector<double>& tau) {
  std::vector<C> out(tau.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < tau.size(); ++i) out[i] = mellin(g, C(0.5, tau[i]));
  return out;
}

double max_abs(const std::vector<C>& v, std::size_t from, std::size_t to) {
  double m = 0.0;
  for (std::size_t i = from; i < to; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

std::vector<C> real_explicit_values(const RealCharacter& chi, const RealSpectralFunction& f,
                                    const std::vector<double>& x) {
  std::vector<C> coeff(f.tau.size());
  for (std::size_t i = 0; i < f.tau.size(); ++i)
    coeff[i] = -f.weights[i] / (2.0 * kPi) * f.values[i] * lambda_real(chi, C(0.5, f.tau[i]));
  std::vector<double> theta(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0.0) throw std::domain_error("explicit_formula_rhs: x = 0");
    theta[j] = std::log(std::abs(x[j]));
  }
  std::vector<C> out = kernels::phase_sum(f.tau, coeff, theta);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double sign = (chi.odd() && x[j] < 0) ? -1.0 : 1.0;
    out[j] *= sign / std::sqrt(std::abs(x[j]));
  }
  return out;
}

}  // namespace

double alpha_squared_finite(int p) { return 1.0 - 1.0 / p; }

Complex FiniteProfile::at_exponent(int k) const {
  const auto it = g.find(k);
  return it == g.end() ? C{} : it->second;
}

ArchimedeanProfile ArchimedeanProfile::sample(const std::function<double(double)>& g, double v0, double v1, int n,
                                              double g_at_zero) {
  if (n < 4 || !(v1 > v0)) throw std::invalid_argument("ArchimedeanProfile: need n >= 4 and v1 > v0");
  ArchimedeanProfile prof;
  prof.v0 = v0;
  prof.h = (v1 - v0) / (n - 1);
  prof.g_at_zero = g_at_zero;
  prof.samples.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) prof.samples[static_cast<std::size_t>(i)] = g(std::exp(v0 + prof.h * i));
  return prof;
}

double ArchimedeanProfile::at_log(double v) const {
  if (v < v0) return g_at_zero;
  if (v > v_end()) return 0.0;
  const auto n = static_cast<long>(samples.size());
  const double x = (v - v0) / h;
  long i = static_cast<long>(std::floor(x)) - 1;
  i = std::clamp(i, 0L, n - 4);
  const double t = x - static_cast<double>(i);
  const double y0 = samples[static_cast<std::size_t>(i)];
  const double y1 = samples[static_cast<std::size_t>(i + 1)];
  const double y2 = samples[static_cast<std::size_t>(i + 2)];
  const double y3 = samples[static_cast<std::size_t>(i + 3)];
  // Lagrange basis on the nodes 0, 1, 2, 3
  return -y0 * (t - 1) * (t - 2) * (t - 3) / 6 + y1 * t * (t - 2) * (t - 3) / 2 - y2 * t * (t - 1) * (t - 3) / 2 +
         y3 * t * (t - 1) * (t - 2) / 6;
}

double ArchimedeanProfile::at(double u) const {
  if (u < 0) throw std::domain_error("ArchimedeanProfile: u < 0");
  if (u == 0) return g_at_zero;
  return at_log(std::log(u));
}

ArchimedeanProfile gaussian_profile() {
  return ArchimedeanProfile::sample([](double u) { return std::exp(-kPi * u * u); }, -60.0, 2.5, 12501, 1.0);
}

ArchimedeanProfile odd_gaussian_profile() {
  return ArchimedeanProfile::sample([](double u) { return u * std::exp(-kPi * u * u); }, -60.0, 2.5, 12501, 0.0);
}

ArchimedeanProfile bump_profile(int n) {
  auto g = [](double u) {
    const double v = std::log(u);
    return std::abs(v) < 1.0 ? std::exp(-1.0 / (1.0 - v * v)) : 0.0;
  };
  return ArchimedeanProfile::sample(g, -1.0, 1.0, n, 0.0);
}

Complex mellin(const FiniteProfile& g, Complex s) {
  const double lp = std::log(static_cast<double>(g.p));
  C acc{};
  for (const auto& [k, v] : g.g) acc += v * std::exp(double(k) * lp * s);
  return acc;
}

Complex mellin(const ArchimedeanProfile& g, Complex s) {
  const std::size_t n = g.samples.size();
  C acc{};
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    const double y = g.samples[i];
    if (y == 0.0) continue;
    acc += w * y * std::exp((g.v0 + g.h * static_cast<double>(i)) * s);
  }
  acc *= g.h;
  if (g.g_at_zero != 0.0) {
    if (s.real() <= 0.0) throw std::domain_error("mellin: divergent at u = 0 for Re s <= 0");
    acc += g.g_at_zero * std::exp(g.v0 * s) / s;
  }
  return acc;
}

Complex lambda_x(double x, Complex s) {
  if (!(x > 1.0)) throw std::invalid_argument("lambda_x: x must exceed 1");
  const C q = std::exp(-std::log(x) * s);
  if (std::abs(1.0 - q) < kPoleTolerance) throw PoleError("lambda_x: pole");
  return std::log(x) * q / (1.0 - q);
}

Complex poisson_dual_sum(const ArchimedeanProfile& g, double x, Complex s, int J) {
  const double step = 2.0 * kPi / std::log(x);
  std::vector<C> terms(static_cast<std::size_t>(2 * J + 1));
#pragma omp parallel for schedule(static)
  for (int j = -J; j <= J; ++j) terms[static_cast<std::size_t>(j + J)] = mellin(g, s + C(0.0, step * j));
  // sum from the smallest terms inwards
  C acc{};
  for (int j = J; j >= 1; --j) acc += terms[static_cast<std::size_t>(J + j)] + terms[static_cast<std::size_t>(J - j)];
  return acc + terms[static_cast<std::size_t>(J)];
}

Complex poisson_direct_sum(const ArchimedeanProfile& g, double x, Complex s, int K) {
  const double lx = std::log(x);
  C acc{};
  for (int k = -K; k <= K; ++k) {
    const double y = g.at_log(k * lx);
    if (y != 0.0) acc += y * std::exp(k * lx * s);
  }
  return lx * acc;
}

PoissonResult poisson_check(const ArchimedeanProfile& g, double x, int K, int J) {
  PoissonResult r;
  r.x = x;
  r.K = K;
  r.J = J;
  r.lhs = poisson_direct_sum(g, x, 0.0, K);
  r.rhs = poisson_dual_sum(g, x, 0.0, J);
  r.diff = std::abs(r.lhs - r.rhs);
  return r;
}

std::vector<double> periodic_tau_grid(int p, int nodes) {
  if (nodes < 2) throw std::invalid_argument("periodic_tau_grid: need at least 2 nodes");
  const double period = 2.0 * kPi / std::log(static_cast<double>(p));
  std::vector<double> tau(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) tau[static_cast<std::size_t>(j)] = -0.5 * period + period * j / nodes;
  return tau;
}

FiniteSpectralFunction char_transform(const FiniteCharacter& chi, const FiniteProfile& g, int nodes) {
  if (g.p != chi.prime()) throw std::invalid_argument("mixed primes");
  FiniteSpectralFunction f{chi, periodic_tau_grid(chi.prime(), nodes), {}};
  f.values.reserve(f.tau.size());
  for (double t : f.tau) f.values.push_back(mellin(g, C(0.5, t)));
  return f;
}

Complex char_transform(const FloatFunction& phi, const FiniteCharacter& chi, double tau) {
  const int p = phi.prime();
  if (p != chi.prime()) throw std::invalid_argument("mixed primes");
  const int c = chi.c();
  const Level base = phi.level();
  // every coset off the ball must resolve the unit part to c digits
  const FloatFunction f = phi.refined(base.a, base.b + c);
  const Level& lv = f.level();
  const FiniteCharacter ct = chi.twist(tau);
  const C chi_p = ct.value_at_p();
  const double unit_volume = 1.0 / (1.0 - 1.0 / p);
  const std::int64_t modulus = ipow(p, c);
  C acc{};
  for (std::int64_t n = 1; n < f.dim(); ++n) {
    const C& v = f.value(n);
    if (v == C{}) continue;
    const int j = valuation(n, p);
    const int k = lv.coset_valuation(n);  // x = p^k u
    // u known to fewer than c digits: chi_0 sums to zero over the coset
    if (lv.b - k < c) continue;
    std::int64_t u = n;
    for (int i = 0; i < j; ++i) u /= p;
    const C unit = c > 0 ? chi.eval_unit(u % modulus) : C(1.0);
    const double measure = std::pow(double(p), double(k - lv.b)) * unit_volume;
    acc += v * std::pow(double(p), -0.5 * k) * std::pow(chi_p, k) * unit * measure;
  }
  if (c == 0 && f.origin_value() != C{}) {
    const C r = chi_p / std::sqrt(double(p));
    acc += f.origin_value() * std::pow(r, lv.b) / (1.0 - r);
  }
  return acc;
}

RealSpectralFunction char_transform(const RealCharacter& chi, const ArchimedeanProfile& g, double decay) {
  RealSpectralFunction f{chi, 0.0, {}, {}, {}};
  double T = 4.0;
  for (;; T += 2.0) {
    if (T > kMaxLineHalfWidth) throw std::runtime_error("char_transform: profile transform does not decay");
    const std::vector<double> edge = {T - 1.0, T - 0.5, T, -T, -T + 0.5, -T + 1.0};
    const auto vals = profile_line_values(g, edge);
    if (max_abs(vals, 0, vals.size()) < decay) break;
  }
  f.half_width = T;
  line_panels(T, 1.0, f.tau, f.weights);
  f.values = profile_line_values(g, f.tau);
  return f;
}

std::vector<Complex> synthesis(const FiniteSpectralFunction& f, const std::vector<PAdicPoint>& x) {
  const int p = f.component.prime();
  const double lp = std::log(static_cast<double>(p));
  const double scale = 1.0 / static_cast<double>(f.tau.size());
  std::vector<C> coeff(f.values.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = scale * f.values[i];
  std::vector<double> theta(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) throw std::domain_error("synthesis: x = 0");
    theta[j] = -x[j].valuation() * lp;  // |x|^{-i tau} = exp(-i tau log|x|)
  }
  std::vector<C> out = kernels::phase_sum(f.tau, coeff, theta);
  for (std::size_t j = 0; j < x.size(); ++j) out[j] *= std::conj(f.component.eval(x[j]));
  return out;
}

std::vector<Complex> synthesis(const RealSpectralFunction& f, const std::vector<double>& x) {
  std::vector<C> coeff(f.values.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = f.weights[i] / (2.0 * kPi) * f.values[i];
  std::vector<double> theta(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0.0) throw std::domain_error("synthesis: x = 0");
    theta[j] = std::log(std::abs(x[j]));
  }
  std::vector<C> out = kernels::phase_sum(f.tau, coeff, theta);
  for (std::size_t j = 0; j < x.size(); ++j) out[j] *= std::conj(f.component.eval(x[j]));
  return out;
}

ExplicitResult explicit_formula_rhs(const FiniteCharacter& chi, const FiniteProfile& g,
                                    const std::vector<PAdicPoint>& x, int nodes) {
  if (nodes % 2 != 0) throw std::invalid_argument("explicit_formula_rhs: node count must be even");
  const int p = chi.prime();
  const double lp = std::log(static_cast<double>(p));
  const FiniteSpectralFunction f = char_transform(chi, g, nodes);
  std::vector<C> coeff(f.tau.size());
  for (std::size_t i = 0; i < coeff.size(); ++i)
    coeff[i] = -f.values[i] * lambda_finite(chi.twist(f.tau[i]), 0.5) / static_cast<double>(nodes);
  // the even-indexed nodes are the grid with half as many points
  std::vector<double> tau_half;
  std::vector<C> coeff_half;
  for (std::size_t i = 0; i < coeff.size(); i += 2) {
    tau_half.push_back(f.tau[i]);
    coeff_half.push_back(2.0 * coeff[i]);
  }
  std::vector<double> theta(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) throw std::domain_error("explicit_formula_rhs: x = 0");
    theta[j] = -x[j].valuation() * lp;
  }
  ExplicitResult r;
  r.values = kernels::phase_sum(f.tau, coeff, theta);
  const std::vector<C> coarse = kernels::phase_sum(tau_half, coeff_half, theta);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const C factor = std::conj(chi.eval(x[j])) * std::pow(double(p), 0.5 * x[j].valuation());
    r.values[j] *= factor;
    r.error_estimate = std::max(r.error_estimate, std::abs(r.values[j] - coarse[j] * factor));
  }
  return r;
}

ExplicitResult explicit_formula_rhs(const RealCharacter& chi, const ArchimedeanProfile& g,
                                    const std::vector<double>& x) {
  const RealSpectralFunction f = char_transform(chi, g);
  ExplicitResult r;
  r.values = real_explicit_values(chi, f, x);
  // same truncation, panels twice as wide
  RealSpectralFunction coarse{chi, f.half_width, {}, {}, {}};
  line_panels(f.half_width, 2.0, coarse.tau, coarse.weights);
  coarse.values = profile_line_values(g, coarse.tau);
  const std::vector<C> cv = real_explicit_values(chi, coarse, x);
  for (std::size_t j = 0; j < x.size(); ++j) r.error_estimate = std::max(r.error_estimate, std::abs(r.values[j] - cv[j]));
  return r;
}

std::vector<Complex> apply_H_real_direct(const ArchimedeanProfile& g, bool odd, const std::vector<double>& x,
                                         const RealGrid& grid) {
  auto phi = [&](double t) {
    const double v = g.at(std::abs(t));
    return (odd && t < 0) ? -v : v;
  };
  // psi = F^{-1} phi on the xi grid: a real cosine transform (even) or i times a sine transform (odd)
  const int nt = static_cast<int>(std::lround(grid.t_half_width / grid.t_step));
  std::vector<double> t_nodes, phi_vals;
  for (int i = -nt; i <= nt; ++i) {
    t_nodes.push_back(i * grid.t_step);
    phi_vals.push_back(phi(i * grid.t_step));
  }
  const int nx = static_cast<int>(std::lround(grid.xi_half_width / grid.xi_step));
  std::vector<double> psi(static_cast<std::size_t>(2 * nx + 1));  // psi = psi_re (even) or psi_im (odd)
#pragma omp parallel for schedule(static)
  for (int k = -nx; k <= nx; ++k) {
    const double xi = k * grid.xi_step;
    double acc = 0.0;
    for (std::size_t i = 0; i < t_nodes.size(); ++i) {
      const double a = 2.0 * kPi * t_nodes[i] * xi;
      acc += phi_vals[i] * (odd ? std::sin(a) : std::cos(a));
    }
    psi[static_cast<std::size_t>(k + nx)] = acc * grid.t_step;
  }
  for (double xj : x)
    if (xj == 0.0) throw std::domain_error("apply_H_real: x = 0");
  const C psi_unit = odd ? C(0.0, 1.0) : C(1.0, 0.0);
  const double psi0 = psi[static_cast<std::size_t>(nx)];
  // int log|xi| e^{-pi xi^2} d xi
  const double log_gauss = -0.5 * (kEulerGamma + std::log(4.0 * kPi));
  std::vector<C> out(x.size());
#pragma omp parallel for schedule(static)
  for (std::size_t j = 0; j < x.size(); ++j) {
    C acc{};
    for (int k = -nx; k <= nx; ++k) {
      if (k == 0) continue;  // the subtracted integrand vanishes at xi = 0
      const double xi = k * grid.xi_step;
      const C integrand = psi_unit * psi[static_cast<std::size_t>(k + nx)] * std::polar(1.0, -2.0 * kPi * xi * x[j]) -
                          psi_unit * psi0 * std::exp(-kPi * xi * xi);
      acc += std::log(std::abs(xi)) * integrand;
    }
    acc = acc * grid.xi_step + psi_unit * psi0 * log_gauss;
    out[j] = std::log(std::abs(x[j])) * phi(x[j]) + acc;
  }
  return out;
}

RealHResult apply_H_real(const ArchimedeanProfile& g, bool odd, const std::vector<double>& x, const RealGrid& grid) {
  RealHResult r;
  r.points = x;
  r.direct = apply_H_real_direct(g, odd, x, grid);
  const ExplicitResult spec = explicit_formula_rhs(RealCharacter(odd, 0.0), g, x);
  r.spectral = spec.values;
  r.quadrature_error = spec.error_estimate;
  for (std::size_t j = 0; j < x.size(); ++j) r.discrepancy = std::max(r.discrepancy, std::abs(r.direct[j] - r.spectral[j]));
  return r;
}

}  // namespace conductor_lab
