#include "conductor_lab/circle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conductor_lab {

namespace {

double shell_scale(int p, int i) {
  // <f, eta_i> = f_i (1 - 1/p)^{1/2} p^{i/2} for f equal to f_i on |t| = p^i
  return std::sqrt(1.0 - 1.0 / p) * std::pow(double(p), 0.5 * i);
}

/// Shell values of a radial function vanishing near 0.
template <class S>
LaurentVector shells_to_laurent(const LcFunction<S>& f) {
  const Level& lv = f.level();
  const int p = lv.p;
  if (!f.vanishes_near_zero()) throw std::domain_error("radial_to_laurent: input does not vanish near 0");
  if (f.is_zero()) return LaurentVector(p);
  const int lo = -lv.b + 1;
  std::vector<Complex> c;
  for (int i = lo; i <= lv.a; ++i) {
    const Complex v = ScalarTraits<S>::to_complex(p, f.value(ipow(p, lv.a - i)));
    c.push_back(v * shell_scale(p, i));
  }
  return LaurentVector(p, lo, std::move(c));
}

}  // namespace

LaurentVector::LaurentVector(int p, int lo, std::vector<Complex> coeffs) : p_(p), lo_(lo), c_(std::move(coeffs)) {
  require_prime(p);
}

Complex LaurentVector::operator[](int i) const {
  if (i < lo_ || i > hi()) return {};
  return c_[static_cast<std::size_t>(i - lo_)];
}

double LaurentVector::norm() const {
  double s = 0.0;
  for (const auto& v : c_) s += std::norm(v);
  return std::sqrt(s);
}

LaurentVector LaurentVector::widened(int lo2, int hi2) const {
  if (!empty()) {
    lo2 = std::min(lo2, lo_);
    hi2 = std::max(hi2, hi());
  }
  std::vector<Complex> out(static_cast<std::size_t>(std::max(hi2 - lo2 + 1, 0)));
  for (int i = lo2; i <= hi2; ++i) out[static_cast<std::size_t>(i - lo2)] = (*this)[i];
  return LaurentVector(p_, lo2, std::move(out));
}

Complex LaurentVector::eval(double angle) const {
  Complex acc{};
  for (int i = lo_; i <= hi(); ++i) acc += (*this)[i] * std::polar(1.0, angle * i);
  return acc;
}

double max_abs_diff(const LaurentVector& u, const LaurentVector& v) {
  if (u.prime() != v.prime()) throw std::invalid_argument("mixed primes");
  int lo = 0, hi = -1;
  if (!u.empty()) lo = u.lo(), hi = u.hi();
  if (!v.empty()) {
    lo = u.empty() ? v.lo() : std::min(lo, v.lo());
    hi = u.empty() ? v.hi() : std::max(hi, v.hi());
  }
  double d = 0.0;
  for (int i = lo; i <= hi; ++i) d = std::max(d, std::abs(u[i] - v[i]));
  return d;
}

LaurentVector radial_to_laurent(const FloatFunction& f) {
  const double scale = std::max(1.0, max_abs_diff(f, FloatFunction::zero(f.prime())));
  if (!is_radial(f, 1e-12 * scale)) throw std::domain_error("radial_to_laurent: input is not radial");
  return shells_to_laurent(f);
}

LaurentVector radial_to_laurent(const ExactFunction& f) {
  if (!is_radial(f)) throw std::domain_error("radial_to_laurent: input is not radial");
  return shells_to_laurent(f);
}

LaurentVector radial_to_laurent(const FloatHImage& h, int lo, int hi) {
  const int p = h.prime();
  if (!is_radial(h.core, 1e-12)) throw std::domain_error("radial_to_laurent: image is not radial");
  const Level& lv = h.core.level();
  std::vector<Complex> c;
  for (int i = lo; i <= hi; ++i) {
    Complex v;
    if (i > h.cut)
      v = h.kappa * std::pow(double(p), -double(i));
    else if (-i >= lv.b)
      v = h.core.origin_value();
    else
      v = h.core.value(ipow(p, lv.a - i));
    c.push_back(v * shell_scale(p, i));
  }
  return LaurentVector(p, lo, std::move(c));
}

FloatFunction laurent_to_radial(const LaurentVector& v) {
  const int p = v.prime();
  if (v.empty()) return FloatFunction::zero(p);
  const Level lv{p, v.hi(), -v.lo() + 1};
  std::vector<Complex> vals(static_cast<std::size_t>(lv.dim()));
  for (std::int64_t n = 1; n < lv.dim(); ++n) {
    const int i = -lv.coset_valuation(n);
    vals[static_cast<std::size_t>(n)] = v[i] / shell_scale(p, i);
  }
  return FloatFunction(lv, std::move(vals));
}

double multiplier_m(int p, double angle) {
  const Complex z = std::polar(1.0, angle);
  return -2.0 * std::log(double(p)) * (z / (std::sqrt(double(p)) - z)).real();
}

int toeplitz_tail_cutoff(int p) {
  // sum_{k > K} log p * p^{-k/2} = log p * p^{-(K+1)/2} / (1 - p^{-1/2})
  const double r = 1.0 / std::sqrt(double(p));
  const double lp = std::log(double(p));
  int K = 0;
  while (lp * std::pow(r, K + 1) / (1.0 - r) >= kLaurentTailCutoff) ++K;
  return K;
}

LaurentVector apply_H_circle(const LaurentVector& v) {
  const int p = v.prime();
  if (v.empty()) return v;
  const int K = toeplitz_tail_cutoff(p);
  const double lp = std::log(double(p));
  const double r = 1.0 / std::sqrt(double(p));
  std::vector<double> symbol(static_cast<std::size_t>(v.hi() - v.lo() + K + 1));
  for (std::size_t k = 1; k < symbol.size(); ++k) symbol[k] = -lp * std::pow(r, double(k));
  const int lo = v.lo() - K;
  const int hi = v.hi() + K;
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int j = lo; j <= hi; ++j) {
    Complex acc{};
    for (int i = v.lo(); i <= v.hi(); ++i) {
      const int d = std::abs(j - i);
      if (d == 0 || d >= static_cast<int>(symbol.size())) continue;
      acc += symbol[static_cast<std::size_t>(d)] * v[i];
    }
    out[static_cast<std::size_t>(j - lo)] = acc;
  }
  return LaurentVector(p, lo, std::move(out));
}

LaurentVector inversion_circle(const LaurentVector& v) {
  std::vector<Complex> c(v.coefficients().rbegin(), v.coefficients().rend());
  return LaurentVector(v.prime(), v.empty() ? 0 : -v.hi(), std::move(c));
}

LaurentVector fourier_circle(const LaurentVector& v) {
  const int p = v.prime();
  if (v.empty()) return v;
  // u(z) = -p^{-1/2} z + (1 - 1/p) sum_{m >= 0} p^{-m/2} z^{-m}
  const double r = 1.0 / std::sqrt(double(p));
  int K = 0;
  while ((1.0 - 1.0 / p) * std::pow(r, K + 1) / (1.0 - r) >= kLaurentTailCutoff) ++K;
  const LaurentVector w = inversion_circle(v);
  const int lo = w.lo() - K;
  const int hi = w.hi() + 1;
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int i = w.lo(); i <= w.hi(); ++i) {
    const Complex c = w[i];
    if (c == Complex{}) continue;
    out[static_cast<std::size_t>(i + 1 - lo)] += -r * c;
    double coeff = 1.0 - 1.0 / p;
    for (int m = 0; m <= K; ++m, coeff *= r) out[static_cast<std::size_t>(i - m - lo)] += coeff * c;
  }
  return LaurentVector(p, lo, std::move(out));
}

SupportInterval spectrum_support(int p) {
  require_prime(p);
  const double lp = std::log(double(p));
  const double sp = std::sqrt(double(p));
  SupportInterval s;
  s.lo = -2.0 * lp / (sp - 1.0);
  s.hi = 2.0 * lp / (sp + 1.0);
  s.center = 1.0 / (p - 1.0);
  s.radius = sp / (p - 1.0);
  return s;
}

SpectrumReport toeplitz_spectrum(int p, int N) {
  require_prime(p);
  if (N < 2) throw std::invalid_argument("toeplitz_spectrum: N must be >= 2");
  if (N > kMaxToeplitzN) throw std::invalid_argument("toeplitz_spectrum: N exceeds the cap of 4096");
  const int dim = 2 * N + 1;
  const double lp = std::log(double(p));
  const double r = 1.0 / std::sqrt(double(p));
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = i == j ? 0.0 : -lp * std::pow(r, std::abs(i - j));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("toeplitz_spectrum: eigensolver failed");
  SpectrumReport rep;
  rep.p = p;
  rep.N = N;
  rep.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  const SupportInterval s = spectrum_support(p);
  rep.support_lo = s.lo;
  rep.support_hi = s.hi;
  for (double e : rep.eigenvalues) rep.max_outside = std::max({rep.max_outside, s.lo - e, e - s.hi});
  rep.gap_lo = rep.eigenvalues.front() - s.lo;
  rep.gap_hi = s.hi - rep.eigenvalues.back();
  return rep;
}

}  // namespace conductor_lab
