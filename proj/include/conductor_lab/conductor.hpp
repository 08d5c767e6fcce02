#pragma once

// The conductor operator H on S_0(Q_p).
//
// H(phi) = log|t| phi - G * phi, where G is Vladimirov's distribution
//
//   G(psi) = L ( int_{|t|<=1} (psi(t) - psi(0)) dt/|t| + int_{|t|>1} psi dt/|t| + psi(0)/p ),
//   L = log p / (1 - 1/p).
//
// For phi at level (a, b) the convolution is again constant on cosets of
// p^b Z_p, and on p^{-a} Z_p it is the cyclic convolution over the coset
// group Z/p^{a+b} with weights
//
//   w_0 = L (1/p - b (1 - 1/p)),   w_n = L p^{v_p(n) - a - b}   (n != 0).
//
// Beyond p^{-a} Z_p only the last integral sees phi(t - u), and there
// |u| = |t|, so H(phi)(t) = kappa / |t| with kappa = -L int phi.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "conductor_lab/function_space.hpp"

namespace conductor_lab {

template <class S>
S vladimirov_constant(int p) {
  return ScalarTraits<S>::log_p(p, Rational(p, p - 1));
}

/// G(psi), summed coset by coset from the defining formula.
template <class S>
S vladimirov_G(const LcFunction<S>& psi) {
  using T = ScalarTraits<S>;
  const Level& lv = psi.level();
  const int p = lv.p;
  const S psi0 = psi.origin_value();
  S acc = T::zero();
  for (std::int64_t n = 1; n < psi.dim(); ++n) {
    const int k = lv.coset_valuation(n);
    S integrand = psi.value(n);
    if (k >= 0) integrand -= psi0;  // |t| <= 1
    if (T::is_zero(integrand)) continue;
    acc += T::scale(integrand, pow_p(p, k - lv.b));  // dt/|t| over the coset
  }
  // The ball p^b Z_p lies inside the unit ball when b >= 0, and there
  // psi - psi(0) vanishes. When b < 0 it also covers the shells
  // 1 < |t| <= p^{-b}, each adding psi(0) (1 - 1/p). When a < 0 the shells of
  // Z_p outside p^{-a} Z_p carry psi = 0 and add -psi(0) (1 - 1/p) each.
  const Rational shell = 1 - Rational(1, p);
  Rational ball_weight = Rational(1, p);
  if (lv.b < 0) ball_weight += -lv.b * shell;
  if (lv.a < 0) ball_weight -= -lv.a * shell;
  if (!T::is_zero(psi0)) acc += T::scale(psi0, ball_weight);
  return acc * vladimirov_constant<S>(p);
}

/// The convolution weights of G on the coset group of a level.
template <class S>
struct VladimirovWeights {
  S w0;
  std::vector<S> by_valuation;  // W_j for v_p(n) = j, 0 <= j < a + b
};

template <class S>
VladimirovWeights<S> vladimirov_weights(const Level& lv) {
  using T = ScalarTraits<S>;
  const int p = lv.p;
  const int depth = lv.a + lv.b;
  const S L = vladimirov_constant<S>(p);
  VladimirovWeights<S> w;
  w.w0 = T::scale(L, Rational(1, p) - lv.b * (1 - Rational(1, p)));
  w.by_valuation.reserve(static_cast<std::size_t>(depth));
  for (int j = 0; j < depth; ++j) w.by_valuation.push_back(T::scale(L, pow_p(p, j - depth)));
  return w;
}

/// The dense weight vector w_n, for cross-checks against the structured kernel.
template <class S>
std::vector<S> vladimirov_weight_vector(const Level& lv) {
  const auto w = vladimirov_weights<S>(lv);
  const std::int64_t dim = lv.dim();
  std::vector<S> out(static_cast<std::size_t>(dim));
  out[0] = w.w0;
  for (std::int64_t n = 1; n < dim; ++n)
    out[static_cast<std::size_t>(n)] = w.by_valuation[static_cast<std::size_t>(valuation(n, lv.p))];
  return out;
}

/// (G * phi) on p^{-a} Z_p, at the level of phi.
template <class S>
LcFunction<S> vladimirov_convolve(const LcFunction<S>& phi) {
  const Level& lv = phi.level();
  const auto w = vladimirov_weights<S>(lv);
  return LcFunction<S>(lv, kernels::radial_convolve<S>(lv.p, w.w0, w.by_valuation, phi.values()));
}

/// u -> phi(t - u), at a level fine enough to hold it.
template <class S>
LcFunction<S> shifted_reflection(const LcFunction<S>& phi, const PAdicPoint& t) {
  if (t.prime() != phi.prime()) throw std::invalid_argument("mixed primes");
  Level lv = phi.level();
  if (!t.is_zero() && t.valuation() < -lv.a) lv.a = -t.valuation();
  const LcFunction<S> f = phi.refined(lv);
  const std::int64_t m = f.coset_index(t);
  const std::int64_t dim = f.dim();
  std::vector<S> out(static_cast<std::size_t>(dim));
  for (std::int64_t n = 0; n < dim; ++n) out[static_cast<std::size_t>(n)] = f.value(mod(m - n, dim));
  return LcFunction<S>(lv, std::move(out));
}

/// The total function core(t) on |t| <= p^cut, kappa / |t| beyond.
template <class S>
struct HImage {
  LcFunction<S> core;  // at level (cut, b)
  S kappa{};
  int cut = 0;

  int prime() const { return core.prime(); }

  S operator()(const PAdicPoint& t) const {
    if (!t.is_zero() && t.valuation() < -cut) return ScalarTraits<S>::scale(kappa, pow_p(prime(), t.valuation()));
    return core(t);
  }

  /// Same total function with the cut moved out to a2 >= cut and constancy b2 >= b.
  HImage extended(int a2, int b2) const {
    if (a2 < cut) throw std::invalid_argument("extended: cut must not shrink");
    const Level& lv = core.level();
    b2 = std::max(b2, lv.b);
    LcFunction<S> c = core.refined(a2, b2);
    if (a2 > cut) {
      std::vector<S> vals(c.values().begin(), c.values().end());
      for (std::int64_t n = 1; n < c.dim(); ++n) {
        const int k = c.level().coset_valuation(n);
        if (k < -cut) vals[static_cast<std::size_t>(n)] = ScalarTraits<S>::scale(kappa, pow_p(prime(), k));
      }
      c = LcFunction<S>(c.level(), std::move(vals));
    }
    return {std::move(c), kappa, a2};
  }
};

using ExactHImage = HImage<ExactScalar>;
using FloatHImage = HImage<Complex>;

inline FloatHImage to_complex(const ExactHImage& h) {
  return {to_complex(h.core), h.kappa.to_complex(h.prime()), h.cut};
}

template <class S>
HImage<S> apply_H(const LcFunction<S>& phi) {
  if (!phi.vanishes_near_zero()) throw std::domain_error("apply_H: input does not vanish near 0");
  LcFunction<S> core = mul_log_norm(phi);
  core -= vladimirov_convolve(phi);
  const S kappa = -(vladimirov_constant<S>(phi.prime()) * integrate(phi));
  return {std::move(core), kappa, phi.level().a};
}

/// int_{p^a Z_p} log|xi| d xi = -log p * p^{-a} (a (1 - 1/p) + 1/p) / (1 - 1/p)
template <class S>
S log_norm_ball_integral(int p, int a) {
  const Rational r(1, p);
  return ScalarTraits<S>::log_p(p, -pow_p(p, -a) * (a * (1 - r) + r) / (1 - r));
}

/// H(phi) = log|t| phi + F(log|xi| F^{-1} phi), with F^{-1} phi split into its
/// value on the ball p^a Z_p plus a remainder vanishing near 0.
template <class S>
HImage<S> apply_H_oracle(const LcFunction<S>& phi) {
  using T = ScalarTraits<S>;
  if (!phi.vanishes_near_zero()) throw std::domain_error("apply_H_oracle: input does not vanish near 0");
  const int p = phi.prime();
  const int a = phi.level().a;
  const LcFunction<S> psi = inverse_fourier(phi);  // level (b, a)
  const S c0 = psi.origin_value();
  std::vector<S> rest(psi.values().begin(), psi.values().end());
  rest[0] = T::zero();
  LcFunction<S> core = fourier(mul_log_norm(LcFunction<S>(psi.level(), std::move(rest))));
  core += mul_log_norm(phi);
  // F(c0 log|xi| 1_{p^a Z_p})(x) is constant for |x| <= p^a and -L c0 / |x| beyond.
  core += LcFunction<S>(Level{p, a, -a}, {c0 * log_norm_ball_integral<S>(p, a)});
  core = core.refined(a, std::max(core.level().b, phi.level().b));
  const S kappa = -(vladimirov_constant<S>(p) * c0);
  return {std::move(core), kappa, a};
}

/// Bring two images to a common cut and constancy level.
template <class S>
std::pair<HImage<S>, HImage<S>> common_level(const HImage<S>& f, const HImage<S>& g) {
  if (f.prime() != g.prime()) throw std::invalid_argument("mixed primes");
  const int a = std::max(f.cut, g.cut);
  const int b = std::max(f.core.level().b, g.core.level().b);
  return {f.extended(a, b), g.extended(a, b)};
}

inline bool same_image(const ExactHImage& f, const ExactHImage& g) {
  auto [x, y] = common_level(f, g);
  return x.kappa == y.kappa && same_function(x.core, y.core);
}

/// Sup-norm distance of the total functions, scaled so the tails compare as kappa.
inline double image_distance(const FloatHImage& f, const FloatHImage& g) {
  auto [x, y] = common_level(f, g);
  return std::max(max_abs_diff(x.core, y.core), std::abs(x.kappa - y.kappa));
}

/// As a total function: image(t) -> image(t) for an LcFunction with no tail.
template <class S>
HImage<S> as_image(const LcFunction<S>& f) {
  return {f, ScalarTraits<S>::zero(), f.level().a};
}

/// R_x on the total function.
template <class S>
HImage<S> dilate(const HImage<S>& h, const PAdicPoint& x) {
  const int v = x.valuation();
  return {dilate(h.core, x), h.kappa * ScalarTraits<S>::sqrt_p_power(h.prime(), -v), h.cut - v};
}

/// I on the total function: the ball value near 0 and kappa trade places.
template <class S>
HImage<S> invert(const HImage<S>& h) {
  using T = ScalarTraits<S>;
  const int p = h.prime();
  const Level& lv = h.core.level();
  const S z0 = h.core.origin_value();
  std::vector<S> hollow(h.core.values().begin(), h.core.values().end());
  hollow[0] = T::zero();
  const LcFunction<S> middle(lv, std::move(hollow));
  // |t| < p^{-cut}: h(1/t) = kappa |t|
  LcFunction<S> core(Level{p, -(h.cut + 1), h.cut + 1}, {h.kappa});
  if (!middle.is_zero()) core += invert(middle);
  const int new_cut = lv.b - 1;
  core = core.refined(new_cut, std::max(core.level().b, h.cut + 1));
  return {std::move(core), z0, new_cut};
}

template <class S>
HImage<S> unit_average(const HImage<S>& h) {
  return {unit_average(h.core), h.kappa, h.cut};
}

/// F on the total function; only defined when there is no tail.
template <class S>
HImage<S> fourier(const HImage<S>& h) {
  if (!ScalarTraits<S>::is_zero(h.kappa)) throw std::domain_error("fourier: image has a 1/|t| tail");
  return as_image(fourier(h.core));
}

/// int over the shell |t| = p^j of f
template <class S>
S shell_integral(const LcFunction<S>& f, int j) {
  using T = ScalarTraits<S>;
  const Level& lv = f.level();
  if (j > lv.a) return T::zero();
  if (-j >= lv.b) return T::scale(f.origin_value(), (1 - Rational(1, lv.p)) * pow_p(lv.p, j));
  S acc = T::zero();
  for (std::int64_t n = 1; n < f.dim(); ++n)
    if (lv.coset_valuation(n) == -j) acc += f.value(n);
  return T::scale(acc, lv.coset_measure());
}

template <class S>
S shell_integral(const HImage<S>& h, int j) {
  if (j > h.cut) return ScalarTraits<S>::scale(h.kappa, 1 - Rational(1, h.prime()));
  return shell_integral(h.core, j);
}

/// int (h) conj(phi) dt with the tail integrated analytically.
template <class S>
S inner_product(const HImage<S>& h, const LcFunction<S>& phi) {
  using T = ScalarTraits<S>;
  if (h.prime() != phi.prime()) throw std::invalid_argument("mixed primes");
  const int p = phi.prime();
  const Level& lv = phi.level();
  if (phi.is_zero()) return T::zero();
  if constexpr (T::exact) {
    if (is_radial(phi) && phi.vanishes_near_zero()) {
      // shells only: keeps the work at the two native levels
      S acc = T::zero();
      for (int j = -lv.b + 1; j <= lv.a; ++j) {
        const std::int64_t n = ipow(p, lv.a - j);
        if (n >= phi.dim()) continue;
        const S& v = phi.value(n);
        if (!T::is_zero(v)) acc += shell_integral(h, j) * T::conj(v);
      }
      return acc;
    }
  }
  // tail region of phi: h is kappa/|t| there, constant on every coset of phi
  S acc = T::zero();
  for (std::int64_t n = 1; n < phi.dim(); ++n) {
    const int k = lv.coset_valuation(n);
    if (k >= -h.cut || T::is_zero(phi.value(n))) continue;
    acc += T::scale(h.kappa * T::conj(phi.value(n)), pow_p(p, k - lv.b));
  }
  // core region
  const int a = std::min(lv.a, h.cut);
  std::vector<S> inside;
  if (a + lv.b >= 0) {
    const LcFunction<S> restricted = [&] {
      const std::int64_t dim = ipow(p, a + lv.b);
      const std::int64_t step = ipow(p, lv.a - a);
      std::vector<S> vals(static_cast<std::size_t>(dim));
      for (std::int64_t n = 0; n < dim; ++n) vals[static_cast<std::size_t>(n)] = phi.value(n * step);
      return LcFunction<S>(Level{p, a, lv.b}, std::move(vals));
    }();
    acc += inner_product(h.core, restricted);
  }
  return acc;
}

/// <H eta_i, eta_j> from apply_H(theta_i), exact.
ExactScalar matrix_element_H(int p, int i, int j);
/// The closed form -log p * p^{-|i-j|/2} (i != j), 0 on the diagonal.
ExactScalar matrix_element_closed_form(int p, int i, int j);

}  // namespace conductor_lab
