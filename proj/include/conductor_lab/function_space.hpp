#pragma once

// Locally constant, compactly supported functions on Q_p.
//
// A function at level (p, a, b) is supported in p^{-a} Z_p and constant on
// cosets of p^{b} Z_p. Coset n, for 0 <= n < p^{a+b}, is
//
//     p^{-a} * n + p^{b} Z_p,
//
// so the base-p digits of n are the digits of the representative from the
// p^{-a} place upwards. Coset 0 is the ball p^{b} Z_p around the origin. The
// representative of coset n != 0 has valuation -a + v_p(n).
//
// With this enumeration the Fourier transform of a level (a, b) function is
// a level (b, a) function given by a plain length p^{a+b} DFT:
//
//     F(phi)_m = p^{-b} sum_n phi_n exp(2 pi i n m / p^{a+b}).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "conductor_lab/exact_scalar.hpp"
#include "conductor_lab/kernels.hpp"
#include "conductor_lab/padic_point.hpp"
#include "conductor_lab/scalar.hpp"

namespace conductor_lab {

struct Level {
  int p = 2;
  int a = 0;  // support exponent
  int b = 0;  // constancy exponent

  std::int64_t dim() const { return ipow(p, a + b); }
  /// Valuation of the representative of coset n != 0.
  int coset_valuation(std::int64_t n) const { return -a + valuation(n, p); }
  /// Haar measure of one coset, p^{-b}.
  Rational coset_measure() const { return pow_p(p, -b); }

  friend bool operator==(const Level&, const Level&) = default;
};

inline void validate_level(const Level& lv) {
  require_prime(lv.p);
  if (lv.a + lv.b < 0) throw std::invalid_argument("level needs a + b >= 0");
}

template <class S>
class LcFunction {
 public:
  using Traits = ScalarTraits<S>;

  LcFunction() : LcFunction(Level{2, 0, 0}) {}

  explicit LcFunction(Level lv) : level_(lv) {
    validate_level(lv);
    values_.assign(static_cast<std::size_t>(lv.dim()), Traits::zero());
  }

  LcFunction(Level lv, std::vector<S> values) : level_(lv), values_(std::move(values)) {
    validate_level(lv);
    if (static_cast<std::int64_t>(values_.size()) != lv.dim())
      throw std::invalid_argument("value count does not match p^{a+b}");
  }

  static LcFunction zero(int p) { return LcFunction(Level{p, 0, 0}); }

  const Level& level() const { return level_; }
  int prime() const { return level_.p; }
  std::int64_t dim() const { return static_cast<std::int64_t>(values_.size()); }
  std::span<const S> values() const { return values_; }
  const S& value(std::int64_t n) const { return values_[static_cast<std::size_t>(n)]; }
  /// Value on the ball p^{b} Z_p around the origin.
  const S& origin_value() const { return values_.front(); }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const S& s) { return Traits::is_zero(s); });
  }
  bool vanishes_near_zero() const { return Traits::is_zero(values_.front()); }

  /// Coset index of t, or -1 when t lies outside p^{-a} Z_p.
  std::int64_t coset_index(const PAdicPoint& t) const {
    if (t.prime() != level_.p) throw std::invalid_argument("mixed primes");
    if (t.is_zero() || t.valuation() >= level_.b) return 0;
    if (t.valuation() < -level_.a) return -1;
    const int v = t.valuation();
    return ipow(level_.p, level_.a + v) * t.unit_residue(level_.b - v);
  }

  S operator()(const PAdicPoint& t) const {
    const std::int64_t n = coset_index(t);
    return n < 0 ? Traits::zero() : value(n);
  }

  /// The same function at a finer level (a2 >= a, b2 >= b).
  LcFunction refined(int a2, int b2) const {
    if (a2 < level_.a || b2 < level_.b) throw std::invalid_argument("refined: level must not shrink");
    if (a2 == level_.a && b2 == level_.b) return *this;
    const Level lv{level_.p, a2, b2};
    std::vector<S> out(static_cast<std::size_t>(lv.dim()), Traits::zero());
    const std::int64_t shift = ipow(level_.p, a2 - level_.a);
    const std::int64_t old_dim = dim();
    for (std::int64_t n2 = 0; n2 < lv.dim(); n2 += shift) {
      out[static_cast<std::size_t>(n2)] = value((n2 / shift) % old_dim);
    }
    return LcFunction(lv, std::move(out));
  }

  LcFunction refined(const Level& lv) const { return refined(lv.a, lv.b); }

  /// Coarsest level representing the same function.
  LcFunction canonical() const {
    if (is_zero()) return zero(level_.p);
    LcFunction f = *this;
    bool changed = true;
    while (changed) {
      changed = false;
      const Level& lv = f.level_;
      const int p = lv.p;
      if (lv.a + lv.b >= 1) {
        // drop b: children n + j p^{a+b-1} must agree
        const std::int64_t sub = ipow(p, lv.a + lv.b - 1);
        bool constant = true;
        for (std::int64_t n = 0; n < sub && constant; ++n)
          for (int j = 1; j < p && constant; ++j)
            constant = f.value(n + j * sub) == f.value(n);
        if (constant) {
          std::vector<S> vals(f.values_.begin(), f.values_.begin() + sub);
          f = LcFunction(Level{p, lv.a, lv.b - 1}, std::move(vals));
          changed = true;
          continue;
        }
        // drop a: support inside p^{-(a-1)} Z_p means zero off multiples of p
        bool inside = true;
        for (std::int64_t n = 0; n < f.dim() && inside; ++n)
          if (n % p != 0) inside = Traits::is_zero(f.value(n));
        if (inside) {
          std::vector<S> vals;
          vals.reserve(static_cast<std::size_t>(sub));
          for (std::int64_t n = 0; n < f.dim(); n += p) vals.push_back(f.value(n));
          f = LcFunction(Level{p, lv.a - 1, lv.b}, std::move(vals));
          changed = true;
        }
      }
    }
    return f;
  }

  LcFunction& operator+=(const LcFunction& o) { return combine(o, +1); }
  LcFunction& operator-=(const LcFunction& o) { return combine(o, -1); }
  LcFunction& operator*=(const S& s) {
    for (auto& v : values_) v = v * s;
    return *this;
  }
  friend LcFunction operator+(LcFunction a, const LcFunction& b) { return a += b; }
  friend LcFunction operator-(LcFunction a, const LcFunction& b) { return a -= b; }
  friend LcFunction operator*(LcFunction a, const S& s) { return a *= s; }
  friend LcFunction operator*(const S& s, LcFunction a) { return a *= s; }

 private:
  LcFunction& combine(const LcFunction& o, int sign) {
    if (o.prime() != prime()) throw std::invalid_argument("mixed primes");
    const int a = std::max(level_.a, o.level_.a);
    const int b = std::max(level_.b, o.level_.b);
    LcFunction lhs = refined(a, b);
    const LcFunction rhs = o.refined(a, b);
    for (std::int64_t n = 0; n < lhs.dim(); ++n) {
      auto& v = lhs.values_[static_cast<std::size_t>(n)];
      if (sign > 0)
        v += rhs.value(n);
      else
        v -= rhs.value(n);
    }
    *this = std::move(lhs);
    return *this;
  }

  Level level_;
  std::vector<S> values_;
};

using ExactFunction = LcFunction<ExactScalar>;
using FloatFunction = LcFunction<Complex>;

/// Bring two functions to their common (finest) level.
template <class S>
std::pair<LcFunction<S>, LcFunction<S>> common_level(const LcFunction<S>& f, const LcFunction<S>& g) {
  if (f.prime() != g.prime()) throw std::invalid_argument("mixed primes");
  const int a = std::max(f.level().a, g.level().a);
  const int b = std::max(f.level().b, g.level().b);
  return {f.refined(a, b), g.refined(a, b)};
}

/// Canonical-form equality (exact in exact mode).
inline bool same_function(const ExactFunction& f, const ExactFunction& g) {
  auto [x, y] = common_level(f, g);
  for (std::int64_t n = 0; n < x.dim(); ++n)
    if (x.value(n) != y.value(n)) return false;
  return true;
}

/// Sup-norm distance after refinement to a common level.
double max_abs_diff(const FloatFunction& f, const FloatFunction& g);

FloatFunction to_complex(const ExactFunction& f);

/// Indicator of the shell |t| = p^{i}, i.e. theta(p^i t).
ExactFunction make_theta(int p, int i);
/// Indicator of center + p^{k} Z_p.
ExactFunction indicator_ball(int p, const PAdicPoint& center, int k);

template <class S>
S integrate(const LcFunction<S>& f) {
  S acc = ScalarTraits<S>::zero();
  for (const auto& v : f.values()) acc += v;
  return ScalarTraits<S>::scale(acc, f.level().coset_measure());
}

/// Integral of f * conj(g).
template <class S>
S inner_product(const LcFunction<S>& f, const LcFunction<S>& g) {
  auto [x, y] = common_level(f, g);
  S acc = ScalarTraits<S>::zero();
  for (std::int64_t n = 0; n < x.dim(); ++n) {
    if (ScalarTraits<S>::is_zero(x.value(n)) || ScalarTraits<S>::is_zero(y.value(n))) continue;
    acc += x.value(n) * ScalarTraits<S>::conj(y.value(n));
  }
  return ScalarTraits<S>::scale(acc, x.level().coset_measure());
}

template <class S>
double norm(const LcFunction<S>& f) {
  return std::sqrt(std::abs(ScalarTraits<S>::to_complex(f.prime(), inner_product(f, f)).real()));
}

/// F(phi)(xi) = integral phi(t) lambda(t xi) dt, lambda(t) = exp(2 pi i {t}).
FloatFunction fourier(const FloatFunction& f);
FloatFunction inverse_fourier(const FloatFunction& f);
/// Radial exact input only; values stay exact.
ExactFunction fourier(const ExactFunction& f);
ExactFunction inverse_fourier(const ExactFunction& f);

/// t -> f(-t)
template <class S>
LcFunction<S> reflect(const LcFunction<S>& f) {
  const std::int64_t n = f.dim();
  std::vector<S> out(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = f.value(k == 0 ? 0 : n - k);
  return LcFunction<S>(f.level(), std::move(out));
}

/// Shell/ball averaging over the units: the projection onto radial functions.
template <class S>
LcFunction<S> unit_average(const LcFunction<S>& f) {
  const Level& lv = f.level();
  const int depth = lv.a + lv.b;
  std::vector<S> sums(static_cast<std::size_t>(std::max(depth, 0)), ScalarTraits<S>::zero());
  for (std::int64_t n = 1; n < f.dim(); ++n) sums[static_cast<std::size_t>(valuation(n, lv.p))] += f.value(n);
  std::vector<S> out(static_cast<std::size_t>(f.dim()));
  out[0] = f.origin_value();
  for (std::int64_t n = 1; n < f.dim(); ++n) {
    const int j = valuation(n, lv.p);
    // cosets with v_p(n) = j: (p - 1) p^{a+b-j-1}
    const Rational count = Rational(lv.p - 1) * pow_p(lv.p, depth - j - 1);
    out[static_cast<std::size_t>(n)] = ScalarTraits<S>::scale(sums[static_cast<std::size_t>(j)], 1 / count);
  }
  return LcFunction<S>(lv, std::move(out));
}

template <class S>
bool is_radial(const LcFunction<S>& f, double tol = 0.0) {
  const auto avg = unit_average(f);
  for (std::int64_t n = 0; n < f.dim(); ++n) {
    if constexpr (ScalarTraits<S>::exact) {
      if (avg.value(n) != f.value(n)) return false;
    } else {
      if (std::abs(avg.value(n) - f.value(n)) > tol) return false;
    }
  }
  return true;
}

/// R_x(phi)(t) = |x|^{-1/2} phi(t / x)
template <class S>
LcFunction<S> dilate(const LcFunction<S>& f, const PAdicPoint& x) {
  if (x.is_zero()) throw std::domain_error("dilate: x = 0");
  if (x.prime() != f.prime()) throw std::invalid_argument("mixed primes");
  const Level& lv = f.level();
  const int v = x.valuation();
  const Level out_lv{lv.p, lv.a - v, lv.b + v};
  const std::int64_t n = f.dim();
  std::int64_t u_inv = 1;
  if (lv.a + lv.b > 0 && x.precision() >= lv.a + lv.b) {
    u_inv = inverse_mod(x.unit_residue(lv.a + lv.b), n);
  } else if (lv.a + lv.b > 0 && !is_radial(f, 0.0)) {
    throw std::domain_error("dilate: unit part of x has insufficient precision");
  }
  const S factor = ScalarTraits<S>::sqrt_p_power(lv.p, v);
  std::vector<S> out(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] = f.value(mul_mod(k, u_inv, n)) * factor;
  return LcFunction<S>(out_lv, std::move(out));
}

/// I(phi)(t) = phi(1/t) / |t|; phi must vanish near 0.
template <class S>
LcFunction<S> invert(const LcFunction<S>& f) {
  if (!f.vanishes_near_zero()) throw std::domain_error("invert: function does not vanish near 0");
  const Level& lv = f.level();
  const int p = lv.p;
  if (f.is_zero() || lv.a + lv.b == 0) return LcFunction<S>::zero(p);
  const Level out_lv{p, lv.b - 1, std::max(lv.b + 2 * lv.a, lv.a + 1)};
  const std::int64_t n_out = out_lv.dim();
  const std::int64_t n_in = f.dim();
  std::vector<S> out(static_cast<std::size_t>(n_out), ScalarTraits<S>::zero());
  for (std::int64_t m = 1; m < n_out; ++m) {
    const int vm = valuation(m, p);
    const int k = -out_lv.a + vm;  // valuation of t
    if (k > lv.a || k <= -lv.b) continue;
    std::int64_t u = m;
    for (int i = 0; i < vm; ++i) u /= p;
    const std::int64_t modulus = ipow(p, lv.b + k);
    const std::int64_t u_inv = inverse_mod(mod(u, modulus), modulus);
    const std::int64_t n = mod(ipow(p, lv.a - k) * u_inv, n_in);
    const S& val = f.value(n);
    if (ScalarTraits<S>::is_zero(val)) continue;
    out[static_cast<std::size_t>(m)] = ScalarTraits<S>::scale(val, pow_p(p, k));
  }
  return LcFunction<S>(out_lv, std::move(out));
}

/// t -> log|t| phi(t); phi must vanish near 0.
template <class S>
LcFunction<S> mul_log_norm(const LcFunction<S>& f) {
  if (!f.vanishes_near_zero()) throw std::domain_error("mul_log_norm: function does not vanish near 0");
  const Level& lv = f.level();
  std::vector<S> out(static_cast<std::size_t>(f.dim()), ScalarTraits<S>::zero());
  for (std::int64_t n = 1; n < f.dim(); ++n) {
    if (ScalarTraits<S>::is_zero(f.value(n))) continue;
    const int k = lv.coset_valuation(n);
    out[static_cast<std::size_t>(n)] = ScalarTraits<S>::log_p(lv.p, Rational(-k)) * f.value(n);
  }
  return LcFunction<S>(lv, std::move(out));
}

}  // namespace conductor_lab
