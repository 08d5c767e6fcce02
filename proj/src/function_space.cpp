#include "conductor_lab/function_space.hpp"

namespace conductor_lab {

double max_abs_diff(const FloatFunction& f, const FloatFunction& g) {
  auto [x, y] = common_level(f, g);
  double d = 0.0;
  for (std::int64_t n = 0; n < x.dim(); ++n) d = std::max(d, std::abs(x.value(n) - y.value(n)));
  return d;
}

FloatFunction to_complex(const ExactFunction& f) {
  std::vector<Complex> vals;
  vals.reserve(static_cast<std::size_t>(f.dim()));
  for (const auto& v : f.values()) vals.push_back(v.to_complex(f.prime()));
  return FloatFunction(f.level(), std::move(vals));
}

ExactFunction make_theta(int p, int i) {
  require_prime(p);
  const Level lv{p, i, -i + 1};
  std::vector<ExactScalar> vals(static_cast<std::size_t>(p), ExactScalar(1));
  vals[0] = ExactScalar(0);
  return ExactFunction(lv, std::move(vals));
}

ExactFunction indicator_ball(int p, const PAdicPoint& center, int k) {
  require_prime(p);
  if (center.prime() != p) throw std::invalid_argument("mixed primes");
  if (center.is_zero() || center.valuation() >= k) return ExactFunction(Level{p, -k, k}, {ExactScalar(1)});
  const int v = center.valuation();
  const Level lv{p, -v, k};
  std::vector<ExactScalar> vals(static_cast<std::size_t>(lv.dim()), ExactScalar(0));
  vals[static_cast<std::size_t>(center.unit_residue(k - v))] = ExactScalar(1);
  return ExactFunction(lv, std::move(vals));
}

namespace {

FloatFunction fourier_with_sign(const FloatFunction& f, int sign) {
  const Level& lv = f.level();
  const double scale = std::pow(static_cast<double>(lv.p), -lv.b);
  auto out = kernels::dft(f.values(), sign, scale);
  return FloatFunction(Level{lv.p, lv.b, lv.a}, std::move(out));
}

// Radial f written as sum_k beta_k 1_{p^k Z_p}; F(1_{p^k Z_p}) = p^{-k} 1_{p^{-k} Z_p}.
// Radial functions are even, so the inverse transform coincides.
ExactFunction fourier_radial(const ExactFunction& f) {
  if (!is_radial(f)) throw std::domain_error("exact Fourier transform needs a radial input; use to_complex");
  const Level& lv = f.level();
  const int p = lv.p;
  const int depth = lv.a + lv.b;
  // shell value for valuation k in [-a, b-1]: representative n = p^{k+a}
  auto shell = [&](int k) -> const ExactScalar& { return f.value(ipow(p, k + lv.a)); };
  std::vector<ExactScalar> beta(static_cast<std::size_t>(depth + 1));  // index k + a, k in [-a, b]
  for (int k = -lv.a; k <= lv.b; ++k) {
    const ExactScalar cur = (k == lv.b) ? f.origin_value() : shell(k);
    const ExactScalar prev = (k == -lv.a) ? ExactScalar(0) : shell(k - 1);
    beta[static_cast<std::size_t>(k + lv.a)] = (cur - prev) * pow_p(p, -k);
  }
  // suffix sums: value at output valuation j is sum_{k >= max(-j, -a)} beta_k p^{-k}
  std::vector<ExactScalar> suffix(static_cast<std::size_t>(depth + 2));
  for (int idx = depth; idx >= 0; --idx)
    suffix[static_cast<std::size_t>(idx)] = suffix[static_cast<std::size_t>(idx + 1)] + beta[static_cast<std::size_t>(idx)];
  const Level out_lv{p, lv.b, lv.a};
  std::vector<ExactScalar> out(static_cast<std::size_t>(out_lv.dim()));
  out[0] = suffix[0];
  for (std::int64_t m = 1; m < out_lv.dim(); ++m) {
    const int j = out_lv.coset_valuation(m);
    const int k0 = std::max(-j, -lv.a);
    out[static_cast<std::size_t>(m)] = suffix[static_cast<std::size_t>(k0 + lv.a)];
  }
  return ExactFunction(out_lv, std::move(out));
}

}  // namespace

FloatFunction fourier(const FloatFunction& f) { return fourier_with_sign(f, +1); }
FloatFunction inverse_fourier(const FloatFunction& f) { return fourier_with_sign(f, -1); }
ExactFunction fourier(const ExactFunction& f) { return fourier_radial(f); }
ExactFunction inverse_fourier(const ExactFunction& f) { return fourier_radial(f); }

}  // namespace conductor_lab
