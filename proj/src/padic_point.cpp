#include "conductor_lab/padic_point.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace conductor_lab {

std::int64_t ipow(int p, int k) {
  if (k < 0) throw std::invalid_argument("ipow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::int64_t{1} << 62) / p) throw std::overflow_error("ipow: p^k exceeds 2^62");
    r *= p;
  }
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int valuation(std::int64_t n, int p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t inverse_mod(std::int64_t u, std::int64_t m) {
  if (m == 1) return 0;
  __int128 r0 = m, r1 = mod(u, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("inverse_mod: not a unit");
  return mod(static_cast<std::int64_t>(s0 % m), m);
}

int max_precision(int p) {
  int k = 0;
  std::int64_t r = 1;
  while (r <= ((std::int64_t{1} << 62) / p)) {
    r *= p;
    ++k;
  }
  return k;
}

PAdicPoint PAdicPoint::zero(int p) {
  PAdicPoint z(p, 0, {1});
  z.zero_ = true;
  z.digits_.clear();
  return z;
}

PAdicPoint PAdicPoint::from_unit(int p, int v, std::int64_t unit_residue, int precision) {
  if (precision < 1) throw std::invalid_argument("unit needs at least one digit");
  std::int64_t u = mod(unit_residue, ipow(p, precision));
  std::vector<int> digits;
  for (int i = 0; i < precision; ++i) {
    digits.push_back(static_cast<int>(u % p));
    u /= p;
  }
  return PAdicPoint(p, v, std::move(digits));
}

PAdicPoint PAdicPoint::from_integer(int p, std::int64_t n, int precision) {
  require_prime(p);
  if (n == 0) return zero(p);
  const int v = conductor_lab::valuation(n < 0 ? -n : n, p);
  std::int64_t u = n;
  for (int i = 0; i < v; ++i) u /= p;
  if (precision <= 0) precision = max_precision(p);
  return from_unit(p, v, u, precision);
}

PAdicPoint::PAdicPoint(int p, int valuation, std::vector<int> unit_digits)
    : p_(p), v_(valuation), zero_(false), digits_(std::move(unit_digits)) {
  if (p < 2) throw std::invalid_argument("PAdicPoint: bad prime");
  if (digits_.empty() || digits_.front() == 0)
    throw std::invalid_argument("PAdicPoint: unit part must have a nonzero leading digit");
  for (int d : digits_)
    if (d < 0 || d >= p) throw std::invalid_argument("PAdicPoint: digit out of range");
}

Rational PAdicPoint::norm() const {
  if (zero_) return 0;
  return pow_p(p_, -v_);
}

double PAdicPoint::norm_double() const {
  if (zero_) return 0.0;
  return std::pow(static_cast<double>(p_), -v_);
}

std::int64_t PAdicPoint::unit_residue(int k) const {
  if (zero_) throw std::domain_error("unit part of zero");
  if (k > precision())
    throw std::domain_error("insufficient digit precision: need " + std::to_string(k) + ", have " +
                            std::to_string(precision()));
  std::int64_t r = 0;
  for (int i = k - 1; i >= 0; --i) r = r * p_ + digits_[static_cast<std::size_t>(i)];
  return r;
}

PAdicPoint PAdicPoint::operator*(const PAdicPoint& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixed primes");
  if (zero_ || o.zero_) return zero(p_);
  const int prec = std::min(std::min(precision(), o.precision()), max_precision(p_));
  const std::int64_t m = ipow(p_, prec);
  return from_unit(p_, v_ + o.v_, mul_mod(unit_residue(prec), o.unit_residue(prec), m), prec);
}

PAdicPoint PAdicPoint::inverse() const {
  if (zero_) throw std::domain_error("inverse of zero");
  const int prec = std::min(precision(), max_precision(p_));
  const std::int64_t m = ipow(p_, prec);
  return from_unit(p_, -v_, inverse_mod(unit_residue(prec), m), prec);
}

PAdicPoint PAdicPoint::operator-() const {
  if (zero_) return *this;
  const int prec = std::min(precision(), max_precision(p_));
  const std::int64_t m = ipow(p_, prec);
  return from_unit(p_, v_, m - unit_residue(prec), prec);
}

std::string PAdicPoint::to_string() const {
  if (zero_) return "0";
  std::string s = std::to_string(p_) + "^" + std::to_string(v_) + "*(";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(digits_[i]);
  }
  return s + ")";
}

}  // namespace conductor_lab
