#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conductor_lab/exact_scalar.hpp"

namespace conductor_lab {

/// Checked p^k for k >= 0; throws std::overflow_error beyond 2^62.
std::int64_t ipow(int p, int k);
bool is_prime(long n);
void require_prime(int p);
/// Non-negative residue of a mod m.
std::int64_t mod(std::int64_t a, std::int64_t m);
/// Exact p-adic valuation of n != 0.
int valuation(std::int64_t n, int p);
/// Inverse of a unit u modulo m (m a prime power, gcd(u, m) = 1).
std::int64_t inverse_mod(std::int64_t u, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

/// A point t = p^v * u of Q_p, with the unit u known modulo p^precision.
///
/// Digits of the unit are stored least significant first; the leading
/// (constant) digit is nonzero. The zero point has no digits.
class PAdicPoint {
 public:
  static PAdicPoint zero(int p);
  /// The integer n viewed in Q_p, its unit part known to `precision` digits.
  static PAdicPoint from_integer(int p, std::int64_t n, int precision = 0);
  /// p^v * (unit residue u mod p^precision).
  static PAdicPoint from_unit(int p, int v, std::int64_t unit_residue, int precision);

  PAdicPoint(int p, int valuation, std::vector<int> unit_digits);

  int prime() const { return p_; }
  bool is_zero() const { return zero_; }
  int valuation() const { return v_; }
  int precision() const { return static_cast<int>(digits_.size()); }
  const std::vector<int>& digits() const { return digits_; }

  /// |t| = p^{-v}; zero for the zero point.
  Rational norm() const;
  double norm_double() const;
  /// Unit part modulo p^k; throws std::domain_error if k exceeds the precision.
  std::int64_t unit_residue(int k) const;

  PAdicPoint operator*(const PAdicPoint& o) const;
  PAdicPoint inverse() const;
  PAdicPoint operator-() const;

  std::string to_string() const;

 private:
  int p_ = 2;
  int v_ = 0;
  bool zero_ = true;
  std::vector<int> digits_;
};

/// Largest digit count whose residues we can hold in 62 bits.
int max_precision(int p);

}  // namespace conductor_lab
